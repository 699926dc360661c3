#!/usr/bin/env python

# Geoconv
# Copyright 2026 the Geoconv contributors

# This program is bound to the Hippocratic License 2.1
# Full text is available here:
# https: // firstdonoharm.dev/version/2/1/license

# Further to adherence to the Hippocratic License, this program is
# free software: you can redistribute it and / or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version. Full text is available here:
# http: // www.gnu.org/licenses

# Where a conflict or dispute would arise between these two licenses, HLv2.1
# shall take precedence.

"""Growth benchmark: transform every member of a generated family and fit
output size against input size.
"""

import time
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, Dict, List, Tuple

import geoconvlib.config as config
from .calculus import SizeReport
from .constants import BENCH_COLUMNS
from .corpus import FAMILIES, gen_family
from .enums import Step
from .errors import BenchConfigError, GrowthError, PipelineError
from .formatter import Format
from .log import Log
from .pipeline import GrowthFit, barr_transform, fit_growth

@dataclass(frozen=True)
class BenchConfig:
    family: str = 'case-split'
    n_min: int = 2
    n_max: int = 50
    output_dir: str = './bench'
    workers: int = 1

    @classmethod
    def from_config(cls, **overrides) -> 'BenchConfig':
        """The `bench` section of the loaded config, with non-None overrides."""
        values = {k: config.bench[k] for k in cls.__dataclass_fields__
                  if config.bench.get(k) is not None}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def validate(self):
        if self.family not in FAMILIES:
            raise BenchConfigError(f"Unknown family '{self.family}', expected one of "
                                   f"{', '.join(FAMILIES)}")
        if self.n_min < 1:
            raise BenchConfigError(f'n_min must be at least 1, got {self.n_min}')
        if self.n_max < self.n_min:
            raise BenchConfigError(f'n_max ({self.n_max}) is less than n_min ({self.n_min})')
        if self.workers < 1:
            raise BenchConfigError(f'workers must be at least 1, got {self.workers}')

@dataclass
class BenchResult:
    config: BenchConfig
    sizes: Dict[int, Dict[Step, SizeReport]]
    fit: GrowthFit = None

    def rows(self) -> List[list]:
        rows = []
        for n in sorted(self.sizes):
            i, o = self.sizes[n][Step.INPUT], self.sizes[n][Step.OUTPUT]
            rows.append([n] + i.as_row() + o.as_row()
                        + [Format.ratio(o.symbol_count / i.symbol_count)])
        return rows

def _run_one(job: Tuple[str, int, str]) -> Tuple[int, Dict[Step, SizeReport]]:
    family, n, output_dir = job
    theory, goal, proof = gen_family(family, n)
    start = time.perf_counter()
    try:
        trace = barr_transform(proof, theory, goal)
    except PipelineError as e:
        if e.trace is not None:
            where = e.trace.write(Path(output_dir) / f'failed-{family}-{n}')
            Log.error(f'{family} n={n} failed, trace written to {where}')
        raise
    Log.info(f'{family} n={n}: {time.perf_counter() - start:.2f}s, '
             f'{trace.sizes[Step.OUTPUT].symbol_count} output symbols')
    return n, trace.sizes

def run_bench(cfg: BenchConfig, progress: Callable[[int, int], None] = None) -> BenchResult:
    """Generates, transforms and measures n_min..n_max, then writes
    bench.tsv and growth.tsv under cfg.output_dir.

    Args:
        cfg (BenchConfig): Validated before anything runs.
        progress (Callable): Called with (done, total) after each n.

    Raises:
        BenchConfigError: the configuration is invalid.
        PipelineError: a transform failed; its trace is written first.
    """
    cfg.validate()
    jobs = [(cfg.family, n, cfg.output_dir) for n in range(cfg.n_min, cfg.n_max + 1)]
    result = BenchResult(cfg, {})
    Log.info(f'Bench {cfg.family} n={cfg.n_min}..{cfg.n_max} on {cfg.workers} '
             f'{Format.pluralize("worker", cfg.workers)}')

    def collect(results):
        for n, sizes in results:
            result.sizes[n] = sizes
            if progress:
                progress(len(result.sizes), len(jobs))

    if cfg.workers > 1:
        with Pool(min(cfg.workers, len(jobs))) as pool:
            collect(pool.imap_unordered(_run_one, jobs))
    else:
        collect(map(_run_one, jobs))

    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / 'bench.tsv').write_text(Format.tsv(BENCH_COLUMNS, result.rows()))
    try:
        result.fit = fit_growth([result.sizes[n] for n in sorted(result.sizes)])
        (out / 'growth.tsv').write_text(Format.tsv(['measure', 'value'], result.fit.rows()))
    except GrowthError as e:
        Log.info(f'No growth fit: {e}')
    return result
