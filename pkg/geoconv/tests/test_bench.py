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
import pytest

import geoconvlib.config as config
from geoconvlib.bench import BenchConfig, run_bench
from geoconvlib.enums import Step
from geoconvlib.errors import BenchConfigError

def swap(tmp_path, **kwargs):
    values = dict(family='swap', n_min=1, n_max=3, output_dir=str(tmp_path))
    values.update(kwargs)
    return BenchConfig(**values)

class TestBenchConfig(object):

    def test_from_config(self):
        cfg = BenchConfig.from_config()
        assert cfg.family == 'case-split'
        assert (cfg.n_min, cfg.n_max, cfg.workers) == (2, 50, 1)

    def test_overrides(self):
        config.bench.n_max = 5
        cfg = BenchConfig.from_config(family='swap', n_min=None)
        assert cfg.family == 'swap'
        assert cfg.n_min == 2
        assert cfg.n_max == 5

    @pytest.mark.parametrize('kwargs', [
        dict(family='towers'),
        dict(n_min=0),
        dict(n_min=4, n_max=3),
        dict(workers=0),
    ])
    def test_invalid(self, tmp_path, kwargs):
        with pytest.raises(BenchConfigError):
            swap(tmp_path, **kwargs).validate()
        with pytest.raises(BenchConfigError):
            run_bench(swap(tmp_path, **kwargs))
        assert not (tmp_path / 'bench.tsv').exists()

class TestRunBench(object):

    def test_tables(self, tmp_path):
        calls = []
        result = run_bench(swap(tmp_path), lambda done, total: calls.append((done, total)))
        assert sorted(result.sizes) == [1, 2, 3]
        assert calls[-1] == (3, 3)
        lines = (tmp_path / 'bench.tsv').read_text().splitlines()
        assert len(lines) == 4
        assert lines[0].split('\t')[0] == 'n'
        for line, n in zip(lines[1:], (1, 2, 3)):
            cells = line.split('\t')
            assert len(cells) == 8
            assert int(cells[0]) == n
            assert int(cells[2]) == result.sizes[n][Step.INPUT].symbol_count
            assert int(cells[5]) == result.sizes[n][Step.OUTPUT].symbol_count
        assert result.fit is not None
        growth = (tmp_path / 'growth.tsv').read_text().splitlines()
        assert growth[0] == 'measure\tvalue'
        assert growth[1].startswith('end-to-end\t')

    def test_deterministic(self, tmp_path):
        run_bench(swap(tmp_path / 'a'))
        run_bench(swap(tmp_path / 'b'))
        for name in ('bench.tsv', 'growth.tsv'):
            assert (tmp_path / 'a' / name).read_text() == (tmp_path / 'b' / name).read_text()

    def test_workers(self, tmp_path):
        one = run_bench(swap(tmp_path / 'one'))
        two = run_bench(swap(tmp_path / 'two', workers=2))
        assert one.rows() == two.rows()

    def test_too_few_points(self, tmp_path):
        result = run_bench(swap(tmp_path, n_min=2, n_max=3))
        assert result.fit is None
        assert (tmp_path / 'bench.tsv').is_file()
        assert not (tmp_path / 'growth.tsv').exists()
