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

"""The end-to-end transform: a classical derivation of a geometric
implication in a theory whose axioms are in Q becomes an intuitionistic
derivation of the same sequent.

    input   ⇒ φ, classical, in T
    step1   ⇒ φ^E, minimal, in T^E
    step2   ⇒ φ^E, intuitionistic, in T
    step3   ψ ⇒ θ^E
    step4   ψ ⇒ ¬_E¬_E θ
    step5   ψ ⇒ (θ → θ) → θ
    output  ⇒ φ, intuitionistic, in T

Every artifact is kept in the trace and re-checked in its mode.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .builder import Build
from .calculus import Derivation, Infer, SizeReport, Theory, check, size, weaken_to
from .classes import classify, validate_theory
from .combinators import Embedding
from .constants import SIZE_COLUMNS
from .enums import Mode, Requirement, RuleKind, Step
from .errors import GeoconvError, GrowthError, PipelineError
from .formatter import Format
from .log import Log
from .substitution import derivation_vars, subst_placeholder_deriv
from .syntax import *
from .translation import TranslatedTheory, translate_derivation

@dataclass
class PipelineTrace:
    theory: Theory
    goal: Formula
    input: Derivation
    step1: Optional[Derivation] = None
    step2: Optional[Derivation] = None
    step3: Optional[Derivation] = None
    step4: Optional[Derivation] = None
    step5: Optional[Derivation] = None
    output: Optional[Derivation] = None
    sizes: Dict[Step, SizeReport] = field(default_factory=dict)

    def derivation(self, step: Step) -> Optional[Derivation]:
        return getattr(self, step.display_name)

    def record(self, step: Step, d: Derivation):
        """Stores `d` as `step` and measures it."""
        setattr(self, step.display_name, d)
        self.sizes[step] = size(d)
        Log.info(f'{self.theory.name}: {step.display_name} '
                 f'{" ".join(str(x) for x in self.sizes[step].as_row())}')

    @property
    def complete(self) -> bool:
        return self.output is not None

    def write(self, directory) -> Path:
        """Writes one derivation file per recorded step and a sizes.tsv."""
        out = Path(directory)
        out.mkdir(parents=True, exist_ok=True)
        rows = []
        for step in Step:
            d = self.derivation(step)
            if d is None:
                continue
            (out / f'{step.display_name}.proof').write_text(Format.derivation(d))
            rows.append(Format.sizes_row(step.display_name, self.sizes[step]))
        (out / 'sizes.tsv').write_text(Format.tsv(SIZE_COLUMNS, rows))
        return out

def _verify(trace: PipelineTrace, step: Step, theory: Theory):
    report = check(trace.derivation(step), step.mode, theory)
    if not report.ok:
        raise PipelineError(f'{step.display_name} does not check in '
                            f'{step.mode.display_name} mode: {report.violations[0]}', trace)

def _discharge_axioms(d: Derivation, theory: Theory, emb: Embedding) -> Derivation:
    """Replaces every AxTheory leaf for ψ^E by a cut of the T axiom ψ with
    a derivation of ψ ⇒ ψ^E.
    """
    discharged: Dict[int, Derivation] = {}
    done: Dict[int, Derivation] = {}
    stack = [d]
    while stack:
        node = stack[-1]
        if id(node) in done:
            stack.pop()
            continue
        pending = [p for p in node.premises if id(p) not in done]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        if node.kind == RuleKind.AX_THEORY:
            i = node.rule.index
            if i not in discharged:
                axiom = theory.axioms[i]
                discharged[i] = Build.cut_with(Infer.ax_theory(theory, i), emb.q_hyp(axiom))
            done[id(node)] = weaken_to(discharged[i], node.ante, node.succ)
            continue
        premises = tuple(done[id(p)] for p in node.premises)
        if all(a is b for a, b in zip(premises, node.premises)):
            done[id(node)] = node
        else:
            done[id(node)] = Derivation(node.conclusion, node.rule, premises)
    return done[id(d)]

def _strip(d: Derivation, phi: Formula) -> Tuple[Derivation, Formula, List[Tuple[ForAll, Variable]]]:
    """Instantiates the ∀-prefix of φ^E with fresh variables.

    Returns the instantiated derivation, the instantiated matrix of φ and
    the prefix as (quantifier, variable) pairs, quantifiers instantiated
    by the variables before them.
    """
    taken = derivation_vars(d) | phi.free_vars
    prefix = []
    matrix = phi
    while isinstance(matrix, ForAll):
        a = fresh_free_var(taken)
        taken.add(a.name)
        prefix.append((matrix, a))
        d = Build.inst(d, a)
        matrix = matrix.instantiate(a)
    return d, matrix, prefix

def barr_transform(d: Derivation, theory: Theory, phi: Formula = None) -> PipelineTrace:
    """Turns a classical derivation of  ⇒ φ  into an intuitionistic one.

    Args:
        d (Derivation): Classical derivation in `theory` with root ⇒ φ.
        theory (Theory): Axioms in Q (geometric axioms qualify).
        phi (Formula): The goal, a geometric implication. Defaults to the
                       root succedent of `d`.

    Returns:
        PipelineTrace: Every intermediate derivation with its sizes.

    Raises:
        PipelineError: A precondition fails or a step does not re-check.
    """
    if len(d.succ) != 1 or d.ante:
        raise PipelineError(f'Root must have the shape ⇒ φ, found {d.conclusion}')
    phi = phi if phi is not None else d.succ[0]
    if phi.key != d.succ[0].key:
        raise PipelineError(f"Root proves '{d.succ[0]}', not '{phi}'")
    failures = validate_theory(theory, Requirement.IN_Q).failures
    if failures:
        i, axiom = failures[0]
        raise PipelineError(f"Axiom {i} of '{theory.name}' is not in Q: {axiom}")
    if not classify(phi).geometric_implication:
        raise PipelineError(f"'{phi}' is not a geometric implication")
    report = check(d, Mode.CLASSICAL, theory)
    if not report.ok:
        raise PipelineError(f'Input does not check classically: {report.violations[0]}')

    trace = PipelineTrace(theory, phi, d)
    trace.sizes[Step.INPUT] = size(d)
    emb = Embedding()
    try:
        trace.record(Step.STEP1, translate_derivation(d, theory, verify=False))
        _verify(trace, Step.STEP1, TranslatedTheory.of(theory).as_theory())

        trace.record(Step.STEP2, _discharge_axioms(trace.step1, theory, emb))
        _verify(trace, Step.STEP2, theory)

        stripped, matrix, prefix = _strip(trace.step2, phi)
        if isinstance(matrix, Imp):
            psi, theta = matrix.left, matrix.right
            trace.record(Step.STEP3, Build.mp(stripped, emb.q_hyp(psi)))
        else:
            # A positive goal has no hypothesis to discharge.
            psi, theta = None, matrix
            trace.record(Step.STEP3, stripped)
        _verify(trace, Step.STEP3, theory)

        trace.record(Step.STEP4, Build.cut_with(trace.step3, emb.j_hyp(theta)))
        _verify(trace, Step.STEP4, theory)

        trace.record(Step.STEP5, subst_placeholder_deriv(trace.step4, theta, theory))
        _verify(trace, Step.STEP5, theory)

        out = Build.mp(trace.step5, Build.intro(Build.hyp(theta), theta))
        if psi is not None:
            out = Build.intro(out, psi)
        for q, a in reversed(prefix):
            out = Build.gen(out, a, q)
        trace.record(Step.OUTPUT, out)
        _verify(trace, Step.OUTPUT, theory)
    except PipelineError:
        raise
    except GeoconvError as e:
        raise PipelineError(f'Transform failed: {e}', trace) from e

    if not trace.output.conclusion.alpha_equal(d.conclusion):
        raise PipelineError(f'Output root {trace.output.conclusion} differs from '
                            f'input root {d.conclusion}', trace)
    return trace

@dataclass(frozen=True)
class GrowthFit:
    """Log-log least-squares fit of output against input symbol counts.

    `ratio_of_ratios` is the largest factor by which the output/input size
    ratio grows between consecutive input sizes; it stays near 1 under
    polynomial growth.
    """
    slope: float
    intercept: float
    max_ratio: float
    ratio_of_ratios: float
    per_step: Dict[Step, float]
    points: Tuple[Tuple[int, int], ...]

    def rows(self) -> List[List[str]]:
        rows = [['end-to-end', Format.ratio(self.slope)]]
        rows += [[s.display_name, Format.ratio(k)] for s, k in self.per_step.items()]
        rows += [['max_ratio', Format.ratio(self.max_ratio)],
                 ['ratio_of_ratios', Format.ratio(self.ratio_of_ratios)]]
        return rows

def _slope(xs: Sequence[int], ys: Sequence[int]) -> Tuple[float, float]:
    slope, intercept = np.polyfit(np.log(xs), np.log(ys), 1)
    return float(slope), float(intercept)

def growth_report(traces: Sequence[PipelineTrace]) -> GrowthFit:
    """Fits output size against input size over complete traces.

    Raises:
        GrowthError: fewer than three distinct input sizes.
    """
    return fit_growth([t.sizes for t in traces if t.complete])

def fit_growth(sizes: Sequence[Dict[Step, SizeReport]]) -> GrowthFit:
    """growth_report over bare size tables, one per transform."""
    done = sorted(sizes, key=lambda s: s[Step.INPUT].symbol_count)
    xs = [s[Step.INPUT].symbol_count for s in done]
    if len(set(xs)) < 3:
        raise GrowthError(f'Need at least 3 traces with distinct input sizes, '
                          f'found {len(set(xs))}')
    ys = [s[Step.OUTPUT].symbol_count for s in done]
    slope, intercept = _slope(xs, ys)
    ratios = [y / x for x, y in zip(xs, ys)]
    steps = [s for s in Step if s not in (Step.INPUT, Step.OUTPUT)]
    per_step = {step: _slope(xs, [s[step].symbol_count for s in done])[0] for step in steps}
    fit = GrowthFit(slope, intercept, max(ratios),
                    max(b / a for a, b in zip(ratios, ratios[1:])),
                    per_step, tuple(zip(xs, ys)))
    Log.info(f'Growth over {len(done)} traces: slope {Format.ratio(slope)}, '
             f'max ratio {Format.ratio(fit.max_ratio)}')
    return fit
