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
import math
import os

import pytest

from geoconvlib.builder import Build
from geoconvlib.calculus import EMPTY, Infer, SizeReport, Theory, check
from geoconvlib.corpus import gen_family, load_entry, transform_corpus
from geoconvlib.enums import Mode, Step
from geoconvlib.errors import GrowthError, PipelineError
from geoconvlib.pipeline import barr_transform, fit_growth, growth_report
from geoconvlib.syntax import *
from geoconvlib.translation import TranslatedTheory

p, q = Atom('p', ()), Atom('q', ())
x = bound('x')

def all_p():
    entry = load_entry('toy')
    sample = entry.samples[0]
    assert sample.name == 'all-p'
    return entry, sample

def case_split_fit(sizes):
    traces = []
    for n in sizes:
        theory, goal, proof = gen_family('case-split', n)
        traces.append(barr_transform(proof, theory, goal))
    return growth_report(traces)

class TestTransform(object):

    def test_all_p(self):
        entry, sample = all_p()
        trace = barr_transform(sample.proof, entry.theory, sample.goal)
        assert trace.complete
        assert trace.output.ante == ()
        assert alpha_equal(trace.output.succ[0], sample.goal)
        assert check(trace.output, Mode.INTUITIONISTIC, entry.theory).ok
        assert set(trace.sizes) == set(Step)
        for step in Step:
            assert trace.derivation(step) is not None
            assert trace.sizes[step].inference_count >= 1

    def test_step_modes(self):
        entry, sample = all_p()
        trace = barr_transform(sample.proof, entry.theory)
        assert check(trace.step1, Mode.MINIMAL, TranslatedTheory.of(entry.theory).as_theory()).ok
        assert not check(trace.step1, Mode.MINIMAL, entry.theory).ok
        for step in (Step.STEP2, Step.STEP3, Step.STEP4, Step.STEP5):
            assert check(trace.derivation(step), Mode.INTUITIONISTIC, entry.theory).ok
        assert not any(f.has_placeholder for f in trace.step5.ante + trace.step5.succ)
        assert trace.step4.succ[0].has_placeholder

    def test_trivial_goal(self):
        d = Build.intro(Build.hyp(p), p)
        trace = barr_transform(d, EMPTY)
        assert trace.output.conclusion.alpha_equal(d.conclusion)
        assert check(trace.output, Mode.INTUITIONISTIC).ok

    def test_corpus(self):
        results = transform_corpus()
        assert len(results) == 22
        assert len(set(name for name, _ in results)) == 22
        for name, trace in results:
            assert trace.complete, name
            assert check(trace.output, Mode.INTUITIONISTIC, trace.theory).ok, name
            assert trace.output.conclusion.alpha_equal(trace.input.conclusion), name

    @pytest.mark.parametrize('family', ['swap', 'case-split'])
    def test_families(self, family):
        for n in range(1, 4):
            theory, goal, proof = gen_family(family, n)
            trace = barr_transform(proof, theory, goal)
            assert check(trace.output, Mode.INTUITIONISTIC, theory).ok

class TestPreconditions(object):

    def test_theory_outside_q(self):
        px, qx = Atom('P', (x,)), Atom('Q', (x,))
        theory = Theory('bad', (ForAll(x, Imp(Imp(px, qx), qx)),))
        with pytest.raises(PipelineError):
            barr_transform(Build.intro(Build.hyp(p), p), theory)

    def test_goal_not_geometric(self):
        f = Imp(p, q)
        with pytest.raises(PipelineError):
            barr_transform(Build.intro(Build.hyp(f), f), EMPTY)

    def test_root_with_antecedent(self):
        with pytest.raises(PipelineError):
            barr_transform(Infer.axiom(p), EMPTY)

    def test_goal_mismatch(self):
        with pytest.raises(PipelineError):
            barr_transform(Build.intro(Build.hyp(p), p), EMPTY, q)

    def test_input_does_not_check(self):
        px, qx = Atom('P', (x,)), Atom('Q', (x,))
        wrong = Infer.ax_theory(Theory('right', (ForAll(x, px),)), 0)
        with pytest.raises(PipelineError):
            barr_transform(wrong, Theory('wrong', (ForAll(x, qx),)))

class TestTraceFiles(object):

    def test_write(self, tmp_path):
        entry, sample = all_p()
        trace = barr_transform(sample.proof, entry.theory, sample.goal)
        out = trace.write(tmp_path / 'all-p')
        for step in Step:
            assert (out / f'{step.display_name}.proof').is_file()
        lines = (out / 'sizes.tsv').read_text().splitlines()
        assert len(lines) == 8
        assert lines[0].split('\t') == ['step', 'inference_count', 'symbol_count', 'height']
        assert lines[1].split('\t')[0] == 'input'
        assert lines[-1].split('\t')[0] == 'output'

class TestGrowth(object):

    def test_swap_family(self):
        traces = []
        for n in range(1, 5):
            theory, goal, proof = gen_family('swap', n)
            traces.append(barr_transform(proof, theory, goal))
        fit = growth_report(traces)
        assert len(fit.points) == 4
        assert [a for a, _ in fit.points] == sorted(a for a, _ in fit.points)
        assert fit.slope > 0
        assert set(fit.per_step) == {Step.STEP1, Step.STEP2, Step.STEP3, Step.STEP4, Step.STEP5}
        assert fit.max_ratio >= 1
        assert len(fit.rows()) == 1 + 5 + 2

    def test_case_split_is_near_linear(self):
        fit = case_split_fit(range(2, 21))
        assert len(fit.points) == 19
        assert 0 < fit.slope <= 4.0
        assert fit.ratio_of_ratios <= 1.5

    @pytest.mark.skipif(os.getenv('GEOCONV_FULL_GROWTH', '0') == '0',
                        reason='Set GEOCONV_FULL_GROWTH=1 to measure n up to 50')
    def test_case_split_up_to_50(self):
        fit = case_split_fit(range(2, 51))
        assert fit.slope <= 4.0
        assert fit.ratio_of_ratios <= 1.5

    def test_too_few_traces(self):
        traces = []
        for n in (1, 2):
            theory, goal, proof = gen_family('swap', n)
            traces.append(barr_transform(proof, theory, goal))
        with pytest.raises(GrowthError):
            growth_report(traces)

    def test_repeated_sizes(self):
        row = {s: SizeReport(1, 10, 1) for s in Step}
        with pytest.raises(GrowthError):
            fit_growth([row, row, row])

    def test_quadratic(self):
        sizes = [{s: SizeReport(1, n if s == Step.INPUT else n * n, 1) for s in Step}
                 for n in (40, 10, 20)]
        fit = fit_growth(sizes)
        assert math.isclose(fit.slope, 2, abs_tol=1e-9)
        assert math.isclose(fit.intercept, 0, abs_tol=1e-9)
        assert math.isclose(fit.ratio_of_ratios, 2)
        assert math.isclose(fit.max_ratio, 40)
        assert fit.points == ((10, 100), (20, 400), (40, 1600))
        for k in fit.per_step.values():
            assert math.isclose(k, 2, abs_tol=1e-9)
        assert fit.rows()[0] == ['end-to-end', '2.000']
