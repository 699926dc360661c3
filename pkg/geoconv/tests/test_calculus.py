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

from geoconvlib.calculus import *
from geoconvlib.calculus import cut as cut_any
from geoconvlib.enums import Mode, RuleKind
from geoconvlib.errors import DerivationError
from geoconvlib.syntax import *
from make import Make

a, b = free('a'), free('b')
x = bound('x')
P, Q, R = (Atom(n, (a,)) for n in 'PQR')
Px = Atom('P', (x,))

def leaf(ante, succ, kind=RuleKind.AX_ID):
    return Derivation(Sequent(tuple(ante), tuple(succ)), Rule(kind))

def messages(report):
    return [v.message for v in report.violations]

class TestAxioms(object):

    def test_identity_minimal(self):
        assert check(Infer.axiom(P), Mode.MINIMAL).ok

    def test_identity_on_compound_formulas(self):
        assert check(Infer.axiom(ForAll(x, Imp(Px, BOT))), Mode.MINIMAL).ok

    def test_identity_needs_a_shared_formula(self):
        report = check(leaf([P], [Q]), Mode.CLASSICAL)
        assert not report.ok
        assert report.violations[0].path == ()

    def test_ax_bot_forbidden_in_minimal(self):
        d = Infer.ax_bot((P, BOT), (Q,))
        assert 'AxBot forbidden in minimal' in messages(check(d, Mode.MINIMAL))
        assert check(d, Mode.INTUITIONISTIC).ok
        assert check(d, Mode.CLASSICAL).ok

    def test_ax_bot_needs_falsum(self):
        assert not check(leaf([P], [Q], RuleKind.AX_BOT), Mode.CLASSICAL).ok
        with pytest.raises(DerivationError):
            Infer.ax_bot((P,), (Q,))

    def test_theory_axiom_with_context(self):
        t = Theory('t', (ForAll(x, Px),))
        d = Infer.ax_theory(t, 0, (Q, R))
        assert check(d, Mode.MINIMAL, t).ok
        assert not check(d, Mode.MINIMAL).ok
        assert not check(Derivation(d.conclusion, Rule(RuleKind.AX_THEORY, index=3)),
                         Mode.MINIMAL, t).ok

    def test_theory_rejects_open_or_e_axioms(self):
        with pytest.raises(FormulaError):
            Theory('t', (P,))
        with pytest.raises(FormulaError):
            Theory('t', (ForAll(x, Imp(Px, E)),))
        assert len(Theory('t', (ForAll(x, Imp(Px, E)),), translated=True)) == 1

class TestRules(object):

    def test_eigenvariable_in_antecedent(self):
        # P(a) ⇒ P(a) generalised over a
        premise = Infer.axiom(P)
        bad = Derivation(Sequent((P,), (ForAll(x, Px),)), Rule(RuleKind.ALL_R, eigen=a),
                         (premise,))
        assert 'eigenvariable occurs in conclusion' in messages(check(bad, Mode.MINIMAL))
        with pytest.raises(DerivationError):
            Infer.all_r(premise, ForAll(x, Px), a)

    def test_succedent_bound(self):
        d = Infer.weak_r(Infer.axiom(P), Q)
        assert check(d, Mode.CLASSICAL).ok
        assert not check(d, Mode.INTUITIONISTIC).ok
        assert not check(d, Mode.MINIMAL).ok

    def test_excluded_middle_is_classical(self):
        # ⇒ P ∨ ¬P
        d = Infer.imp_r(Infer.weak_r(Infer.axiom(P), BOT))
        d = Infer.exch_r(Infer.or_r(d, Or(P, neg(P))), 0, 1)
        d = Infer.contr_r(Infer.or_r(d, Or(P, neg(P))))
        assert d.conclusion == Sequent((), (Or(P, neg(P)),))
        assert check(d, Mode.CLASSICAL).ok
        assert not check(d, Mode.INTUITIONISTIC).ok

    def test_exchange_moves_one_formula(self):
        d = Infer.weak_l(Infer.weak_l(Infer.axiom(P), Q), R)
        moved = Infer.exch_l(d, 0, 2)
        assert moved.ante == (Q, R, P)
        assert check(moved, Mode.MINIMAL).ok
        swapped = Derivation(Sequent((R, Q, P), d.succ), Rule(RuleKind.EXCH_L), (d,))
        assert not check(swapped, Mode.MINIMAL).ok

    def test_exchange_of_equal_formulas(self):
        d = Infer.weak_l(Infer.weak_l(Infer.axiom(P), Q), Q)
        same = Infer.exch_l(d, 1, 2)
        assert same.ante == d.ante == (P, Q, Q)
        assert check(same, Mode.MINIMAL).ok
        d = Infer.weak_r(Infer.weak_r(Infer.axiom(P), R), R)
        assert check(Infer.exch_r(d, 2, 1), Mode.CLASSICAL).ok

    def test_exchange_needs_a_moved_formula(self):
        d = Infer.weak_l(Infer.weak_l(Infer.axiom(P), Q), R)
        unchanged = Derivation(d.conclusion, Rule(RuleKind.EXCH_L), (d,))
        assert not check(unchanged, Mode.MINIMAL).ok

    def test_permuting_without_exchange(self):
        d = Infer.weak_l(Infer.weak_l(Infer.axiom(P), Q), R)
        permuted = Derivation(Sequent((P, R, Q), d.succ), d.rule, d.premises)
        assert check(d, Mode.MINIMAL).ok
        assert not check(permuted, Mode.MINIMAL).ok

    def test_cut(self):
        d = cut_any(Infer.axiom(P), Infer.imp_l(Infer.axiom(P), Infer.axiom(Q)))
        assert d.conclusion == Sequent((P, Imp(P, Q)), (Q,))
        assert check(d, Mode.MINIMAL).ok

    def test_cut_mismatch(self):
        with pytest.raises(DerivationError):
            Infer.cut(Infer.axiom(P), Infer.axiom(Q))
        with pytest.raises(DerivationError):
            cut_any(Infer.axiom(P), Infer.axiom(Q))

    def test_all_violations_are_reported(self):
        bad = Derivation(Sequent((P,), (Q,)), Rule(RuleKind.AND_R),
                         (leaf([P], [R]), leaf([Q], [R])))
        report = check(bad, Mode.MINIMAL)
        assert [v.path for v in report.violations] == [(), (0,), (1,)]

    def test_quantifier_rules(self):
        q = ForAll(x, Px)
        ex = Exists(x, Px)
        # ∀x P(x) ⇒ ∃x P(x)
        d = Infer.ex_r(Infer.all_l(Infer.axiom(P), q, a), ex, a)
        assert check(d, Mode.MINIMAL).ok
        # ∃x P(x) ⇒ ∃x P(x)
        d = Infer.ex_l(Infer.ex_r(Infer.axiom(P), ex, a), ex, a)
        assert check(d, Mode.MINIMAL).ok
        wrong = Derivation(d.conclusion, Rule(RuleKind.EX_L, eigen=b), d.premises)
        assert not check(wrong, Mode.MINIMAL).ok

    def test_witness_term_must_be_closed_under_binding(self):
        q = ForAll(x, Px)
        d = Infer.all_l(Infer.axiom(P), q, a)
        wrong = Derivation(d.conclusion, Rule(RuleKind.ALL_L, term=x), d.premises)
        assert 'witnessing term contains bound variables' in messages(check(wrong, Mode.MINIMAL))

class TestRandomDerivations(object):

    @pytest.mark.parametrize('mode', list(Mode))
    def test_builders_check(self, mode):
        rng = Make.rng(100 + mode.value)
        for _ in range(1000):
            d = Make.derivation(rng, mode, steps=10)
            assert check(d, mode).ok, str(check(d, mode).violations[:1])

    @pytest.mark.parametrize('mode', list(Mode))
    def test_mutations_are_rejected(self, mode):
        rng = Make.rng(200 + mode.value)
        for _ in range(1000):
            d = Make.derivation(rng, mode, steps=10)
            assert not check(Make.mutate(rng, d), mode).ok

    def test_flipped_rule_tags_are_rejected(self):
        rng = Make.rng(7)
        for _ in range(300):
            d = Make.derivation(rng, Mode.INTUITIONISTIC, steps=6)
            kinds = [k for k in RuleKind if k.arity == d.kind.arity and k != d.kind]
            flipped = Derivation(d.conclusion, Rule(rng.choice(kinds), d.rule.term,
                                                    d.rule.eigen, d.rule.index), d.premises)
            assert not check(flipped, Mode.INTUITIONISTIC).ok

    def test_mode_monotonicity(self):
        rng = Make.rng(8)
        for _ in range(300):
            d = Make.derivation(rng, Mode.MINIMAL)
            assert check(d, Mode.INTUITIONISTIC).ok
            assert check(d, Mode.CLASSICAL).ok

class TestWeakenTo(object):

    def test_weakening(self):
        d = weaken_to(Infer.axiom(P), [P, Q], [P])
        assert d.conclusion == Sequent((P, Q), (P,))
        assert d.kind == RuleKind.WEAK_L

    def test_identity(self):
        d = Infer.axiom(P)
        assert weaken_to(d, [P], [P]) is d

    def test_single_exchange(self):
        d = Infer.weak_l(Infer.axiom(P), Q)
        out = weaken_to(d, [Q, P], [P])
        assert out.kind == RuleKind.EXCH_L
        assert out.premises[0] is d

    def test_contracts_surplus_copies(self):
        d = Infer.weak_l(Infer.axiom(P), P)
        out = weaken_to(d, [P], [P])
        assert out.conclusion == Sequent((P,), (P,))
        assert check(out, Mode.MINIMAL).ok

    def test_missing_formula(self):
        with pytest.raises(DerivationError):
            weaken_to(Infer.weak_l(Infer.axiom(P), Q), [P], [P])

    def test_added_size_is_linear(self):
        rng = Make.rng(9)
        for _ in range(30):
            d = Make.derivation(rng, Mode.CLASSICAL)
            ante = list(d.ante) + [Make.atom(rng) for _ in range(3)]
            succ = [Make.atom(rng)] + list(d.succ)
            rng.shuffle(ante)
            out = weaken_to(d, ante, succ)
            assert check(out, Mode.CLASSICAL).ok
            added = size(out).inference_count - size(d).inference_count
            assert added <= 2 * (len(ante) + len(succ)) + 2

class TestSize(object):

    def test_leaf(self):
        assert size(Infer.axiom(P)) == SizeReport(1, 4, 1)

    def test_one_weakening(self):
        s = size(Infer.weak_l(Infer.axiom(P), Q))
        assert (s.inference_count, s.height) == (2, 2)
        assert s.symbol_count == 4 + 6

    def test_shared_subtrees_count_per_use(self):
        d = Infer.axiom(P)
        both = Infer.and_r(d, d)
        assert size(both).inference_count == 3
        assert size(both).symbol_count == 4 + 4 + 7
