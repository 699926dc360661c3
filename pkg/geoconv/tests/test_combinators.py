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

from geoconvlib.builder import Build
from geoconvlib.calculus import check, size
from geoconvlib.classes import classify
from geoconvlib.combinators import *
from geoconvlib.enums import Mode
from geoconvlib.errors import ClassError, DerivationError
from geoconvlib.syntax import *
from geoconvlib.translation import Stability, e_translate
from make import Make

a = free('a')
x = bound('x')
P, Q = Atom('P', (a,)), Atom('Q', (a,))
Px = Atom('P', (x,))
ITEMS = range(1, 11)
MEMBERS = [
    ('in_q', embed_q, lambda f: f),
    ('in_r', embed_r, lambda f: N(neg(f))),
    ('in_j', embed_j, e_translate),
]

def args(rng, i):
    if i == 1:
        return dict(phi=Make.formula(rng, 3))
    if i in (9, 10):
        return dict(body=ForAll(bound('x9'), Make.formula(rng, 3, scope=('x9',))))
    return dict(phi=Make.formula(rng, 3), psi=Make.formula(rng, 3))

def ok(d, mode):
    report = check(d, mode)
    assert report.ok, str(report.violations[:1])
    return True

class TestLemma(object):

    @pytest.mark.parametrize('i', ITEMS)
    def test_atoms(self, i):
        kw = args(Make.rng(i), i) if i in (9, 10) else \
            dict(phi=P) if i == 1 else dict(phi=P, psi=Q)
        d = lemma(i, **kw)
        assert d.ante == ()
        assert alpha_equal(d.succ[0], statement(i, **kw))
        assert ok(d, LEMMA_MODES[i])

    @pytest.mark.parametrize('i', ITEMS)
    def test_random_instances(self, i):
        rng = Make.rng(30 + i)
        for _ in range(50):
            kw = args(rng, i)
            d = lemma(i, **kw)
            assert alpha_equal(d.succ[0], statement(i, **kw))
            assert ok(d, LEMMA_MODES[i])

    @pytest.mark.parametrize('i', ITEMS)
    def test_size_is_linear(self, i):
        def kw(phi, psi):
            if i in (9, 10):
                return dict(body=ForAll(x, phi))
            return dict(phi=phi) if i == 1 else dict(phi=phi, psi=psi)
        base = size(lemma(i, **kw(Px if i in (9, 10) else P, Q))).inference_count
        rng = Make.rng(60 + i)
        for _ in range(50):
            phi = Make.formula(rng, 4, scope=('x',)) if i in (9, 10) else Make.formula(rng, 4)
            psi = Make.formula(rng, 4)
            n = size(lemma(i, **kw(phi, psi))).inference_count
            assert n <= 2 * base + phi.symbols + psi.symbols

    def test_modes(self):
        assert [i for i in ITEMS if LEMMA_MODES[i] == Mode.MINIMAL] == \
            [1, 2, 3, 4, 5, 6, 7, 9, 10]
        assert LEMMA_MODES[8] == Mode.INTUITIONISTIC

    def test_item_8_needs_ex_falso(self):
        d = lemma(8, phi=BOT, psi=P)
        assert ok(d, Mode.INTUITIONISTIC)
        assert not check(d, Mode.MINIMAL).ok

    def test_item_9_and_10_statements(self):
        body = ForAll(x, Px)
        assert statement(9, body=body) == Imp(N(neg(body)), ForAll(x, N(neg(Px))))
        assert statement(10, body=Exists(x, Px)) == \
            Imp(NN(Exists(x, NN(Px))), NN(Exists(x, Px)))

    def test_hyp_forms(self):
        d = lemma_hyp(4, P, Q)
        st = statement(4, P, Q)
        assert d.ante == (st.left,)
        assert d.succ == (st.right,)

    def test_bad_arguments(self):
        with pytest.raises(DerivationError):
            lemma(11, phi=P)
        with pytest.raises(DerivationError):
            lemma(1, phi=P, psi=Q)
        with pytest.raises(DerivationError):
            lemma(3, phi=P)
        with pytest.raises(DerivationError):
            lemma(9, body=P)

class TestHelpers(object):

    def test_lift(self):
        d = lift(P)
        assert d.ante == (P,) and d.succ == (NN(P),)
        assert ok(d, Mode.MINIMAL)

    def test_nn_map(self):
        d = nn_map(Build.mp(Build.hyp(Imp(P, Q)), Build.hyp(P)), P)
        assert set(d.ante) == {Imp(P, Q), NN(P)}
        assert d.succ == (NN(Q),)
        assert ok(d, Mode.MINIMAL)

class TestEmbeddings(object):

    @staticmethod
    def verify(f, embed, lhs):
        d = embed(f)
        assert d.ante == ()
        goal = d.succ[0]
        assert alpha_equal(goal.left, lhs(f))
        if embed is embed_j:
            assert alpha_equal(goal.right, NN(f))
        else:
            assert alpha_equal(goal.right, e_translate(f))
        assert ok(d, Mode.INTUITIONISTIC)

    @pytest.mark.parametrize('flag, embed, lhs', MEMBERS)
    def test_random_members(self, flag, embed, lhs):
        rng = Make.rng(len(flag) + ord(flag[-1]))
        for _ in range(40):
            self.verify(Make.matching(rng, 4, lambda g: getattr(classify(g), flag)), embed, lhs)

    @pytest.mark.parametrize('flag, embed, lhs', MEMBERS)
    def test_exhaustive(self, flag, embed, lhs):
        members = [f for f in Make.all_formulas(2) if getattr(classify(f), flag)]
        assert members
        for f in members:
            self.verify(f, embed, lhs)

    def test_geometric_implications(self):
        rng = Make.rng(40)
        for _ in range(40):
            f = Make.matching(rng, 4, lambda g: classify(g).geometric_implication)
            assert ok(embed_q(f), Mode.INTUITIONISTIC)

    def test_positive_atoms_are_minimal(self):
        assert ok(embed_q(And(P, Exists(x, Px))), Mode.MINIMAL)
        assert ok(embed_j(Or(P, Q)), Mode.MINIMAL)

    def test_coherence_on_positive_formulas(self):
        rng = Make.rng(41)
        for _ in range(20):
            f = Make.positive(rng, 3)
            emb = Embedding()
            d = Build.intro(Build.cut_with(emb.q_hyp(f), emb.j_hyp(f)), f)
            assert d.conclusion.alpha_equal(lemma(1, phi=f).conclusion)
            assert ok(d, Mode.INTUITIONISTIC)

    def test_outside_the_class(self):
        with pytest.raises(ClassError):
            embed_r(P)
        with pytest.raises(ClassError):
            embed_j(ForAll(x, Px))
        with pytest.raises(ClassError):
            embed_q(Imp(Imp(P, Q), Q))

    def test_shared_stability(self):
        st = Stability()
        emb = Embedding(st)
        f = Imp(P, Q)
        emb.q_hyp(f)
        assert emb.stability is st
        assert st._backward
