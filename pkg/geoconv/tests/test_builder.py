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
from geoconvlib.calculus import Infer, Sequent, check
from geoconvlib.enums import Mode
from geoconvlib.errors import DerivationError
from geoconvlib.syntax import *

a, b = free('a'), free('b')
x = bound('x')
P, Q, R = (Atom(n, (a,)) for n in 'PQR')
Px = Atom('P', (x,))

def minimal(d):
    return check(d, Mode.MINIMAL).ok

class TestBuild(object):

    def test_intro(self):
        d = Build.intro(Build.hyp(P), P)
        assert d.conclusion == Sequent((), (Imp(P, P),))
        assert minimal(d)

    def test_intro_absent_assumption(self):
        # Weakens the assumption in first.
        d = Build.intro(Build.hyp(P), Q)
        assert d.conclusion == Sequent((P,), (Imp(Q, P),))
        assert minimal(d)

    def test_mp(self):
        d = Build.mp(Build.hyp(Imp(P, Q)), Build.hyp(P))
        assert set(d.ante) == {P, Imp(P, Q)}
        assert d.succ == (Q,)
        assert minimal(d)

    def test_mp_mismatch(self):
        with pytest.raises(DerivationError):
            Build.mp(Build.hyp(Imp(P, Q)), Build.hyp(R))
        with pytest.raises(DerivationError):
            Build.mp(Build.hyp(P), Build.hyp(P))

    def test_conj_and_proj(self):
        d = Build.conj(Build.hyp(P), Build.hyp(Q))
        assert d.succ == (And(P, Q),)
        assert Build.proj(d).succ == (P,)
        assert Build.proj(d, right=True).succ == (Q,)
        assert minimal(Build.proj(d, right=True))

    def test_cases(self):
        # P ∨ Q ⇒ Q ∨ P
        d = Build.cases(Build.inj(Build.hyp(P), Or(Q, P)),
                        Build.inj(Build.hyp(Q), Or(Q, P)), Or(P, Q))
        assert d.conclusion == Sequent((Or(P, Q),), (Or(Q, P),))
        assert minimal(d)

    def test_elim_or(self):
        d = Build.elim_or(Build.hyp(Or(P, P)), Build.hyp(P), Build.hyp(P))
        assert d.conclusion == Sequent((Or(P, P),), (P,))
        assert minimal(d)

    def test_gen_and_inst(self):
        d = Build.gen(Build.intro(Build.hyp(P), P), a)
        assert d.succ[0].is_sentence
        back = Build.inst(d, b)
        assert back.succ == (Imp(Atom('P', (b,)), Atom('P', (b,))),)
        assert minimal(back)

    def test_gen_eigenvariable_condition(self):
        with pytest.raises(DerivationError):
            Build.gen(Build.hyp(P), a)

    def test_witness_and_unpack(self):
        ex = Exists(x, Px)
        d = Build.unpack(Build.witness(Build.hyp(P), ex, a), ex, a)
        assert d.conclusion == Sequent((ex,), (ex,))
        assert minimal(d)

    def test_bot_elim_is_intuitionistic(self):
        d = Build.bot_elim(Build.hyp(BOT), P)
        assert d.conclusion == Sequent((BOT,), (P,))
        assert check(d, Mode.INTUITIONISTIC).ok
        assert not minimal(d)

    def test_tidy(self):
        d = Infer.weak_l(Build.hyp(P), P)
        assert Build.tidy(d).ante == (P,)
        assert Build.tidy(Build.hyp(P)).ante == (P,)

    def test_cut_with(self):
        d = Build.cut_with(Build.hyp(P), Build.intro(Build.hyp(Q), P))
        assert d.conclusion == Sequent((Q, P), (Imp(P, Q),)) or \
            d.conclusion == Sequent((P, Q), (Imp(P, Q),))
        assert minimal(d)

    def test_needs_single_goal(self):
        with pytest.raises(DerivationError):
            Build.intro(Infer.weak_r(Build.hyp(P), Q), P)
