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

"""Derivations mixing ¬ and ¬_E, and the embeddings of the classes Q, R, J.

Writing N for ¬_E, the ten lemma items are

    1   φ → NNφ
    2   (φ → ψ) → (NNφ → NNψ)
    3   N¬(φ ∧ ψ) → N¬φ ∧ N¬ψ
    4   NNφ ∧ NNψ → NN(φ ∧ ψ)
    5   N¬(φ ∨ ψ) → NN(N¬φ ∨ N¬ψ)
    6   NN(NNφ ∨ NNψ) → NN(φ ∨ ψ)
    7   N¬(φ → ψ) → (NNφ → N¬ψ)
    8   (N¬φ → NNψ) → NN(φ → ψ)          (intuitionistic)
    9   N¬∀x φ(x) → ∀x N¬φ(x)
    10  NN∃x NNφ(x) → NN∃x φ(x)

and every item but 8 is derivable in minimal logic. Each item has a
"hyp" form deriving the consequent from the antecedent as a hypothesis;
the embeddings are assembled from those.
"""


from .builder import Build
from .calculus import Derivation, Infer
from .classes import classify
from .enums import Mode
from .errors import ClassError, DerivationError
from .syntax import *
from .translation import Stability, e_translate

N, NN = neg_e, dneg_e

LEMMA_MODES = {i: Mode.MINIMAL for i in range(1, 11)}
LEMMA_MODES[8] = Mode.INTUITIONISTIC

LEMMA_ARGS = {i: ((True, True, False), 'φ and ψ') for i in range(2, 9)}
LEMMA_ARGS[1] = ((True, False, False), 'φ only')
LEMMA_ARGS[9] = LEMMA_ARGS[10] = ((False, False, True), 'a formula with a hole')

def nn_map(d: Derivation, x: Formula) -> Derivation:
    """Γ, X ⇒ Y  gives  Γ, NNX ⇒ NNY"""
    y = d.succ[0]
    no_x = Build.intro(Build.mp(Build.hyp(N(y)), d), x)
    return Build.intro(Build.mp(Build.hyp(NN(x)), no_x), N(y))

def lift(f: Formula) -> Derivation:
    """f ⇒ NNf"""
    return Build.intro(Build.mp(Build.hyp(N(f)), Build.hyp(f)), N(f))

def _fresh(*fs: Formula) -> Variable:
    return fresh_free_var(set().union(*(f.free_vars for f in fs)))

def _scheme(body) -> Scheme:
    if isinstance(body, Scheme):
        return body
    if isinstance(body, Quantified):
        return Scheme.of(body)
    raise DerivationError('Items 9 and 10 take a formula with a hole')

def statement(i: int, phi: Formula = None, psi: Formula = None, body=None) -> Imp:
    """The formula lemma item `i` proves."""
    _arity(i, phi, psi, body)
    if i == 1:
        return Imp(phi, NN(phi))
    if i == 2:
        return Imp(Imp(phi, psi), Imp(NN(phi), NN(psi)))
    if i == 3:
        return Imp(N(neg(And(phi, psi))), And(N(neg(phi)), N(neg(psi))))
    if i == 4:
        return Imp(And(NN(phi), NN(psi)), NN(And(phi, psi)))
    if i == 5:
        return Imp(N(neg(Or(phi, psi))), NN(Or(N(neg(phi)), N(neg(psi)))))
    if i == 6:
        return Imp(NN(Or(NN(phi), NN(psi))), NN(Or(phi, psi)))
    if i == 7:
        return Imp(N(neg(Imp(phi, psi))), Imp(NN(phi), N(neg(psi))))
    if i == 8:
        return Imp(Imp(N(neg(phi)), NN(psi)), NN(Imp(phi, psi)))
    s = _scheme(body)
    if i == 9:
        return Imp(N(neg(s.forall())), ForAll(s.var, N(neg(s.body))))
    return Imp(NN(Exists(s.var, NN(s.body))), NN(s.exists()))

def _arity(i: int, phi, psi, body):
    if i not in LEMMA_MODES:
        raise DerivationError(f'No lemma item {i}, expected 1 to 10')
    have = (phi is not None, psi is not None, body is not None)
    if have != LEMMA_ARGS[i][0]:
        raise DerivationError(f'Lemma item {i} takes {LEMMA_ARGS[i][1]}')

def _item3_part(phi: Formula, psi: Formula, right: bool) -> Derivation:
    """N¬(φ ∧ ψ) ⇒ N¬φ (or N¬ψ)"""
    conj = And(phi, psi)
    part = psi if right else phi
    absurd = Build.mp(Build.hyp(neg(part)), Build.proj(Build.hyp(conj), right))
    return Build.intro(Build.mp(Build.hyp(N(neg(conj))), Build.intro(absurd, conj)),
                       neg(part))

def _item9_at(s: Scheme, a: Variable) -> Derivation:
    """N¬∀x φ(x) ⇒ N¬φ(a)"""
    q = s.forall()
    inst = s.apply(a)
    absurd = Build.mp(Build.hyp(neg(inst)), Build.inst(Build.hyp(q), a))
    return Build.intro(Build.mp(Build.hyp(N(neg(q))), Build.intro(absurd, q)), neg(inst))

def lemma_hyp(i: int, phi: Formula = None, psi: Formula = None, body=None) -> Derivation:
    """Lemma item `i` as a derivation of  antecedent ⇒ consequent."""
    st = statement(i, phi, psi, body)
    if i == 1:
        return lift(phi)
    if i == 2:
        return Build.intro(nn_map(Build.mp(Build.hyp(st.left), Build.hyp(phi)), phi), NN(phi))
    if i == 3:
        return Build.conj(_item3_part(phi, psi, False), _item3_part(phi, psi, True))
    if i == 4:
        a, k = st.left, N(And(phi, psi))
        core = Build.mp(Build.hyp(k), Build.conj(Build.hyp(phi), Build.hyp(psi)))
        no_psi = Build.mp(Build.proj(Build.hyp(a), True), Build.intro(core, psi))
        no_phi = Build.mp(Build.proj(Build.hyp(a), False), Build.intro(no_psi, phi))
        return Build.intro(no_phi, k)
    if i == 5:
        a = st.left
        disj = Or(N(neg(phi)), N(neg(psi)))
        b = N(disj)
        split = Build.cases(Build.mp(Build.hyp(neg(phi)), Build.hyp(phi)),
                            Build.mp(Build.hyp(neg(psi)), Build.hyp(psi)), Or(phi, psi))
        e = Build.mp(Build.hyp(a), Build.intro(split, Or(phi, psi)))
        right = Build.mp(Build.hyp(b), Build.inj(Build.intro(e, neg(psi)), disj))
        left = Build.mp(Build.hyp(b), Build.inj(Build.intro(right, neg(phi)), disj))
        return Build.intro(left, b)
    if i == 6:
        a, k = st.left, N(Or(phi, psi))
        disj = Or(NN(phi), NN(psi))
        def case(x):
            no_x = Build.intro(Build.mp(Build.hyp(k), Build.inj(Build.hyp(x), Or(phi, psi))), x)
            return Build.mp(Build.hyp(NN(x)), no_x)
        split = Build.cases(case(phi), case(psi), disj)
        return Build.intro(Build.mp(Build.hyp(a), Build.intro(split, disj)), k)
    if i == 7:
        a, imp = st.left, Imp(phi, psi)
        absurd = Build.mp(Build.hyp(neg(psi)), Build.mp(Build.hyp(imp), Build.hyp(phi)))
        e = Build.mp(Build.hyp(a), Build.intro(absurd, imp))
        e = Build.mp(Build.hyp(NN(phi)), Build.intro(e, phi))
        return Build.intro(Build.intro(e, neg(psi)), NN(phi))
    if i == 8:
        a, imp = st.left, Imp(phi, psi)
        k = N(imp)
        explode = Build.bot_elim(Build.mp(Build.hyp(neg(phi)), Build.hyp(phi)), psi)
        no_neg = Build.intro(Build.mp(Build.hyp(k), Build.intro(explode, phi)), neg(phi))
        nn_psi = Build.mp(Build.hyp(a), no_neg)
        no_psi = Build.intro(Build.mp(Build.hyp(k), Build.intro(Build.hyp(psi), phi)), psi)
        return Build.intro(Build.mp(nn_psi, no_psi), k)
    s = _scheme(body)
    a = _fresh(s.forall())
    if i == 9:
        return Build.gen(_item9_at(s, a), a, st.right)
    inner = Exists(s.var, NN(s.body))
    k = N(s.exists())
    at = s.apply(a)
    no_at = Build.intro(Build.mp(Build.hyp(k), Build.witness(Build.hyp(at), s.exists(), a)), at)
    opened = Build.unpack(Build.mp(Build.hyp(NN(at)), no_at), inner, a)
    return Build.intro(Build.mp(Build.hyp(st.left), Build.intro(opened, inner)), k)

def lemma(i: int, phi: Formula = None, psi: Formula = None, body=None) -> Derivation:
    """A derivation of  ⇒ statement(i, ...)  checking in LEMMA_MODES[i]."""
    st = statement(i, phi, psi, body)
    return Build.intro(lemma_hyp(i, phi, psi, body), st.left)

class Embedding:
    """Derivations of φ ⇒ φ^E (φ ∈ Q), N¬ψ ⇒ ψ^E (ψ ∈ R) and
    θ^E ⇒ NNθ (θ ∈ J), by simultaneous recursion on the classes.

    One instance shares its stability derivations across calls.
    """

    def __init__(self, stability: Stability = None):
        self.stability = stability or Stability()

    @staticmethod
    def _require(f: Formula, flag: str, name: str):
        if not getattr(classify(f), flag):
            raise ClassError(f"'{f}' is not in {name}")

    def q_hyp(self, f: Formula) -> Derivation:
        """φ ⇒ φ^E"""
        self._require(f, 'in_q', 'Q')
        t = e_translate(f)
        if isinstance(f, Falsum):
            return Infer.ax_bot((f,), (E,))
        if isinstance(f, Atom):
            return lift(f)
        if isinstance(f, And):
            return Build.conj(
                Build.cut_with(Build.proj(Build.hyp(f), False), self.q_hyp(f.left)),
                Build.cut_with(Build.proj(Build.hyp(f), True), self.q_hyp(f.right)))
        if isinstance(f, Or):
            disj = t.left.left
            split = Build.cases(Build.inj(self.q_hyp(f.left), disj),
                                Build.inj(self.q_hyp(f.right), disj), f)
            return Build.cut_with(split, lift(disj))
        if isinstance(f, ForAll):
            a = _fresh(f)
            body = Build.cut_with(Build.inst(Build.hyp(f), a), self.q_hyp(f.instantiate(a)))
            return Build.gen(body, a, t)
        if isinstance(f, Exists):
            a = _fresh(f)
            ex = t.left.left
            opened = Build.unpack(Build.witness(self.q_hyp(f.instantiate(a)), ex, a), f, a)
            return Build.cut_with(opened, lift(ex))
        # J → Q
        j, q = f.left, f.right
        q_t = e_translate(q)
        nn_q = nn_map(Build.mp(Build.hyp(f), Build.hyp(j)), j)
        nn_q = Build.cut_with(self.j_hyp(j), nn_q)
        to_q_t = Build.cut_with(nn_map(self.q_hyp(q), q), self.stability.backward(q_t))
        return Build.intro(Build.cut_with(nn_q, to_q_t), e_translate(j))

    def r_hyp(self, f: Formula) -> Derivation:
        """N¬ψ ⇒ ψ^E"""
        self._require(f, 'in_r', 'R')
        if isinstance(f, Falsum):
            return Build.mp(Build.hyp(N(neg(f))), Build.intro(Build.hyp(f), f))
        if isinstance(f, And):
            return Build.conj(
                Build.cut_with(_item3_part(f.left, f.right, False), self.r_hyp(f.left)),
                Build.cut_with(_item3_part(f.left, f.right, True), self.r_hyp(f.right)))
        if isinstance(f, Or):
            disj = Or(N(neg(f.left)), N(neg(f.right)))
            target = e_translate(f).left.left
            split = Build.cases(Build.inj(self.r_hyp(f.left), target),
                                Build.inj(self.r_hyp(f.right), target), disj)
            return Build.cut_with(lemma_hyp(5, f.left, f.right), nn_map(split, disj))
        if isinstance(f, ForAll):
            s = Scheme.of(f)
            a = _fresh(f)
            body = Build.cut_with(_item9_at(s, a), self.r_hyp(s.apply(a)))
            return Build.gen(body, a, e_translate(f))
        # J → R
        j, r = f.left, f.right
        j_t = e_translate(j)
        nn_j = self.j_hyp(j)
        neg_r = Build.mp(lemma_hyp(7, j, r), nn_j)
        return Build.intro(Build.cut_with(neg_r, self.r_hyp(r)), j_t)

    def j_hyp(self, f: Formula) -> Derivation:
        """θ^E ⇒ NNθ"""
        self._require(f, 'in_j', 'J')
        if isinstance(f, Falsum):
            return Build.intro(Build.hyp(E), N(f))
        if isinstance(f, Atom):
            return Build.hyp(NN(f))
        if isinstance(f, And):
            t = e_translate(f)
            parts = Build.conj(
                Build.cut_with(Build.proj(Build.hyp(t), False), self.j_hyp(f.left)),
                Build.cut_with(Build.proj(Build.hyp(t), True), self.j_hyp(f.right)))
            return Build.cut_with(parts, lemma_hyp(4, f.left, f.right))
        if isinstance(f, Or):
            disj = e_translate(f).left.left
            target = Or(NN(f.left), NN(f.right))
            split = Build.cases(Build.inj(self.j_hyp(f.left), target),
                                Build.inj(self.j_hyp(f.right), target), disj)
            return Build.cut_with(nn_map(split, disj), lemma_hyp(6, f.left, f.right))
        if isinstance(f, Exists):
            s = Scheme.of(f)
            a = _fresh(f)
            ex = e_translate(f).left.left
            inner = Exists(s.var, NN(s.body))
            opened = Build.unpack(Build.witness(self.j_hyp(s.apply(a)), inner, a), ex, a)
            return Build.cut_with(nn_map(opened, ex), lemma_hyp(10, body=s))
        # R → J
        r, j = f.left, f.right
        t = e_translate(f)
        j_of = Build.cut_with(Build.mp(Build.hyp(t), self.r_hyp(r)), self.j_hyp(j))
        return Build.cut_with(Build.intro(j_of, N(neg(r))), lemma_hyp(8, r, j))

def embed_q(f: Formula) -> Derivation:
    """⇒ φ → φ^E for φ ∈ Q"""
    return Build.intro(Embedding().q_hyp(f), f)

def embed_r(f: Formula) -> Derivation:
    """⇒ ¬_E¬ψ → ψ^E for ψ ∈ R"""
    return Build.intro(Embedding().r_hyp(f), N(neg(f)))

def embed_j(f: Formula) -> Derivation:
    """⇒ θ^E → ¬_E¬_E θ for θ ∈ J"""
    return Build.intro(Embedding().j_hyp(f), e_translate(f))
