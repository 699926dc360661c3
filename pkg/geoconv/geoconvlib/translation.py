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

"""The E-negative translation and the translation of classical derivations.

A classical node Γ ⇒ δ1, ..., δk becomes a minimal derivation of
Γ^E, δ1^E → E, ..., δk^E → E ⇒ E; at the root, stability turns
Γ^E, δ^E → E ⇒ E into Γ^E ⇒ δ^E.

    e_translate: the formula translation.
    translate_derivation: the derivation translation.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .builder import Build
from .calculus import Derivation, Infer, Theory, check, weaken_to
from .enums import Mode, RuleKind
from .errors import DerivationError, FormulaError
from .syntax import *
from .tools import first

def _e_translate(f: Formula, memo: Dict[int, Formula]) -> Formula:
    if id(f) in memo:
        return memo[id(f)]
    if isinstance(f, Atom):
        out = dneg_e(f)
    elif isinstance(f, Falsum):
        out = E
    elif isinstance(f, Placeholder):
        raise FormulaError('Cannot translate a formula that already contains E')
    elif isinstance(f, And):
        out = And(_e_translate(f.left, memo), _e_translate(f.right, memo))
    elif isinstance(f, Imp):
        out = Imp(_e_translate(f.left, memo), _e_translate(f.right, memo))
    elif isinstance(f, Or):
        out = dneg_e(Or(_e_translate(f.left, memo), _e_translate(f.right, memo)))
    elif isinstance(f, ForAll):
        out = ForAll(f.var, _e_translate(f.body, memo))
    else:
        out = dneg_e(Exists(f.var, _e_translate(f.body, memo)))
    memo[id(f)] = out
    return out

def e_translate(f: Formula) -> Formula:
    """φ^E: atoms and ∨, ∃ get ¬_E¬_E, ⊥ becomes E, the rest is homomorphic."""
    return _e_translate(f, {})

def gg_translate(f: Formula) -> Formula:
    """The Gödel-Gentzen negative translation with ⊥."""
    if isinstance(f, Atom):
        return neg(neg(f))
    if isinstance(f, Falsum):
        return f
    if isinstance(f, Placeholder):
        raise FormulaError('Cannot translate a formula containing E')
    if isinstance(f, (And, Imp)):
        return type(f)(gg_translate(f.left), gg_translate(f.right))
    if isinstance(f, Or):
        return neg(And(neg(gg_translate(f.left)), neg(gg_translate(f.right))))
    if isinstance(f, ForAll):
        return ForAll(f.var, gg_translate(f.body))
    return neg(ForAll(f.var, neg(gg_translate(f.body))))

@dataclass(frozen=True)
class TranslatedTheory:
    base: Theory
    translated_axioms: Tuple[Formula, ...]

    @classmethod
    def of(cls, theory: Theory) -> 'TranslatedTheory':
        return cls(theory, tuple(e_translate(a) for a in theory.axioms))

    def as_theory(self) -> Theory:
        """T^E, for checking translated derivations."""
        return Theory(f'{self.base.name}^E', self.translated_axioms, translated=True)

def _is_neg_e(f: Formula) -> bool:
    return isinstance(f, Imp) and isinstance(f.right, Placeholder)

class Stability:
    """Minimal derivations of ¬_E¬_E F ⇒ F and F ⇒ ¬_E¬_E F for every F built
    from E by ¬_E, ∧, → and ∀, memoized up to renaming of bound variables.
    """

    def __init__(self):
        self._backward: Dict[tuple, Derivation] = {}

    def backward(self, f: Formula) -> Derivation:
        """¬_E¬_E F ⇒ F"""
        if f.key not in self._backward:
            self._backward[f.key] = self._build(f)
        return self._backward[f.key]

    @staticmethod
    def forward(f: Formula) -> Derivation:
        """F ⇒ ¬_E¬_E F"""
        return Build.intro(Build.mp(Build.hyp(neg_e(f)), Build.hyp(f)), neg_e(f))

    @staticmethod
    def _dneg_part(nn_whole: Formula, whole: Formula, part: Formula, get) -> Derivation:
        """¬_E¬_E W ⇒ ¬_E¬_E A, given `get` deriving A from W (W ⇒ A)."""
        inner = Build.mp(Build.hyp(neg_e(part)), get(Build.hyp(whole)))
        return Build.intro(Build.mp(Build.hyp(nn_whole), Build.intro(inner, whole)),
                           neg_e(part))

    def _build(self, f: Formula) -> Derivation:
        nn = dneg_e(f)
        if isinstance(f, Placeholder):
            return Build.mp(Build.hyp(nn), Build.intro(Build.hyp(E), E))
        if _is_neg_e(f):
            # Triple negation collapses: assume X, lift it to ¬_E¬_E X.
            x = f.left
            lifted = Build.intro(Build.mp(Build.hyp(neg_e(x)), Build.hyp(x)), neg_e(x))
            return Build.intro(Build.mp(Build.hyp(nn), lifted), x)
        if isinstance(f, And):
            parts = [Build.cut_with(
                self._dneg_part(nn, f, p, lambda d, right=right: Build.proj(d, right)),
                self.backward(p)) for p, right in ((f.left, False), (f.right, True))]
            return Build.conj(*parts)
        if isinstance(f, Imp):
            a, b = f.left, f.right
            nn_b = self._dneg_part(nn, f, b, lambda d: Build.mp(d, Build.hyp(a)))
            return Build.intro(Build.cut_with(nn_b, self.backward(b)), a)
        if isinstance(f, ForAll):
            a = fresh_free_var(f.free_vars)
            body = f.instantiate(a)
            nn_body = self._dneg_part(nn, f, body, lambda d: Build.inst(d, a))
            return Build.gen(Build.cut_with(nn_body, self.backward(body)), a, f)
        raise FormulaError(f"'{f}' is not in the image of the E-translation")

def stability(f: Formula) -> Tuple[Derivation, Derivation]:
    """Minimal derivations of ¬_E¬_E φ^E ⇒ φ^E and φ^E ⇒ ¬_E¬_E φ^E."""
    t = e_translate(f)
    return Stability().backward(t), Stability.forward(t)

class _Translator:

    def __init__(self, theory: Theory):
        self.theory = TranslatedTheory.of(theory)
        self.stability = Stability()
        self._formulas: Dict[tuple, Formula] = {}
        self.axioms = self.theory.as_theory()

    def tr(self, f: Formula) -> Formula:
        if f.key not in self._formulas:
            self._formulas[f.key] = e_translate(f)
        return self._formulas[f.key]

    def target(self, node: Derivation) -> List[Formula]:
        return [self.tr(g) for g in node.ante] + [neg_e(self.tr(d)) for d in node.succ]

    def fit(self, d: Derivation, node: Derivation) -> Derivation:
        return weaken_to(d, self.target(node), (E,))

    def node(self, node: Derivation, ts: List[Derivation]) -> Derivation:
        kind = node.kind
        if kind.is_structural:
            return self.fit(ts[0], node)
        return self.fit(getattr(self, f'_{kind.name.lower()}')(node, ts), node)

    def _ax_id(self, node, ts):
        succ = {g.key for g in node.succ}
        f = self.tr(first(node.ante, where=lambda g: g.key in succ))
        return Build.mp(Build.hyp(neg_e(f)), Build.hyp(f))

    def _ax_bot(self, node, ts):
        return Build.hyp(E)

    def _ax_theory(self, node, ts):
        i = node.rule.index
        leaf = Infer.ax_theory(self.axioms, i)
        return Build.mp(Build.hyp(neg_e(self.axioms.axioms[i])), leaf)

    def _cut(self, node, ts):
        f = self.tr(node.premises[0].succ[-1])
        return Build.cut_with(Build.intro(ts[1], f), ts[0])

    def _and_l(self, node, ts):
        conj = node.ante[-1]
        right = node.premises[0].ante[-1].key != conj.left.key
        return Build.cut_with(Build.proj(Build.hyp(self.tr(conj)), right), ts[0])

    def _and_r(self, node, ts):
        t = self.tr(node.succ[-1])
        a, b = t.left, t.right
        core = Build.mp(Build.hyp(neg_e(t)), Build.conj(Build.hyp(a), Build.hyp(b)))
        with_b = Build.cut_with(Build.intro(core, b), ts[1])
        return Build.cut_with(Build.intro(with_b, a), ts[0])

    def _or_l(self, node, ts):
        t = self.tr(node.ante[-1])
        disj = t.left.left
        split = Build.cases(ts[0], ts[1], disj)
        return Build.mp(Build.hyp(t), Build.intro(split, disj))

    def _inject(self, t: Formula, part: Formula, d: Derivation, lift) -> Derivation:
        """From Γ, ¬_E part ⇒ E derive Γ, ¬_E t ⇒ E where t = ¬_E¬_E W and
        `lift` derives W from part.
        """
        w = t.left.left
        core = Build.mp(Build.hyp(neg_e(w)), lift(Build.hyp(part)))
        d = Build.cut_with(Build.intro(core, part), d)
        return Build.mp(Build.hyp(neg_e(t)), Build.intro(d, neg_e(w)))

    def _or_r(self, node, ts):
        t = self.tr(node.succ[-1])
        part = self.tr(node.premises[0].succ[-1])
        return self._inject(t, part, ts[0], lambda d: Build.inj(d, t.left.left))

    def _ex_r(self, node, ts):
        t = self.tr(node.succ[-1])
        part = self.tr(node.premises[0].succ[-1])
        term = node.rule.term
        return self._inject(t, part, ts[0], lambda d: Build.witness(d, t.left.left, term))

    def _imp_l(self, node, ts):
        t = self.tr(node.ante[-1])
        a, b = t.left, t.right
        modus = Build.mp(Build.intro(ts[1], b), Build.mp(Build.hyp(t), Build.hyp(a)))
        return Build.cut_with(Build.intro(modus, a), ts[0])

    def _imp_r(self, node, ts):
        t = self.tr(node.succ[-1])
        a, b = t.left, t.right
        nn_b = Build.intro(ts[0], neg_e(b))
        body = Build.intro(Build.cut_with(nn_b, self.stability.backward(b)), a)
        return Build.mp(Build.hyp(neg_e(t)), body)

    def _all_l(self, node, ts):
        t = self.tr(node.ante[-1])
        return Build.cut_with(Build.inst(Build.hyp(t), node.rule.term), ts[0])

    def _all_r(self, node, ts):
        t = self.tr(node.succ[-1])
        a = node.rule.eigen
        body = t.instantiate(a)
        nn_body = Build.intro(ts[0], neg_e(body))
        proved = Build.gen(Build.cut_with(nn_body, self.stability.backward(body)), a, t)
        return Build.mp(Build.hyp(neg_e(t)), proved)

    def _ex_l(self, node, ts):
        t = self.tr(node.ante[-1])
        ex = t.left.left
        opened = Build.unpack(ts[0], ex, node.rule.eigen)
        return Build.mp(Build.hyp(t), Build.intro(opened, ex))

def translate_theory(theory: Theory) -> TranslatedTheory:
    return TranslatedTheory.of(theory)

def translate_derivation(d: Derivation, theory: Theory, verify: bool = True) -> Derivation:
    """A minimal T^E derivation of Γ^E ⇒ δ^E from a classical T derivation
    of Γ ⇒ δ.

    Raises:
        DerivationError: `d` does not check classically, or its root
                         succedent is not a single formula.
    """
    if len(d.succ) != 1:
        raise DerivationError(
            f'Root succedent must be a single formula, found {len(d.succ)}')
    if verify:
        report = check(d, Mode.CLASSICAL, theory)
        if not report.ok:
            raise DerivationError(f'Input does not check classically: {report.violations[0]}')
    tr = _Translator(theory)
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
        done[id(node)] = tr.node(node, [done[id(p)] for p in node.premises])
    goal = tr.tr(d.succ[0])
    nn = Build.intro(done[id(d)], neg_e(goal))
    out = Build.cut_with(nn, tr.stability.backward(goal))
    return weaken_to(out, [tr.tr(g) for g in d.ante], (goal,))
