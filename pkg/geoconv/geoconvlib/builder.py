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

"""Natural-deduction style combinators over single-succedent derivations.

Each combinator takes derivations of Γ ⇒ φ, inserts whatever structural
inferences the rules need, and returns a derivation whose antecedent has
no repeated formulas. Nothing here uses AxBot except `bot_elim`.

    Build: the collection of combinators exported by this module.
"""

from typing import Optional, Sequence

from .calculus import Derivation, Infer, weaken_to
from .enums import RuleKind
from .errors import DerivationError
from .syntax import *
from .tools import dedupe

def _goal(d: Derivation) -> Formula:
    if len(d.succ) != 1:
        raise DerivationError(f'Expected one succedent formula, found {len(d.succ)}')
    return d.succ[0]

def _without(ante: Sequence[Formula], f: Formula) -> list:
    return [g for g in ante if g.key != f.key]

class Build:

    @staticmethod
    def hyp(f: Formula) -> Derivation:
        """f ⇒ f"""
        return Infer.axiom(f)

    @staticmethod
    def tidy(d: Derivation) -> Derivation:
        """Contracts repeated antecedent formulas."""
        ante = dedupe(d.ante, key=lambda g: g.key)
        return d if len(ante) == len(d.ante) else weaken_to(d, ante, d.succ)

    @staticmethod
    def last(d: Derivation, f: Formula) -> Derivation:
        """Moves `f` to the end of the antecedent, weakening it in if absent."""
        return weaken_to(d, _without(d.ante, f) + [f], d.succ)

    @staticmethod
    def intro(d: Derivation, a: Formula) -> Derivation:
        """Γ ⇒ B  gives  Γ∖{a} ⇒ a → B"""
        _goal(d)
        return Infer.imp_r(Build.last(Build.tidy(d), a))

    @staticmethod
    def cut_with(d1: Derivation, d2: Derivation) -> Derivation:
        """Γ ⇒ φ  and  Δ ⇒ ψ  give  Γ, Δ∖{φ} ⇒ ψ"""
        f = _goal(d1)
        return Build.tidy(Infer.cut(d1, Build.last(d2, f)))

    @staticmethod
    def mp(d_imp: Derivation, d_arg: Derivation) -> Derivation:
        """Γ ⇒ A → B  and  Δ ⇒ A  give  Γ, Δ ⇒ B"""
        imp = _goal(d_imp)
        if not isinstance(imp, Imp):
            raise DerivationError(f"Cannot apply '{imp}', it is not an implication")
        if _goal(d_arg).key != imp.left.key:
            raise DerivationError(f"Argument '{d_arg.succ[0]}' does not match '{imp.left}'")
        step = Infer.imp_l(d_arg, Infer.axiom(imp.right))
        if d_imp.kind == RuleKind.AX_ID and len(d_imp.ante) == 1 \
                and d_imp.conclusion.ante_keys[0] == imp.key:
            return Build.tidy(step)
        return Build.tidy(Infer.cut(d_imp, step))

    @staticmethod
    def conj(d1: Derivation, d2: Derivation) -> Derivation:
        """Γ ⇒ A  and  Δ ⇒ B  give  Γ, Δ ⇒ A ∧ B"""
        _goal(d1), _goal(d2)
        ctx = dedupe(d1.ante + d2.ante, key=lambda g: g.key)
        return Infer.and_r(weaken_to(d1, ctx, d1.succ), weaken_to(d2, ctx, d2.succ))

    @staticmethod
    def proj(d: Derivation, right: bool = False) -> Derivation:
        """Γ ⇒ A ∧ B  gives  Γ ⇒ A (or B)"""
        f = _goal(d)
        if not isinstance(f, And):
            raise DerivationError(f"Cannot project '{f}', it is not a conjunction")
        part = f.right if right else f.left
        return Build.cut_with(d, Infer.and_l(Infer.axiom(part), f))

    @staticmethod
    def inj(d: Derivation, disj: Or) -> Derivation:
        """Γ ⇒ A  gives  Γ ⇒ A ∨ B (or B ∨ A)"""
        _goal(d)
        return Infer.or_r(d, disj)

    @staticmethod
    def cases(d1: Derivation, d2: Derivation, disj: Or) -> Derivation:
        """Γ, A ⇒ C  and  Δ, B ⇒ C  give  Γ, Δ, A ∨ B ⇒ C"""
        goal = _goal(d1)
        ctx = dedupe(_without(d1.ante, disj.left) + _without(d2.ante, disj.right),
                     key=lambda g: g.key)
        return Infer.or_l(weaken_to(d1, ctx + [disj.left], d1.succ),
                          weaken_to(d2, ctx + [disj.right], (goal,)))

    @staticmethod
    def elim_or(d: Derivation, d1: Derivation, d2: Derivation) -> Derivation:
        """Γ ⇒ A ∨ B, with case derivations for A and B, gives the common goal."""
        f = _goal(d)
        if not isinstance(f, Or):
            raise DerivationError(f"Cannot split '{f}', it is not a disjunction")
        return Build.cut_with(d, Build.cases(d1, d2, f))

    @staticmethod
    def gen(d: Derivation, a: Variable, q: Optional[ForAll] = None) -> Derivation:
        """Γ ⇒ φ(a)  gives  Γ ⇒ ∀x φ(x) when a is not free in Γ."""
        f = _goal(d)
        return Infer.all_r(d, q if q is not None else generalize(f, a), a)

    @staticmethod
    def inst(d: Derivation, t: Term) -> Derivation:
        """Γ ⇒ ∀x φ(x)  gives  Γ ⇒ φ(t)"""
        q = _goal(d)
        if not isinstance(q, ForAll):
            raise DerivationError(f"Cannot instantiate '{q}', it is not universal")
        return Build.cut_with(d, Infer.all_l(Infer.axiom(q.instantiate(t)), q, t))

    @staticmethod
    def witness(d: Derivation, q: Exists, t: Term) -> Derivation:
        """Γ ⇒ φ(t)  gives  Γ ⇒ ∃x φ(x)"""
        _goal(d)
        return Infer.ex_r(d, q, t)

    @staticmethod
    def unpack(d: Derivation, q: Exists, a: Variable) -> Derivation:
        """Γ, φ(a) ⇒ C  gives  Γ, ∃x φ(x) ⇒ C when a is not free in Γ, C."""
        _goal(d)
        return Infer.ex_l(Build.last(Build.tidy(d), q.instantiate(a)), q, a)

    @staticmethod
    def bot_elim(d: Derivation, f: Formula) -> Derivation:
        """Γ ⇒ ⊥  gives  Γ ⇒ f (not available in minimal logic)."""
        if not isinstance(_goal(d), Falsum):
            raise DerivationError(f"Expected a derivation of ⊥, found '{d.succ[0]}'")
        return Build.cut_with(d, Infer.ax_bot((BOT,), (f,)))
