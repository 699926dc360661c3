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

import random
from typing import Callable, List, Sequence, Tuple

from geoconvlib.builder import Build
from geoconvlib.calculus import Derivation, Infer, Rule, Sequent
from geoconvlib.enums import Mode, RuleKind
from geoconvlib.errors import GeoconvError
from geoconvlib.syntax import *

PREDICATES = {'P': 1, 'Q': 1, 'R': 2}
VARS = (free('a'), free('b'))
MUTANT = Atom('Mutant', ())

class Make:
    """Seeded generators of formulas and derivations for property tests."""

    @staticmethod
    def rng(seed: int) -> random.Random:
        return random.Random(seed)

    @staticmethod
    def atom(rng: random.Random, terms: Sequence[Term] = VARS) -> Atom:
        pred = rng.choice(sorted(PREDICATES))
        return Atom(pred, tuple(rng.choice(terms) for _ in range(PREDICATES[pred])))

    @staticmethod
    def formula(rng: random.Random, depth: int,
                heads: Sequence[str] = ('and', 'or', 'imp', 'forall', 'exists'),
                bot: bool = True, scope: Tuple[str, ...] = ()) -> Formula:
        """A random E-free formula of depth at most `depth`."""
        terms = VARS + tuple(bound(x) for x in scope)
        if depth == 0 or rng.random() < 0.2:
            return BOT if bot and rng.random() < 0.15 else Make.atom(rng, terms)
        head = rng.choice(heads)
        if head in ('forall', 'exists'):
            x = f'x{len(scope)}'
            body = Make.formula(rng, depth - 1, heads, bot, scope + (x,))
            return (ForAll if head == 'forall' else Exists)(bound(x), body)
        cls = {'and': And, 'or': Or, 'imp': Imp}[head]
        return cls(Make.formula(rng, depth - 1, heads, bot, scope),
                   Make.formula(rng, depth - 1, heads, bot, scope))

    @staticmethod
    def positive(rng: random.Random, depth: int) -> Formula:
        return Make.formula(rng, depth, heads=('and', 'or', 'exists'))

    @staticmethod
    def matching(rng: random.Random, depth: int, test: Callable[[Formula], bool],
                 tries: int = 2000) -> Formula:
        """The first random formula passing `test`."""
        for _ in range(tries):
            f = Make.formula(rng, depth)
            if test(f):
                return f
        raise AssertionError('No formula found')

    @staticmethod
    def all_formulas(depth: int, scope: Tuple[str, ...] = ()) -> List[Formula]:
        """Every formula up to `depth` over the leaves P(a) and ⊥."""
        leaves = [Atom('P', (free('a'),)), BOT]
        if depth == 0:
            return leaves
        subs = Make.all_formulas(depth - 1, scope + (f'x{len(scope)}',))
        x = bound(f'x{len(scope)}')
        out = list(leaves)
        out += [cls(l, r) for cls in (And, Or, Imp) for l in subs for r in subs]
        out += [q(x, s) for q in (ForAll, Exists) for s in subs]
        return out

    # Derivations

    @staticmethod
    def leaf(rng: random.Random, mode: Mode) -> Derivation:
        if mode != Mode.MINIMAL and rng.random() < 0.15:
            return Infer.ax_bot((BOT,), (Make.atom(rng),))
        return Infer.axiom(Make.atom(rng))

    @staticmethod
    def _steps(mode: Mode):
        def free_in(f):
            return sorted(f.free_vars)

        def weak_l(rng, d, pool):
            return Infer.weak_l(d, Make.atom(rng))

        def conj(rng, d, pool):
            return Build.conj(d, rng.choice(pool))

        def inj(rng, d, pool):
            g, f = d.succ[-1], Make.atom(rng)
            return Infer.or_r(d, Or(g, f) if rng.random() < 0.5 else Or(f, g))

        def intro(rng, d, pool):
            return Build.intro(d, d.ante[-1])

        def and_l(rng, d, pool):
            a, f = d.ante[-1], Make.atom(rng)
            return Infer.and_l(d, And(a, f) if rng.random() < 0.5 else And(f, a))

        def imp_l(rng, d, pool):
            return Infer.imp_l(rng.choice(pool), d)

        def cut(rng, d, pool):
            return Build.cut_with(rng.choice(pool), d)

        def cases(rng, d, pool):
            a = d.ante[-1]
            return Build.cases(d, d, Or(a, a))

        def gen(rng, d, pool):
            taken = frozenset().union(*(f.free_vars for f in d.ante + d.succ[:-1]))
            names = [n for n in free_in(d.succ[-1]) if n not in taken]
            return Build.gen(d, free(rng.choice(names)))

        def witness(rng, d, pool):
            a = free(rng.choice(free_in(d.succ[-1])))
            return Infer.ex_r(d, generalize(d.succ[-1], a, Exists), a)

        def all_l(rng, d, pool):
            a = free(rng.choice(free_in(d.ante[-1])))
            return Infer.all_l(d, generalize(d.ante[-1], a), a)

        def ex_l(rng, d, pool):
            a = free(rng.choice(free_in(d.ante[-1])))
            return Infer.ex_l(d, generalize(d.ante[-1], a, Exists), a)

        def contr_l(rng, d, pool):
            return Infer.contr_l(Infer.weak_l(d, d.ante[-1]))

        def exch_l(rng, d, pool):
            return Infer.exch_l(d, 0, len(d.ante) - 1)

        steps = [weak_l, conj, inj, intro, and_l, imp_l, cut, cases, gen, witness,
                 all_l, ex_l, contr_l, exch_l]
        if mode == Mode.CLASSICAL:
            def weak_r(rng, d, pool):
                return Infer.weak_r(d, Make.atom(rng))

            def contr_r(rng, d, pool):
                return Infer.contr_r(Infer.weak_r(d, d.succ[-1]))

            def exch_r(rng, d, pool):
                return Infer.exch_r(d, 0, len(d.succ) - 1)
            steps += [weak_r, contr_r, exch_r]
        return steps

    @staticmethod
    def derivation(rng: random.Random, mode: Mode, steps: int = 8) -> Derivation:
        """A random derivation that checks in `mode`.

        Grows a pool from axioms by applying random rules; a rule that
        does not fit (an empty antecedent, an eigenvariable clash, a
        multi-formula succedent for a builder) is skipped.
        """
        pool = [Make.leaf(rng, mode) for _ in range(3)]
        kinds = Make._steps(mode)
        for _ in range(steps * 4):
            d = rng.choice(pool)
            try:
                pool.append(rng.choice(kinds)(rng, d, pool))
            except (GeoconvError, IndexError):
                continue
            if len(pool) >= steps + 3:
                break
        return pool[-1]

    @staticmethod
    def mutate(rng: random.Random, d: Derivation) -> Derivation:
        """A copy of `d` with one point changed so that it no longer checks:
        either a formula of a non-root node becomes a fresh atom, or a node
        loses a premise.
        """
        paths = []
        stack = [(d, ())]
        while stack:
            node, path = stack.pop()
            paths.append((node, path))
            stack.extend((p, path + (i,)) for i, p in enumerate(node.premises))
        inner = [(n, p) for n, p in paths if p]
        if not inner:
            return Derivation(d.conclusion, Rule(RuleKind.CUT), ())
        node, path = rng.choice(inner)
        if node.premises and rng.random() < 0.3:
            new = Derivation(node.conclusion, node.rule, node.premises[:-1])
        else:
            ante, succ = list(node.ante), list(node.succ)
            side = ante if ante and (not succ or rng.random() < 0.5) else succ
            side[rng.randrange(len(side))] = MUTANT
            new = Derivation(Sequent(tuple(ante), tuple(succ)), node.rule, node.premises)
        return Make._replace(d, path, new)

    @staticmethod
    def _replace(d: Derivation, path: Tuple[int, ...], new: Derivation) -> Derivation:
        if not path:
            return new
        i = path[0]
        premises = list(d.premises)
        premises[i] = Make._replace(d.premises[i], path[1:], new)
        return Derivation(d.conclusion, d.rule, tuple(premises))
