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

"""Sequents, inference rules, derivation trees and the three-mode checker.

Principal formulas sit at the right end of the antecedent or succedent;
Exchange moves one formula to another position, so any reordering of n
formulas costs at most n inferences.

    Derivation: the proof tree exported by this module.
    check: validates a derivation for a mode and a theory.
    Infer: one constructor per rule, computing the conclusion.
"""

import sys
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from lazy import lazy

import geoconvlib.config as config
from .enums import Mode, RuleKind
from .errors import DerivationError, FormulaError
from .syntax import *
from .tools import dedupe, last_index

sys.setrecursionlimit(max(sys.getrecursionlimit(), config.limits.recursion))

@dataclass(frozen=True)
class Sequent:
    ante: Tuple[Formula, ...] = ()
    succ: Tuple[Formula, ...] = ()

    @lazy
    def ante_keys(self) -> tuple:
        return tuple(f.key for f in self.ante)

    @lazy
    def succ_keys(self) -> tuple:
        return tuple(f.key for f in self.succ)

    @lazy
    def symbols(self) -> int:
        return sum(f.symbols for f in self.ante) + sum(f.symbols for f in self.succ)

    @lazy
    def free_vars(self) -> frozenset:
        return frozenset().union(*(f.free_vars for f in self.ante + self.succ))

    def alpha_equal(self, other: 'Sequent') -> bool:
        return self.ante_keys == other.ante_keys and self.succ_keys == other.succ_keys

    def __str__(self):
        from .formatter import Format
        return Format.sequent(self)

@dataclass(frozen=True)
class Rule:
    """A rule tag with its argument: a witnessing term for AllL/ExR, an
    eigenvariable for AllR/ExL, an axiom index for AxTheory.
    """
    kind: RuleKind
    term: Optional[Term] = None
    eigen: Optional[Variable] = None
    index: Optional[int] = None

    def __str__(self):
        from .formatter import Format
        return Format.rule(self)

@dataclass(frozen=True, eq=False)
class Derivation:
    conclusion: Sequent
    rule: Rule
    premises: Tuple['Derivation', ...] = ()

    @property
    def ante(self) -> Tuple[Formula, ...]:
        return self.conclusion.ante

    @property
    def succ(self) -> Tuple[Formula, ...]:
        return self.conclusion.succ

    @property
    def kind(self) -> RuleKind:
        return self.rule.kind

    def __str__(self):
        from .formatter import Format
        return Format.derivation(self)

@dataclass(frozen=True)
class Theory:
    """A named sequence of axioms.

    Axioms of a user theory are E-free sentences; a translated theory
    (`translated=True`) may mention E.
    """
    name: str
    axioms: Tuple[Formula, ...] = ()
    translated: bool = False

    def __post_init__(self):
        for i, a in enumerate(self.axioms):
            if not a.is_sentence:
                raise FormulaError(f"Axiom {i} of '{self.name}' is not a sentence: {a}")
            if a.has_placeholder and not self.translated:
                raise FormulaError(f"Axiom {i} of '{self.name}' mentions E")

    def __len__(self):
        return len(self.axioms)

EMPTY = Theory('empty')

@dataclass(frozen=True)
class SizeReport:
    inference_count: int
    symbol_count: int
    height: int

    def as_row(self) -> list:
        return [self.inference_count, self.symbol_count, self.height]

@dataclass(frozen=True)
class Violation:
    """A rule instance that does not check, located by its path of premise
    indices from the root.
    """
    path: Tuple[int, ...]
    rule: RuleKind
    message: str

    def __str__(self):
        where = '.'.join(str(i) for i in self.path) or 'root'
        return f'{where} ({self.rule.display_name}): {self.message}'

@dataclass
class CheckReport:
    mode: Mode
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

def _is_move(a: tuple, b: tuple) -> bool:
    """True if `b` is `a` with exactly one element moved elsewhere. Moving a
    formula across an equal neighbour leaves the tuple unchanged.
    """
    if len(a) != len(b):
        return False
    if a == b:
        return any(x == y for x, y in zip(a, a[1:]))
    i = 0
    while a[i] == b[i]:
        i += 1
    j = len(a)
    while a[j - 1] == b[j - 1]:
        j -= 1
    ma, mb = a[i:j], b[i:j]
    return mb == ma[1:] + ma[:1] or mb == ma[-1:] + ma[:-1]

class _Node:
    """Alpha-keys of a node and its premises, named as in the rule tables:
    G/D for the conclusion, Gi/Di for premise i.
    """

    def __init__(self, d: Derivation):
        self.d = d
        self.G, self.D = d.conclusion.ante_keys, d.conclusion.succ_keys
        ps = d.premises
        self.G1, self.D1 = (ps[0].conclusion.ante_keys, ps[0].conclusion.succ_keys) \
            if ps else ((), ())
        self.G2, self.D2 = (ps[1].conclusion.ante_keys, ps[1].conclusion.succ_keys) \
            if len(ps) > 1 else ((), ())

    def last_left(self, cls) -> Optional[Formula]:
        f = self.d.ante[-1] if self.d.ante else None
        return f if isinstance(f, cls) else None

    def last_right(self, cls) -> Optional[Formula]:
        f = self.d.succ[-1] if self.d.succ else None
        return f if isinstance(f, cls) else None

def _eigen_ok(n: _Node, q: Quantified, key_premise, side: str) -> Optional[str]:
    a = n.d.rule.eigen
    if a is None or not a.is_free:
        return 'missing eigenvariable'
    if a.name in n.d.conclusion.free_vars:
        return 'eigenvariable occurs in conclusion'
    if key_premise != q.instantiate(a).key:
        return f'premise does not instantiate the {side} quantifier at {a}'
    return None

def _term_ok(t) -> Optional[str]:
    if t is None:
        return 'missing witnessing term'
    if term_bound_vars(t):
        return 'witnessing term contains bound variables'
    return None

def _ax_id(n, mode, theory):
    if not set(n.G) & set(n.D):
        return 'no formula occurs on both sides'

def _ax_bot(n, mode, theory):
    if mode == Mode.MINIMAL:
        return 'AxBot forbidden in minimal'
    if BOT.key not in n.G:
        return 'no ⊥ in antecedent'

def _ax_theory(n, mode, theory):
    i = n.d.rule.index
    if i is None or not 0 <= i < len(theory.axioms):
        return f'no axiom {i} in theory {theory.name}'
    if theory.axioms[i].key not in n.D:
        return f'axiom {i} does not occur in succedent'

def _weak_l(n, mode, theory):
    if not (n.G and n.G[:-1] == n.G1 and n.D == n.D1):
        return 'conclusion is not the premise plus one antecedent formula'

def _weak_r(n, mode, theory):
    if not (n.D and n.D[:-1] == n.D1 and n.G == n.G1):
        return 'conclusion is not the premise plus one succedent formula'

def _contr_l(n, mode, theory):
    if not (n.G and n.G1 == n.G + n.G[-1:] and n.D == n.D1):
        return 'premise does not end with two copies of the contracted formula'

def _contr_r(n, mode, theory):
    if not (n.D and n.D1 == n.D + n.D[-1:] and n.G == n.G1):
        return 'premise does not end with two copies of the contracted formula'

def _exch_l(n, mode, theory):
    if not (_is_move(n.G1, n.G) and n.D == n.D1):
        return 'antecedent is not the premise with one formula moved'

def _exch_r(n, mode, theory):
    if not (_is_move(n.D1, n.D) and n.G == n.G1):
        return 'succedent is not the premise with one formula moved'

def _cut(n, mode, theory):
    if not n.D1 or not n.G2 or n.D1[-1] != n.G2[-1]:
        return 'cut formulas differ'
    if n.G != n.G1 + n.G2[:-1] or n.D != n.D1[:-1] + n.D2:
        return 'conclusion is not the union of the premise contexts'

def _and_l(n, mode, theory):
    f = n.last_left(And)
    if not f:
        return 'principal formula is not a conjunction'
    if not n.G1 or n.G1[-1] not in (f.left.key, f.right.key) \
            or n.G1[:-1] != n.G[:-1] or n.D != n.D1:
        return 'premise does not hold a conjunct of the principal formula'

def _and_r(n, mode, theory):
    f = n.last_right(And)
    if not f:
        return 'principal formula is not a conjunction'
    if not (n.G == n.G1 == n.G2 and n.D1 == n.D[:-1] + (f.left.key,)
            and n.D2 == n.D[:-1] + (f.right.key,)):
        return 'premises do not prove the two conjuncts in the same context'

def _or_l(n, mode, theory):
    f = n.last_left(Or)
    if not f:
        return 'principal formula is not a disjunction'
    if not (n.G1 == n.G[:-1] + (f.left.key,) and n.G2 == n.G[:-1] + (f.right.key,)
            and n.D == n.D1 == n.D2):
        return 'premises do not assume the two disjuncts in the same context'

def _or_r(n, mode, theory):
    f = n.last_right(Or)
    if not f:
        return 'principal formula is not a disjunction'
    if not n.D1 or n.D1[-1] not in (f.left.key, f.right.key) \
            or n.D1[:-1] != n.D[:-1] or n.G != n.G1:
        return 'premise does not prove a disjunct of the principal formula'

def _imp_l(n, mode, theory):
    f = n.last_left(Imp)
    if not f:
        return 'principal formula is not an implication'
    if not n.D1 or n.D1[-1] != f.left.key:
        return 'left premise does not prove the antecedent of the implication'
    if not n.G2 or n.G2[-1] != f.right.key:
        return 'right premise does not assume the consequent of the implication'
    if n.G[:-1] != n.G1 + n.G2[:-1] or n.D != n.D1[:-1] + n.D2:
        return 'conclusion is not the union of the premise contexts'

def _imp_r(n, mode, theory):
    f = n.last_right(Imp)
    if not f:
        return 'principal formula is not an implication'
    if n.G1 != n.G + (f.left.key,) or n.D1 != n.D[:-1] + (f.right.key,):
        return 'premise does not derive the consequent from the antecedent'

def _all_l(n, mode, theory):
    f = n.last_left(ForAll)
    if not f:
        return 'principal formula is not universal'
    t = n.d.rule.term
    if _term_ok(t):
        return _term_ok(t)
    if n.G1 != n.G[:-1] + (f.instantiate(t).key,) or n.D != n.D1:
        return f'premise does not instantiate the universal at {t}'

def _all_r(n, mode, theory):
    f = n.last_right(ForAll)
    if not f:
        return 'principal formula is not universal'
    if n.G != n.G1 or not n.D1 or n.D1[:-1] != n.D[:-1]:
        return 'premise context differs from the conclusion'
    return _eigen_ok(n, f, n.D1[-1], 'universal')

def _ex_l(n, mode, theory):
    f = n.last_left(Exists)
    if not f:
        return 'principal formula is not existential'
    if n.D != n.D1 or not n.G1 or n.G1[:-1] != n.G[:-1]:
        return 'premise context differs from the conclusion'
    return _eigen_ok(n, f, n.G1[-1], 'existential')

def _ex_r(n, mode, theory):
    f = n.last_right(Exists)
    if not f:
        return 'principal formula is not existential'
    t = n.d.rule.term
    if _term_ok(t):
        return _term_ok(t)
    if n.D1 != n.D[:-1] + (f.instantiate(t).key,) or n.G != n.G1:
        return f'premise does not instantiate the existential at {t}'

_CHECKS = {
    RuleKind.AX_ID: _ax_id, RuleKind.AX_BOT: _ax_bot, RuleKind.AX_THEORY: _ax_theory,
    RuleKind.WEAK_L: _weak_l, RuleKind.WEAK_R: _weak_r,
    RuleKind.CONTR_L: _contr_l, RuleKind.CONTR_R: _contr_r,
    RuleKind.EXCH_L: _exch_l, RuleKind.EXCH_R: _exch_r,
    RuleKind.CUT: _cut,
    RuleKind.AND_L: _and_l, RuleKind.AND_R: _and_r,
    RuleKind.OR_L: _or_l, RuleKind.OR_R: _or_r,
    RuleKind.IMP_L: _imp_l, RuleKind.IMP_R: _imp_r,
    RuleKind.ALL_L: _all_l, RuleKind.ALL_R: _all_r,
    RuleKind.EX_L: _ex_l, RuleKind.EX_R: _ex_r,
}

def check(d: Derivation, mode: Mode, theory: Theory = EMPTY) -> CheckReport:
    """Checks every node of `d` and collects all violations.

    A subtree shared by several parents is checked once and reported at
    the first path that reaches it.
    """
    report = CheckReport(mode)
    seen = set()
    stack = [(d, ())]
    while stack:
        node, path = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        kind = node.rule.kind
        if mode.single_succedent and len(node.succ) > 1:
            report.violations.append(Violation(
                path, kind, f'{len(node.succ)} formulas in succedent in {mode.display_name} mode'))
        if len(node.premises) != kind.arity:
            report.violations.append(Violation(
                path, kind, f'expected {kind.arity} premises, found {len(node.premises)}'))
        else:
            msg = _CHECKS[kind](_Node(node), mode, theory)
            if msg:
                report.violations.append(Violation(path, kind, msg))
        stack.extend((p, path + (i,)) for i, p in reversed(list(enumerate(node.premises))))
    report.violations.sort(key=lambda v: v.path)
    return report

def size(d: Derivation) -> SizeReport:
    """Sizes of the unfolded tree: shared subtrees count once per use."""
    memo: Dict[int, Tuple[int, int, int]] = {}
    stack = [d]
    while stack:
        node = stack[-1]
        if id(node) in memo:
            stack.pop()
            continue
        pending = [p for p in node.premises if id(p) not in memo]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        subs = [memo[id(p)] for p in node.premises]
        memo[id(node)] = (1 + sum(s[0] for s in subs),
                          node.conclusion.symbols + sum(s[1] for s in subs),
                          1 + max((s[2] for s in subs), default=0))
    return SizeReport(*memo[id(d)])

def _seq(ante, succ) -> Sequent:
    return Sequent(tuple(ante), tuple(succ))

def _need(cond: bool, message: str):
    if not cond:
        raise DerivationError(message)

def _moved(xs: tuple, i: int, j: int) -> tuple:
    xs = list(xs)
    xs.insert(j, xs.pop(i))
    return tuple(xs)

class Infer:
    """Constructors for single inferences.

    Each computes the conclusion from the premises and raises
    DerivationError when the premises do not fit the rule.
    """

    @staticmethod
    def ax_id(ante: Sequence[Formula], succ: Sequence[Formula]) -> Derivation:
        return Derivation(_seq(ante, succ), Rule(RuleKind.AX_ID))

    @staticmethod
    def axiom(f: Formula) -> Derivation:
        """f ⇒ f"""
        return Infer.ax_id((f,), (f,))

    @staticmethod
    def ax_bot(ante: Sequence[Formula], succ: Sequence[Formula]) -> Derivation:
        _need(any(isinstance(f, Falsum) for f in ante), 'AxBot needs ⊥ in the antecedent')
        return Derivation(_seq(ante, succ), Rule(RuleKind.AX_BOT))

    @staticmethod
    def ax_theory(theory: Theory, index: int, ante: Sequence[Formula] = ()) -> Derivation:
        _need(0 <= index < len(theory.axioms), f'No axiom {index} in {theory.name}')
        return Derivation(_seq(ante, (theory.axioms[index],)),
                          Rule(RuleKind.AX_THEORY, index=index))

    @staticmethod
    def weak_l(d: Derivation, f: Formula) -> Derivation:
        return Derivation(_seq(d.ante + (f,), d.succ), Rule(RuleKind.WEAK_L), (d,))

    @staticmethod
    def weak_r(d: Derivation, f: Formula) -> Derivation:
        return Derivation(_seq(d.ante, d.succ + (f,)), Rule(RuleKind.WEAK_R), (d,))

    @staticmethod
    def contr_l(d: Derivation) -> Derivation:
        _need(len(d.ante) >= 2 and d.conclusion.ante_keys[-1] == d.conclusion.ante_keys[-2],
              'ContrL needs two copies at the end of the antecedent')
        return Derivation(_seq(d.ante[:-1], d.succ), Rule(RuleKind.CONTR_L), (d,))

    @staticmethod
    def contr_r(d: Derivation) -> Derivation:
        _need(len(d.succ) >= 2 and d.conclusion.succ_keys[-1] == d.conclusion.succ_keys[-2],
              'ContrR needs two copies at the end of the succedent')
        return Derivation(_seq(d.ante, d.succ[:-1]), Rule(RuleKind.CONTR_R), (d,))

    @staticmethod
    def exch_l(d: Derivation, i: int, j: int) -> Derivation:
        """Moves the antecedent formula at position i to position j."""
        _need(i != j and 0 <= i < len(d.ante) and 0 <= j < len(d.ante), 'Bad exchange')
        return Derivation(_seq(_moved(d.ante, i, j), d.succ), Rule(RuleKind.EXCH_L), (d,))

    @staticmethod
    def exch_r(d: Derivation, i: int, j: int) -> Derivation:
        _need(i != j and 0 <= i < len(d.succ) and 0 <= j < len(d.succ), 'Bad exchange')
        return Derivation(_seq(d.ante, _moved(d.succ, i, j)), Rule(RuleKind.EXCH_R), (d,))

    @staticmethod
    def cut(d1: Derivation, d2: Derivation) -> Derivation:
        _need(d1.succ and d2.ante and d1.succ[-1].key == d2.ante[-1].key,
              'Cut formulas differ')
        return Derivation(_seq(d1.ante + d2.ante[:-1], d1.succ[:-1] + d2.succ),
                          Rule(RuleKind.CUT), (d1, d2))

    @staticmethod
    def and_l(d: Derivation, conj: And) -> Derivation:
        _need(d.ante and d.ante[-1].key in (conj.left.key, conj.right.key),
              'AndL premise must end with a conjunct')
        return Derivation(_seq(d.ante[:-1] + (conj,), d.succ), Rule(RuleKind.AND_L), (d,))

    @staticmethod
    def and_r(d1: Derivation, d2: Derivation) -> Derivation:
        _need(d1.succ and d2.succ and d1.conclusion.ante_keys == d2.conclusion.ante_keys
              and d1.conclusion.succ_keys[:-1] == d2.conclusion.succ_keys[:-1],
              'AndR premises must share their contexts')
        return Derivation(_seq(d1.ante, d1.succ[:-1] + (And(d1.succ[-1], d2.succ[-1]),)),
                          Rule(RuleKind.AND_R), (d1, d2))

    @staticmethod
    def or_l(d1: Derivation, d2: Derivation) -> Derivation:
        _need(d1.ante and d2.ante
              and d1.conclusion.ante_keys[:-1] == d2.conclusion.ante_keys[:-1]
              and d1.conclusion.succ_keys == d2.conclusion.succ_keys,
              'OrL premises must share their contexts')
        return Derivation(_seq(d1.ante[:-1] + (Or(d1.ante[-1], d2.ante[-1]),), d1.succ),
                          Rule(RuleKind.OR_L), (d1, d2))

    @staticmethod
    def or_r(d: Derivation, disj: Or) -> Derivation:
        _need(d.succ and d.succ[-1].key in (disj.left.key, disj.right.key),
              'OrR premise must end with a disjunct')
        return Derivation(_seq(d.ante, d.succ[:-1] + (disj,)), Rule(RuleKind.OR_R), (d,))

    @staticmethod
    def imp_l(d1: Derivation, d2: Derivation) -> Derivation:
        _need(d1.succ and d2.ante, 'ImpL needs a proved antecedent and an assumed consequent')
        imp = Imp(d1.succ[-1], d2.ante[-1])
        return Derivation(_seq(d1.ante + d2.ante[:-1] + (imp,), d1.succ[:-1] + d2.succ),
                          Rule(RuleKind.IMP_L), (d1, d2))

    @staticmethod
    def imp_r(d: Derivation) -> Derivation:
        _need(d.ante and d.succ, 'ImpR needs an assumption and a conclusion')
        return Derivation(_seq(d.ante[:-1], d.succ[:-1] + (Imp(d.ante[-1], d.succ[-1]),)),
                          Rule(RuleKind.IMP_R), (d,))

    @staticmethod
    def all_l(d: Derivation, q: ForAll, t: Term) -> Derivation:
        _need(d.ante and d.ante[-1].key == q.instantiate(t).key,
              f'AllL premise must end with the instance at {t}')
        return Derivation(_seq(d.ante[:-1] + (q,), d.succ),
                          Rule(RuleKind.ALL_L, term=t), (d,))

    @staticmethod
    def all_r(d: Derivation, q: ForAll, a: Variable) -> Derivation:
        _need(d.succ and d.succ[-1].key == q.instantiate(a).key,
              f'AllR premise must end with the instance at {a}')
        s = _seq(d.ante, d.succ[:-1] + (q,))
        _need(a.name not in s.free_vars, f"Eigenvariable '{a}' occurs in the conclusion")
        return Derivation(s, Rule(RuleKind.ALL_R, eigen=a), (d,))

    @staticmethod
    def ex_l(d: Derivation, q: Exists, a: Variable) -> Derivation:
        _need(d.ante and d.ante[-1].key == q.instantiate(a).key,
              f'ExL premise must end with the instance at {a}')
        s = _seq(d.ante[:-1] + (q,), d.succ)
        _need(a.name not in s.free_vars, f"Eigenvariable '{a}' occurs in the conclusion")
        return Derivation(s, Rule(RuleKind.EX_L, eigen=a), (d,))

    @staticmethod
    def ex_r(d: Derivation, q: Exists, t: Term) -> Derivation:
        _need(d.succ and d.succ[-1].key == q.instantiate(t).key,
              f'ExR premise must end with the instance at {t}')
        return Derivation(_seq(d.ante, d.succ[:-1] + (q,)),
                          Rule(RuleKind.EX_R, term=t), (d,))

class _Side:
    """One side of a sequent under rearrangement by structural rules."""

    def __init__(self, left: bool):
        self.left = left

    def items(self, d: Derivation) -> Tuple[Formula, ...]:
        return d.ante if self.left else d.succ

    def keys(self, d: Derivation) -> tuple:
        return d.conclusion.ante_keys if self.left else d.conclusion.succ_keys

    def move(self, d: Derivation, i: int, j: int) -> Derivation:
        if i == j:
            return d
        return Infer.exch_l(d, i, j) if self.left else Infer.exch_r(d, i, j)

    def weaken(self, d: Derivation, f: Formula) -> Derivation:
        return Infer.weak_l(d, f) if self.left else Infer.weak_r(d, f)

    def contract(self, d: Derivation) -> Derivation:
        return Infer.contr_l(d) if self.left else Infer.contr_r(d)

    def to(self, d: Derivation, target: Sequence[Formula]) -> Derivation:
        """Rearranges this side of `d` into exactly `target`."""
        want = [f.key for f in target]
        want_count = Counter(want)
        have = self.keys(d)
        if tuple(want) == have:
            return d
        for k in have:
            if k not in want_count:
                raise DerivationError(
                    f"Cannot weaken to target: '{self.items(d)[have.index(k)]}' "
                    f"is missing from the target {'antecedent' if self.left else 'succedent'}")

        # Contract excess copies.
        for k, n in Counter(have).items():
            for _ in range(n - want_count[k]):
                keys = self.keys(d)
                d = self.move(d, last_index(keys, lambda x: x == k), len(keys) - 1)
                keys = self.keys(d)
                i = last_index(keys[:-1], lambda x: x == k)
                d = self.contract(self.move(d, i, len(keys) - 2))

        # Weaken in what is missing.
        have_count = Counter(self.keys(d))
        for f in target:
            if have_count[f.key] < want_count[f.key]:
                have_count[f.key] += 1
                d = self.weaken(d, f)

        # Keep the longest prefix of the target found as a subsequence and
        # move everything else to the end, in target order.
        keys = list(self.keys(d))
        placed = [False] * len(keys)
        p = 0
        for i, k in enumerate(keys):
            if p < len(want) and k == want[p]:
                placed[i] = True
                p += 1
        for q in range(p, len(want)):
            i = next(i for i, k in enumerate(keys) if not placed[i] and k == want[q])
            d = self.move(d, i, len(keys) - 1)
            keys.append(keys.pop(i))
            placed.pop(i)
            placed.append(True)
        return d

LEFT, RIGHT = _Side(True), _Side(False)

def weaken_to(d: Derivation, ante: Sequence[Formula], succ: Sequence[Formula]) -> Derivation:
    """Adds Weak, Contr and Exch inferences so `d` concludes exactly ante ⇒ succ.

    Every formula of `d`'s conclusion must occur on the same side of the
    target; surplus copies are contracted.
    """
    return RIGHT.to(LEFT.to(d, ante), succ)

def cut(d1: Derivation, d2: Derivation, f: Formula = None) -> Derivation:
    """Cuts `f` (by default the last succedent formula of `d1`), wherever it
    sits in the two premises, then drops duplicate context formulas.
    """
    f = f if f is not None else (d1.succ[-1] if d1.succ else None)
    _need(f is not None, 'Nothing to cut')
    i = last_index(d1.conclusion.succ_keys, lambda k: k == f.key)
    j = last_index(d2.conclusion.ante_keys, lambda k: k == f.key)
    _need(i is not None and j is not None, f"Cut formula mismatch: '{f}'")
    d1 = RIGHT.move(d1, i, len(d1.succ) - 1)
    d2 = LEFT.move(d2, j, len(d2.ante) - 1)
    out = Infer.cut(d1, d2)
    return weaken_to(out, dedupe(out.ante, key=lambda g: g.key),
                     dedupe(out.succ, key=lambda g: g.key))
