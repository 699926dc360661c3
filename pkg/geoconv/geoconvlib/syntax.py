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

"""Terms, formulas and signatures.

Free and bound variables live in separate namespaces (`VarKind`). Formulas
are immutable; structural comparison for the calculus goes through
`Formula.key`, a de Bruijn style key that ignores bound-variable names.

    Formula: the base class of all formula nodes exported by this module.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Optional, Set, Tuple, Union

from lazy import lazy

import geoconvlib.patterns as patterns
from .constants import *
from .enums import VarKind
from .errors import FormulaError, SignatureError

@dataclass(frozen=True)
class Variable:
    name: str
    kind: VarKind = VarKind.FREE

    @property
    def is_free(self) -> bool:
        return self.kind == VarKind.FREE

    def __str__(self):
        return self.name

@dataclass(frozen=True)
class Func:
    """A function symbol applied to arguments; constants have no arguments."""
    name: str
    args: Tuple['Term', ...] = ()

    def __str__(self):
        if not self.args:
            return self.name
        return f"({self.name} {' '.join(str(a) for a in self.args)})"

Term = Union[Variable, Func]

def free(name: str) -> Variable:
    return Variable(name, VarKind.FREE)

def bound(name: str) -> Variable:
    return Variable(name, VarKind.BOUND)

def const(name: str) -> Func:
    return Func(name, ())

def term_symbols(t: Term) -> int:
    if isinstance(t, Variable):
        return 1
    return 1 + sum(term_symbols(a) for a in t.args)

def term_free_vars(t: Term) -> Set[str]:
    if isinstance(t, Variable):
        return {t.name} if t.is_free else set()
    return set().union(*(term_free_vars(a) for a in t.args)) if t.args else set()

def term_bound_vars(t: Term) -> Set[str]:
    if isinstance(t, Variable):
        return set() if t.is_free else {t.name}
    return set().union(*(term_bound_vars(a) for a in t.args)) if t.args else set()

def term_subst(t: Term, mapping: Dict[Variable, Term]) -> Term:
    """Simultaneously replaces variables of `t` by terms."""
    if isinstance(t, Variable):
        return mapping.get(t, t)
    if not t.args:
        return t
    return Func(t.name, tuple(term_subst(a, mapping) for a in t.args))

def _term_key(t: Term, scope: Tuple[str, ...]):
    if isinstance(t, Variable):
        if t.is_free:
            return ('f', t.name)
        for i in range(len(scope) - 1, -1, -1):
            if scope[i] == t.name:
                return ('b', len(scope) - 1 - i)
        return ('B', t.name)
    return ('F', t.name, tuple(_term_key(a, scope) for a in t.args))


@dataclass(frozen=True)
class Formula:

    @lazy
    def key(self) -> tuple:
        """Comparison key invariant under renaming of bound variables."""
        return _compute_key(self, ())

    @lazy
    def symbols(self) -> int:
        """Connectives, quantifiers, symbols and variable occurrences, each 1."""
        return _symbols(self)

    @lazy
    def free_vars(self) -> FrozenSet[str]:
        return frozenset(_free_vars(self))

    @lazy
    def loose(self) -> FrozenSet[str]:
        """Names of bound-kind variables occurring outside any binder."""
        return frozenset(_loose(self))

    @lazy
    def binders(self) -> FrozenSet[str]:
        """Names bound by some quantifier inside this formula."""
        return frozenset(_binders(self))

    @lazy
    def has_placeholder(self) -> bool:
        return _any_leaf(self, Placeholder)

    @lazy
    def has_falsum(self) -> bool:
        return _any_leaf(self, Falsum)

    @property
    def is_sentence(self) -> bool:
        return not self.free_vars and not self.loose

    def __str__(self):
        from .formatter import Format
        return Format.formula(self)

@dataclass(frozen=True)
class Atom(Formula):
    pred: str
    args: Tuple[Term, ...] = ()

@dataclass(frozen=True)
class Falsum(Formula):
    pass

@dataclass(frozen=True)
class Placeholder(Formula):
    pass

@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula

@dataclass(frozen=True)
class Quantified(Formula):
    var: Variable
    body: Formula

    def __post_init__(self):
        if self.var.is_free:
            raise FormulaError(f"Quantifier must bind a bound variable, got free '{self.var}'")
        # Formation rule: no quantifier rebinds a variable already bound in its body.
        if self.var.name in self.body.binders:
            raise FormulaError(f"'{self.var}' is already bound inside the quantifier body")

    def instantiate(self, t: Term) -> Formula:
        """The body with the bound variable replaced by the term `t`."""
        return subst_bound(self.body, self.var.name, t)

@dataclass(frozen=True)
class ForAll(Quantified):
    pass

@dataclass(frozen=True)
class Exists(Quantified):
    pass

BINARY = (And, Or, Imp)
BOT = Falsum()
E = Placeholder()

def neg(f: Formula) -> Formula:
    """¬φ := φ → ⊥"""
    return Imp(f, BOT)

def neg_e(f: Formula) -> Formula:
    """¬_E φ := φ → E"""
    return Imp(f, E)

def dneg_e(f: Formula) -> Formula:
    return neg_e(neg_e(f))

def alpha_equal(a: Formula, b: Formula) -> bool:
    return a is b or a.key == b.key

def _key(f: Formula, scope: Tuple[str, ...]) -> tuple:
    if not scope or not f.loose:
        return f.key
    return _compute_key(f, scope)

def _compute_key(f: Formula, scope: Tuple[str, ...]) -> tuple:
    if isinstance(f, Atom):
        return ('P', f.pred, tuple(_term_key(t, scope) for t in f.args))
    if isinstance(f, Falsum):
        return ('bot',)
    if isinstance(f, Placeholder):
        return ('E',)
    if isinstance(f, BINARY):
        return (type(f).__name__, _key(f.left, scope), _key(f.right, scope))
    if isinstance(f, Quantified):
        return (type(f).__name__, _key(f.body, scope + (f.var.name,)))
    raise FormulaError(f'Not a formula: {f!r}')

def _symbols(f: Formula) -> int:
    if isinstance(f, Atom):
        return 1 + sum(term_symbols(t) for t in f.args)
    if isinstance(f, (Falsum, Placeholder)):
        return 1
    if isinstance(f, BINARY):
        return 1 + f.left.symbols + f.right.symbols
    return 2 + f.body.symbols

def _free_vars(f: Formula) -> Set[str]:
    if isinstance(f, Atom):
        return set().union(*(term_free_vars(t) for t in f.args)) if f.args else set()
    if isinstance(f, BINARY):
        return f.left.free_vars | f.right.free_vars
    if isinstance(f, Quantified):
        return set(f.body.free_vars)
    return set()

def _loose(f: Formula) -> Set[str]:
    if isinstance(f, Atom):
        return set().union(*(term_bound_vars(t) for t in f.args)) if f.args else set()
    if isinstance(f, BINARY):
        return f.left.loose | f.right.loose
    if isinstance(f, Quantified):
        return f.body.loose - {f.var.name}
    return set()

def _binders(f: Formula) -> Set[str]:
    if isinstance(f, BINARY):
        return f.left.binders | f.right.binders
    if isinstance(f, Quantified):
        return f.body.binders | {f.var.name}
    return set()

def _any_leaf(f: Formula, cls) -> bool:
    if isinstance(f, cls):
        return True
    if isinstance(f, BINARY):
        return _any_leaf(f.left, cls) or _any_leaf(f.right, cls)
    if isinstance(f, Quantified):
        return _any_leaf(f.body, cls)
    return False

def map_terms(f: Formula, mapping: Dict[Variable, Term]) -> Formula:
    """Simultaneously replaces variables by terms in every atom of `f`.

    Bound variables rebound by an inner quantifier are left alone.
    """
    if not mapping:
        return f
    if isinstance(f, Atom):
        if not f.args:
            return f
        args = tuple(term_subst(t, mapping) for t in f.args)
        return f if args == f.args else Atom(f.pred, args)
    if isinstance(f, BINARY):
        l, r = map_terms(f.left, mapping), map_terms(f.right, mapping)
        return f if (l is f.left and r is f.right) else type(f)(l, r)
    if isinstance(f, Quantified):
        inner = {v: t for v, t in mapping.items() if v != f.var}
        body = map_terms(f.body, inner)
        return f if body is f.body else type(f)(f.var, body)
    return f

def subst_bound(f: Formula, name: str, t: Term) -> Formula:
    if name not in f.loose:
        return f
    return map_terms(f, {bound(name): t})

def subst_term(f: Formula, a: Variable, t: Term) -> Formula:
    """φ[a:=t] for a free variable `a`.

    Terms never contain bound variables, so nothing can be captured.
    """
    if not a.is_free:
        raise FormulaError(f"Can only substitute for a free variable, '{a}' is bound")
    if term_bound_vars(t):
        raise FormulaError(f"Substituted term '{t}' contains bound variables")
    if a.name not in f.free_vars:
        return f
    return map_terms(f, {a: t})

def rename_free(f: Formula, renaming: Dict[str, str]) -> Formula:
    """Simultaneously renames free variables."""
    mapping = {free(a): free(c) for a, c in renaming.items()
               if a != c and a in f.free_vars}
    return map_terms(f, mapping) if mapping else f

def abstract(f: Formula, a: Variable, x: Variable) -> Formula:
    """Replaces the free variable `a` by the bound variable `x`."""
    if a.name not in f.free_vars:
        return f
    return map_terms(f, {a: x})

def fresh_bound_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    i = 1
    while f'{base}_{i}' in taken:
        i += 1
    return f'{base}_{i}'

def pick_bound(f: Formula, prefer: str = None) -> Variable:
    """A bound variable that may quantify `f` without breaking the formation rule."""
    taken = f.binders | f.loose | f.free_vars
    if prefer and prefer not in taken:
        return bound(prefer)
    for name in BOUND_NAMES:
        if name not in taken:
            return bound(name)
    return bound(fresh_bound_name(prefer or BOUND_NAMES[0], taken))

def generalize(f: Formula, a: Variable, quantifier=None, prefer: str = None) -> Formula:
    """∀x f[a:=x] (or ∃ when `quantifier` is Exists) with a legal bound x."""
    quantifier = quantifier or ForAll
    x = pick_bound(f, prefer)
    return quantifier(x, abstract(f, a, x))

def rename_apart(f: Formula, avoid: FrozenSet[str]) -> Formula:
    """Renames binders of `f` whose names are in `avoid`."""
    clash = f.binders & avoid
    if not clash:
        return f
    taken = set(avoid) | f.binders | f.free_vars | f.loose
    return _rename_binders(f, clash, taken, {})

def _rename_binders(f: Formula, clash, taken: Set[str], ren: Dict[str, str]) -> Formula:
    if isinstance(f, Atom):
        mapping = {bound(old): bound(new) for old, new in ren.items()}
        return map_terms(f, mapping)
    if isinstance(f, BINARY):
        return type(f)(_rename_binders(f.left, clash, taken, ren),
                       _rename_binders(f.right, clash, taken, ren))
    if isinstance(f, Quantified):
        if f.var.name in clash:
            new = fresh_bound_name(f.var.name, taken)
            taken.add(new)
            inner = {**ren, f.var.name: new}
            return type(f)(bound(new), _rename_binders(f.body, clash, taken, inner))
        inner = {k: v for k, v in ren.items() if k != f.var.name}
        return type(f)(f.var, _rename_binders(f.body, clash, taken, inner))
    return f

def subst_placeholder(f: Formula, psi: Formula) -> Formula:
    """φ[E:=ψ], renaming binders of each copy of ψ apart from the
    quantifiers enclosing that occurrence of E.
    """
    if not f.has_placeholder or isinstance(psi, Placeholder):
        return f
    return _subst_e(f, psi, frozenset(), {})

def _subst_e(f: Formula, psi: Formula, scope: FrozenSet[str], cache: dict) -> Formula:
    if not f.has_placeholder:
        return f
    if isinstance(f, Placeholder):
        if scope not in cache:
            cache[scope] = rename_apart(psi, scope)
        return cache[scope]
    if isinstance(f, BINARY):
        return type(f)(_subst_e(f.left, psi, scope, cache),
                       _subst_e(f.right, psi, scope, cache))
    return type(f)(f.var, _subst_e(f.body, psi, scope | {f.var.name}, cache))

def fresh_free_var(avoid: Iterable[Union[Variable, str]]) -> Variable:
    """The lowest-numbered variable of the reserved namespace not in `avoid`."""
    names = {v.name if isinstance(v, Variable) else v for v in avoid}
    i = 0
    while f'{FRESH_PREFIX}{i}' in names:
        i += 1
    return free(f'{FRESH_PREFIX}{i}')

def subformulas(f: Formula):
    """Yields `f` and all of its subformulas, parents first."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, BINARY):
            stack.extend((g.right, g.left))
        elif isinstance(g, Quantified):
            stack.append(g.body)

@dataclass(frozen=True)
class Scheme:
    """A formula with one hole, written as a bound variable and a body."""
    var: Variable
    body: Formula

    @classmethod
    def of(cls, q: Quantified) -> 'Scheme':
        return cls(q.var, q.body)

    def apply(self, t: Term) -> Formula:
        return subst_bound(self.body, self.var.name, t)

    def forall(self) -> ForAll:
        return ForAll(self.var, self.body)

    def exists(self) -> Exists:
        return Exists(self.var, self.body)

    @property
    def symbols(self) -> int:
        return self.body.symbols

@dataclass
class Signature:
    """Constants, function and predicate symbols with their arities.

    A signature that is not strict declares symbols on first use and only
    rejects inconsistent arities.
    """
    constants: Set[str] = field(default_factory=set)
    functions: Dict[str, int] = field(default_factory=dict)
    predicates: Dict[str, int] = field(default_factory=dict)
    strict: bool = True

    @staticmethod
    def _check_name(name: str):
        if name in KEYWORDS:
            raise SignatureError(f"'{name}' is reserved")
        if not patterns.IDENT.match(name):
            raise SignatureError(f"'{name}' is not a valid identifier")
        if patterns.FRESH.match(name):
            raise SignatureError(f"'{name}' is in the reserved fresh-variable namespace")

    def declare_const(self, name: str):
        self._check_name(name)
        if name in self.functions or name in self.predicates:
            raise SignatureError(f"'{name}' is already declared with another kind")
        self.constants.add(name)

    def declare_fun(self, name: str, arity: int):
        self._check_name(name)
        if arity == 0:
            return self.declare_const(name)
        if name in self.constants or name in self.predicates or \
                self.functions.get(name, arity) != arity:
            raise SignatureError(f"Function '{name}' redeclared")
        self.functions[name] = arity

    def declare_pred(self, name: str, arity: int):
        self._check_name(name)
        if name in self.constants or name in self.functions or \
                self.predicates.get(name, arity) != arity:
            raise SignatureError(f"Predicate '{name}' redeclared")
        self.predicates[name] = arity

    def use_fun(self, name: str, arity: int):
        """Checks (or, when not strict, records) a function application."""
        known = 0 if name in self.constants else self.functions.get(name)
        if known is None:
            if self.strict:
                raise SignatureError(f"Unknown function symbol '{name}'")
            self.declare_fun(name, arity)
        elif known != arity:
            raise SignatureError(
                f"Arity mismatch for '{name}': expected {known}, got {arity}")

    def use_pred(self, name: str, arity: int):
        known = self.predicates.get(name)
        if known is None:
            if self.strict:
                raise SignatureError(f"Unknown predicate symbol '{name}'")
            self.declare_pred(name, arity)
        elif known != arity:
            raise SignatureError(
                f"Arity mismatch for '{name}': expected {known}, got {arity}")

    def is_const(self, name: str) -> bool:
        return name in self.constants

    def copy(self, strict: bool = None) -> 'Signature':
        return Signature(set(self.constants), dict(self.functions),
                         dict(self.predicates),
                         self.strict if strict is None else strict)
