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

"""S-expression reader for formulas, signatures, theories and derivations.

    Parser: the main class exported by this module.
"""

from typing import List, Optional, Tuple, Union

from lazy import lazy

import geoconvlib.patterns as patterns
from .constants import *
from .enums import RuleKind, VarKind
from .errors import FormulaError, ParseError, SignatureError
from .syntax import *

class Token(str):
    """An atom of an S-expression, remembering where it started."""

    def __new__(cls, s: str, pos: int):
        obj = str.__new__(cls, s)
        obj.pos = pos
        return obj

class SList(list):
    """A parenthesized S-expression, remembering where it opened."""

    def __init__(self, pos: int):
        super().__init__()
        self.pos = pos

SExpr = Union[Token, SList]

def read(text: str) -> List[SExpr]:
    """Reads every top-level S-expression of `text`."""
    top: List[SExpr] = []
    stack: List[SList] = []
    for m in patterns.TOKEN.finditer(text):
        if m.group('open'):
            stack.append(SList(m.start()))
        elif m.group('close'):
            if not stack:
                raise ParseError("Unexpected ')'", m.start())
            done = stack.pop()
            (stack[-1] if stack else top).append(done)
        else:
            tok = Token(m.group('atom'), m.start())
            (stack[-1] if stack else top).append(tok)
    if stack:
        raise ParseError('Unexpected end of input', len(text))
    return top

def _strip_comments(text: str) -> str:
    # Comments run from ';' to the end of the line.
    return '\n'.join(line.split(';', 1)[0] for line in text.splitlines())

class Parser:
    """Parses S-expression text against a signature.

    Without a signature, symbols are declared on first use and only
    inconsistent arities are rejected.

    Attributes:
        text (str): The source.
        signature (Signature): Symbols seen or declared so far.
        allow_fresh (bool): Accept names from the reserved v<digits> namespace;
                            only derivation files may use it.
    """

    def __init__(self, text: str, signature: Signature = None, allow_fresh: bool = False):
        self.text = _strip_comments(text)
        self.signature = signature if signature is not None else Signature(strict=False)
        self.allow_fresh = allow_fresh
        self._free_seen = set()

    @lazy
    def sexprs(self) -> List[SExpr]:
        return read(self.text)

    def _one(self) -> SExpr:
        if len(self.sexprs) != 1:
            raise ParseError(f'Expected exactly one expression, found {len(self.sexprs)}',
                             self.sexprs[1].pos if len(self.sexprs) > 1 else 0)
        return self.sexprs[0]

    def formula(self) -> Formula:
        return self.read_formula(self._one())

    def formulas(self) -> List[Formula]:
        return [self.read_formula(s) for s in self.sexprs]

    def theory(self) -> 'Theory':
        from .calculus import Theory
        s = self._one()
        if not isinstance(s, SList) or not s or s[0] != 'theory':
            raise ParseError("Expected '(theory NAME ...)'", s.pos)
        if len(s) < 2 or not isinstance(s[1], Token):
            raise ParseError('Theory needs a name', s.pos)
        axioms = []
        for item in s[2:]:
            if isinstance(item, SList) and item and item[0] in DECLARATIONS:
                self._declaration(item)
            else:
                axioms.append(self.read_formula(item))
        try:
            return Theory(str(s[1]), tuple(axioms))
        except FormulaError as e:
            raise ParseError(str(e), s.pos)

    def derivation(self) -> 'Derivation':
        return self.read_derivation(self._one())

    def _declaration(self, s: SList):
        kind = s[0]
        try:
            if kind == 'const' and len(s) == 2:
                return self.signature.declare_const(str(s[1]))
            if kind in ('fun', 'pred') and len(s) == 3 and isinstance(s[2], Token) \
                    and patterns.NATURAL.match(s[2]):
                declare = self.signature.declare_fun if kind == 'fun' \
                    else self.signature.declare_pred
                return declare(str(s[1]), int(s[2]))
        except SignatureError as e:
            raise SignatureError(f'{e} at position {s.pos}')
        raise ParseError(f"Malformed '{kind}' declaration", s.pos)

    @staticmethod
    def signature_file(text: str) -> Signature:
        """Reads the line format: 'fun name arity', 'pred name arity', 'const name'."""
        sig = Signature(strict=True)
        pos = 0
        for line in text.splitlines(keepends=True):
            if not patterns.COMMENT.match(line):
                m = patterns.DECLARATION.match(line)
                if not m:
                    raise ParseError(f"Bad signature line '{line.strip()}'", pos)
                try:
                    if m.group('const'):
                        sig.declare_const(m.group('const'))
                    elif not patterns.NATURAL.match(m.group('arity')):
                        raise ParseError(f"Arity must be a natural number, got "
                                         f"'{m.group('arity')}'", pos)
                    elif m.group('kind') == 'fun':
                        sig.declare_fun(m.group('name'), int(m.group('arity')))
                    else:
                        sig.declare_pred(m.group('name'), int(m.group('arity')))
                except SignatureError as e:
                    raise SignatureError(f'{e} at position {pos}')
            pos += len(line)
        return sig

    def _ident(self, tok: SExpr, what: str) -> str:
        if not isinstance(tok, Token):
            raise ParseError(f'Expected {what}', tok.pos)
        if not patterns.IDENT.match(tok) or tok in KEYWORDS:
            raise ParseError(f"'{tok}' cannot be used as {what}", tok.pos)
        if patterns.FRESH.match(tok) and not self.allow_fresh:
            raise ParseError(f"'{tok}' is in the reserved fresh-variable namespace", tok.pos)
        return str(tok)

    def _use(self, use, name: str, arity: int, pos: int):
        try:
            use(name, arity)
        except SignatureError as e:
            raise SignatureError(f'{e} at position {pos}')

    def read_term(self, s: SExpr, scope: Tuple[str, ...] = ()) -> Term:
        if isinstance(s, Token):
            name = self._ident(s, 'a term')
            if name in scope:
                return bound(name)
            if self.signature.is_const(name):
                return Func(name)
            if name in self.signature.functions or name in self.signature.predicates:
                raise SignatureError(f"'{name}' is not a variable or constant "
                                     f"at position {s.pos}")
            self._free_seen.add(name)
            return free(name)
        if not s:
            raise ParseError('Empty term', s.pos)
        name = self._ident(s[0], 'a function symbol')
        if name in scope or name in self._free_seen:
            raise SignatureError(f"'{name}' is used both as a variable and a function "
                                 f"at position {s.pos}")
        self._use(self.signature.use_fun, name, len(s) - 1, s.pos)
        return Func(name, tuple(self.read_term(t, scope) for t in s[1:]))

    def read_formula(self, s: SExpr, scope: Tuple[str, ...] = ()) -> Formula:
        if isinstance(s, Token):
            if s == 'bot':
                return BOT
            if s == 'E':
                return E
            raise ParseError(f"Expected a formula, found '{s}'", s.pos)
        if not s or not isinstance(s[0], Token):
            raise ParseError('Expected a connective', s.pos)
        head = s[0]
        if head == 'atom':
            if len(s) < 2:
                raise ParseError('Atom needs a predicate', s.pos)
            pred = self._ident(s[1], 'a predicate')
            self._use(self.signature.use_pred, pred, len(s) - 2, s.pos)
            return Atom(pred, tuple(self.read_term(t, scope) for t in s[2:]))
        if head in ('and', 'or', 'imp'):
            if len(s) != 3:
                raise ParseError(f"'{head}' takes two formulas, got {len(s) - 1}", s.pos)
            cls = {'and': And, 'or': Or, 'imp': Imp}[head]
            return cls(self.read_formula(s[1], scope), self.read_formula(s[2], scope))
        if head in ('forall', 'exists'):
            if len(s) != 3:
                raise ParseError(f"'{head}' takes a variable and a formula", s.pos)
            name = self._ident(s[1], 'a bound variable')
            if self.signature.is_const(name) or name in self.signature.functions:
                raise SignatureError(f"Cannot bind the function symbol '{name}' "
                                     f"at position {s[1].pos}")
            body = self.read_formula(s[2], scope + (name,))
            try:
                return (ForAll if head == 'forall' else Exists)(bound(name), body)
            except FormulaError as e:
                raise ParseError(str(e), s.pos)
        raise ParseError(f"Unknown connective '{head}'", head.pos)

    def read_rule(self, s: SExpr) -> 'Rule':
        from .calculus import Rule
        name, arg = (s, None) if isinstance(s, Token) else (s[0] if s else None, s[1:])
        try:
            kind = RuleKind.parse(str(name))
        except ValueError as e:
            raise ParseError(str(e), s.pos)
        need = kind.takes_term or kind.takes_eigenvariable or kind == RuleKind.AX_THEORY
        if need != bool(arg) or (arg and len(arg) != 1):
            raise ParseError(f"Rule '{kind.display_name}' "
                             f"{'needs one argument' if need else 'takes no argument'}",
                             s.pos)
        if not need:
            return Rule(kind)
        if kind == RuleKind.AX_THEORY:
            if not isinstance(arg[0], Token) or not patterns.NATURAL.match(arg[0]):
                raise ParseError('Axiom index must be a natural number', s.pos)
            return Rule(kind, index=int(arg[0]))
        if kind.takes_term:
            return Rule(kind, term=self.read_term(arg[0]))
        if not isinstance(arg[0], Token):
            raise ParseError('Eigenvariable must be a variable', s.pos)
        return Rule(kind, eigen=free(self._ident(arg[0], 'an eigenvariable')))

    def read_sequent(self, s: SExpr) -> 'Sequent':
        from .calculus import Sequent
        if not (isinstance(s, SList) and len(s) == 3 and s[0] == 'seq'
                and isinstance(s[1], SList) and s[1] and s[1][0] == 'gamma'
                and isinstance(s[2], SList) and s[2] and s[2][0] == 'delta'):
            raise ParseError("Expected '(seq (gamma ...) (delta ...))'", s.pos)
        return Sequent(tuple(self.read_formula(f) for f in s[1][1:]),
                       tuple(self.read_formula(f) for f in s[2][1:]))

    def read_derivation(self, s: SExpr) -> 'Derivation':
        """Reads '(node RULE (seq ...) premise*)' without recursion."""
        from .calculus import Derivation
        if not (isinstance(s, SList) and len(s) >= 3 and s[0] == 'node'):
            raise ParseError("Expected '(node RULE (seq ...) premise*)'", s.pos)
        # Post-order over the S-expression tree.
        done = {}
        stack = [(s, False)]
        while stack:
            e, expanded = stack.pop()
            if not (isinstance(e, SList) and len(e) >= 3 and e[0] == 'node'):
                raise ParseError("Expected '(node RULE (seq ...) premise*)'", e.pos)
            if not expanded:
                stack.append((e, True))
                stack.extend((p, False) for p in reversed(e[3:]))
                continue
            done[id(e)] = Derivation(self.read_sequent(e[2]), self.read_rule(e[1]),
                                     tuple(done.pop(id(p)) for p in e[3:]))
        return done[id(s)]

def parse_formula(text: str, signature: Signature = None) -> Formula:
    return Parser(text, signature).formula()
