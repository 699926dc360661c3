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

"""String formatting tools for Geoconv.

This module renders terms, formulas, sequents, derivations and theories
as S-expressions, and prepares human-readable size tables for the
console and TSV files.
"""

from typing import Iterable, List, Sequence, TYPE_CHECKING

import inflect
infl = inflect.engine()

from .constants import *
from .enums import *
from .syntax import *

if TYPE_CHECKING:
    from .calculus import Derivation, Rule, Sequent, SizeReport, Theory

# Deeper nodes of a written derivation share this indentation.
MAX_INDENT = 32

class Format:

    @staticmethod
    def term(t: Term, signature: Signature = None) -> str:
        if isinstance(t, Variable):
            return t.name
        if not t.args:
            return t.name if signature and signature.is_const(t.name) else f'({t.name})'
        return f"({t.name} {' '.join(Format.term(a, signature) for a in t.args)})"

    @staticmethod
    def formula(f: Formula, signature: Signature = None) -> str:
        """Canonical S-expression text of a formula.

        Constants print bare only when `signature` declares them; otherwise
        they are parenthesized so the text reads back as a constant.
        """
        if isinstance(f, Atom):
            args = ''.join(f' {Format.term(t, signature)}' for t in f.args)
            return f'(atom {f.pred}{args})'
        if isinstance(f, Falsum):
            return 'bot'
        if isinstance(f, Placeholder):
            return 'E'
        if isinstance(f, Quantified):
            head = 'forall' if isinstance(f, ForAll) else 'exists'
            return f'({head} {f.var.name} {Format.formula(f.body, signature)})'
        head = {And: 'and', Or: 'or', Imp: 'imp'}[type(f)]
        return (f'({head} {Format.formula(f.left, signature)} '
                f'{Format.formula(f.right, signature)})')

    @staticmethod
    def sequent(s: 'Sequent', signature: Signature = None) -> str:
        gamma = ''.join(f' {Format.formula(f, signature)}' for f in s.ante)
        delta = ''.join(f' {Format.formula(f, signature)}' for f in s.succ)
        return f'(seq (gamma{gamma}) (delta{delta}))'

    @staticmethod
    def rule(r: 'Rule', signature: Signature = None) -> str:
        name = r.kind.display_name
        if r.kind == RuleKind.AX_THEORY:
            return f'({name} {r.index})'
        if r.kind.takes_term:
            return f'({name} {Format.term(r.term, signature)})'
        if r.kind.takes_eigenvariable:
            return f'({name} {r.eigen.name})'
        return name

    @staticmethod
    def derivation(d: 'Derivation', signature: Signature = None) -> str:
        """Writes one node per line, innermost premises indented deepest."""
        lines: List[str] = []
        stack = [(d, 0)]
        while stack:
            node, depth = stack.pop()
            if node is None:
                lines[-1] += ')'
                continue
            lines.append(f"{' ' * min(depth, MAX_INDENT)}(node "
                         f"{Format.rule(node.rule, signature)} "
                         f"{Format.sequent(node.conclusion, signature)}")
            stack.append((None, depth))
            stack.extend((p, depth + 1) for p in reversed(node.premises))
        return '\n'.join(lines) + '\n'

    @staticmethod
    def theory(t: 'Theory', signature: Signature = None) -> str:
        lines = [f'(theory {t.name}']
        if signature:
            lines += [f'  (const {c})' for c in sorted(signature.constants)]
            lines += [f'  (fun {f} {n})' for f, n in sorted(signature.functions.items())]
            lines += [f'  (pred {p} {n})' for p, n in sorted(signature.predicates.items())]
        lines += [f'  {Format.formula(a, signature)}' for a in t.axioms]
        return '\n'.join(lines) + ')\n'

    @staticmethod
    def sizes_row(name: str, report: 'SizeReport') -> List[str]:
        return [name, str(report.inference_count), str(report.symbol_count),
                str(report.height)]

    @staticmethod
    def tsv(columns: Sequence[str], rows: Iterable[Sequence]) -> str:
        """Tab-separated text with a header row and a trailing newline."""
        out = ['\t'.join(columns)]
        out += ['\t'.join(str(c) for c in row) for row in rows]
        return '\n'.join(out) + '\n'

    @staticmethod
    def ratio(x: float) -> str:
        return f'{x:.3f}'

    @staticmethod
    def pluralize(s: str, c: int) -> str:
        """Pluralizes a string according to the count.

        Args:
            s (str): String to pluralize
            c (int): Count to check

        Returns:
            str: Pluralized string, unless count is 1.
        """
        return infl.plural(s, c)

    @staticmethod
    def num_to_words(n: int) -> str:
        """Converts a number to words, e.g. 3 → 'three'."""
        return infl.number_to_words(n)

    @staticmethod
    def count(n: int, s: str) -> str:
        """'1 inference', '12 inferences'."""
        return f'{n:,} {infl.plural(s, n)}'
