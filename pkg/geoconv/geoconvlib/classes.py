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

"""Positive formulas, geometric implications and the classes Q, R and J.

The three classes are mutually recursive, so all five flags are computed
together in a single bottom-up pass.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .calculus import Theory
from .enums import Requirement
from .errors import ClassError
from .syntax import *

@dataclass(frozen=True)
class ClassMembership:
    positive: bool
    geometric_implication: bool
    in_q: bool
    in_r: bool
    in_j: bool

    def satisfies(self, requirement: Requirement) -> bool:
        if requirement == Requirement.GEOMETRIC:
            return self.geometric_implication
        return self.in_q

    def as_dict(self) -> Dict[str, bool]:
        return {'positive': self.positive,
                'geometric_implication': self.geometric_implication,
                'in_q': self.in_q, 'in_r': self.in_r, 'in_j': self.in_j}

ATOMIC = ClassMembership(True, True, True, False, True)
FALSUM = ClassMembership(True, True, True, True, True)

def _classify(f: Formula, memo: Dict[int, ClassMembership]) -> ClassMembership:
    if id(f) in memo:
        return memo[id(f)]
    if isinstance(f, Atom):
        c = ATOMIC
    elif isinstance(f, Falsum):
        c = FALSUM
    elif isinstance(f, Placeholder):
        raise ClassError('Cannot classify a formula containing E')
    elif isinstance(f, (And, Or)):
        l, r = _classify(f.left, memo), _classify(f.right, memo)
        pos = l.positive and r.positive
        c = ClassMembership(pos, pos, l.in_q and r.in_q, l.in_r and r.in_r,
                            l.in_j and r.in_j)
    elif isinstance(f, Imp):
        l, r = _classify(f.left, memo), _classify(f.right, memo)
        c = ClassMembership(False, l.positive and r.positive,
                            l.in_j and r.in_q, l.in_j and r.in_r, l.in_r and r.in_j)
    elif isinstance(f, ForAll):
        b = _classify(f.body, memo)
        c = ClassMembership(False, b.geometric_implication, b.in_q, b.in_r, False)
    else:
        b = _classify(f.body, memo)
        c = ClassMembership(b.positive, b.positive, b.in_q, False, b.in_j)
    memo[id(f)] = c
    return c

def classify(f: Formula) -> ClassMembership:
    """All five flags of `f`.

    Raises:
        ClassError: `f` contains E.
    """
    return _classify(f, {})

@dataclass
class TheoryReport:
    requirement: Requirement
    failures: List[Tuple[int, Formula]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

def validate_theory(theory: Theory, requirement: Requirement) -> TheoryReport:
    """Lists every axiom of `theory` failing `requirement`."""
    report = TheoryReport(requirement)
    for i, axiom in enumerate(theory.axioms):
        if not classify(axiom).satisfies(requirement):
            report.failures.append((i, axiom))
    return report
