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

"""Set of enum values.

This module handles all the enumerable constants for Geoconv.
"""

from enum import Enum

VarKind = Enum('VarKind', 'FREE BOUND')
Requirement = Enum('Requirement', 'GEOMETRIC IN_Q')

class Mode(Enum):
    CLASSICAL = 1
    INTUITIONISTIC = 2
    MINIMAL = 3

    @property
    def display_name(self) -> str:
        return self.name.lower()

    @property
    def single_succedent(self) -> bool:
        return self != Mode.CLASSICAL

    @classmethod
    def parse(cls, s: str) -> 'Mode':
        try:
            return cls[s.strip().upper()]
        except KeyError:
            raise ValueError(f"Unknown mode '{s}', expected one of "
                             f"{', '.join(m.display_name for m in cls)}")

class RuleKind(Enum):
    AX_ID = 'AxId'
    AX_BOT = 'AxBot'
    AX_THEORY = 'AxTheory'
    WEAK_L = 'WeakL'
    WEAK_R = 'WeakR'
    CONTR_L = 'ContrL'
    CONTR_R = 'ContrR'
    EXCH_L = 'ExchL'
    EXCH_R = 'ExchR'
    CUT = 'Cut'
    AND_L = 'AndL'
    AND_R = 'AndR'
    OR_L = 'OrL'
    OR_R = 'OrR'
    IMP_L = 'ImpL'
    IMP_R = 'ImpR'
    ALL_L = 'AllL'
    ALL_R = 'AllR'
    EX_L = 'ExL'
    EX_R = 'ExR'

    @property
    def display_name(self) -> str:
        return self.value

    @property
    def arity(self) -> int:
        """Number of premises the rule takes."""
        if self in (RuleKind.AX_ID, RuleKind.AX_BOT, RuleKind.AX_THEORY):
            return 0
        if self in (RuleKind.CUT, RuleKind.AND_R, RuleKind.OR_L, RuleKind.IMP_L):
            return 2
        return 1

    @property
    def takes_term(self) -> bool:
        return self in (RuleKind.ALL_L, RuleKind.EX_R)

    @property
    def takes_eigenvariable(self) -> bool:
        return self in (RuleKind.ALL_R, RuleKind.EX_L)

    @property
    def is_structural(self) -> bool:
        return self in (RuleKind.WEAK_L, RuleKind.WEAK_R, RuleKind.CONTR_L,
                        RuleKind.CONTR_R, RuleKind.EXCH_L, RuleKind.EXCH_R)

    @classmethod
    def parse(cls, s: str) -> 'RuleKind':
        for kind in cls:
            if kind.value == s:
                return kind
        raise ValueError(f"Unknown rule '{s}'")

class Step(Enum):
    INPUT = 0
    STEP1 = 1
    STEP2 = 2
    STEP3 = 3
    STEP4 = 4
    STEP5 = 5
    OUTPUT = 6

    @property
    def display_name(self) -> str:
        return self.name.lower()

    @property
    def mode(self) -> Mode:
        """The mode each pipeline artifact is checked in."""
        if self == Step.INPUT:
            return Mode.CLASSICAL
        if self == Step.STEP1:
            return Mode.MINIMAL
        return Mode.INTUITIONISTIC
