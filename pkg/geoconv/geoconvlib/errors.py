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

"""Exceptions raised by Geoconv.

Checker violations are reported as data and never raised; everything here
signals a bad input or a broken precondition.
"""

class GeoconvError(Exception):
    """Base class for all Geoconv errors."""
    pass

class ParseError(GeoconvError):
    """Raised when S-expression input is malformed."""

    def __init__(self, message: str, position: int = None):
        self.message = message
        self.position = position
        super().__init__(f'{message} at position {position}'
                         if position is not None else message)

class SignatureError(GeoconvError):
    """Raised on arity mismatches and reserved-symbol misuse."""
    pass

class FormulaError(GeoconvError):
    """Raised when a formula breaks a formation rule or an E-free precondition."""
    pass

class DerivationError(GeoconvError):
    """Raised when a derivation cannot be built from the given pieces."""
    pass

class ClassError(GeoconvError):
    """Raised when a formula is outside the class an operation requires."""
    pass

class PipelineError(GeoconvError):
    """Raised when a transform precondition fails or a step does not re-check.

    The partial trace, when there is one, rides along for inspection.
    """

    def __init__(self, message: str, trace=None):
        self.trace = trace
        super().__init__(message)

class GrowthError(GeoconvError):
    """Raised when there are too few traces to fit a growth curve."""
    pass

class BenchConfigError(GeoconvError):
    """Raised when a bench configuration is invalid."""
    pass
