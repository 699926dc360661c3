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

"""A set of regular expression patterns.

This module exports the regular expressions used by the S-expression
reader and the signature file reader.
"""

import re

# Identifiers of the formula grammar.
IDENT = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')

# The reserved namespace of fresh free variables.
FRESH = re.compile(r'^v(?P<index>\d+)$')

# A single token of an S-expression: a paren or a run of anything else.
TOKEN = re.compile(r'(?P<open>\()|(?P<close>\))|(?P<atom>[^\s()]+)')

# Non-negative decimal numbers (arities, axiom indices).
NATURAL = re.compile(r'^\d+$')

# Blank or comment lines of a signature file.
COMMENT = re.compile(r'^\s*(?:#.*)?$')

# One signature declaration: "fun name arity", "pred name arity" or "const name".
DECLARATION = re.compile(
    r'^\s*(?:(?P<kind>fun|pred)\s+(?P<name>\S+)\s+(?P<arity>\S+)'
    r'|const\s+(?P<const>\S+))\s*$')
