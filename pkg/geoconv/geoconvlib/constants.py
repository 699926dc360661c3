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

"""Set of constants.

This module holds the reserved words, glyphs and fixed names for Geoconv.
"""

# Words of the formula grammar; no user symbol may use them.
KEYWORDS = ['bot', 'E', 'atom', 'and', 'or', 'imp', 'forall', 'exists']

# Heads accepted inside a theory file besides formulas.
DECLARATIONS = ['const', 'fun', 'pred']

# Fresh free variables are drawn from v0, v1, ...
FRESH_PREFIX = 'v'

# Preferred names for bound variables introduced by generalization.
BOUND_NAMES = ['x', 'y', 'z', 'u', 'w']

ARROW = '➜'
INDENT = '   '
CHECK = '✓'
FAIL = '×'
WARN = '!'

# Column order of every sizes table.
SIZE_COLUMNS = ['step', 'inference_count', 'symbol_count', 'height']
BENCH_COLUMNS = ['n', 'input_inferences', 'input_symbols', 'input_height',
                 'output_inferences', 'output_symbols', 'output_height', 'ratio']
