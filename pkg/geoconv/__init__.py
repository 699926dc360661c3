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

"""Geoconv checks sequent-calculus derivations in classical, intuitionistic
and minimal logic, and turns classical proofs of geometric implications
into intuitionistic proofs of the same sequent.

Every intermediate derivation of a transform is kept and re-checked, so
the output can be audited step by step.
"""

import sys

import geoconvlib.config as config
from geoconvlib import App, Console
from geoconvlib.errors import GeoconvError

__version__ = '0.1.0'

def main(argv=None) -> int:
    """Main program. Returns 0 when everything checks, 1 on violations and
    2 on usage or I/O errors.
    """
    try:
        return App.run(argv)
    except KeyboardInterrupt:
        Console.exit_early()
        return 2
    except (GeoconvError, ValueError, IOError, OSError) as e:
        Console.error(f'{type(e).__name__}: {e}')
        if config.debug:
            import traceback
            traceback.print_exc()
        return 2
