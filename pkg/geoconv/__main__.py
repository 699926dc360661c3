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

"""Main entry point."""

import sys

import __init__ as geoconv

if __name__ == "__main__":
    sys.exit(geoconv.main())
