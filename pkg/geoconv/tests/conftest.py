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

import os
import sys
import logging
from pathlib import Path

# Add the package dirs to the path so we can load geoconvlib and the app.
sys.path.append(str(Path(__file__).parent.parent))
sys.path.append(str(Path(__file__).parent))
sys.path.append(str(Path(__file__).parent.parent.parent))

import pytest

import geoconvlib.config as config
from geoconvlib.log import Log

if os.getenv('_PYTEST_RAISE', "0") != "0":

    @pytest.hookimpl(tryfirst=True)
    def pytest_exception_interact(call):
        raise call.excinfo.value

    @pytest.hookimpl(tryfirst=True)
    def pytest_internalerror(excinfo):
        raise excinfo.value

@pytest.fixture(scope="function", autouse=True)
def setup():

    config.reload()

    # Keep test runs out of history.log and off the console.
    config.log_enabled = False
    config.no_console = not config.debug
    Log.disable()

    if os.environ.get('DEBUG') is not None:
        config.debug = os.environ.get('DEBUG').lower() == 'true'
    logging.getLogger().setLevel(logging.DEBUG if config.debug else logging.CRITICAL)
