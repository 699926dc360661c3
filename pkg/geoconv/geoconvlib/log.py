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

"""Logging handler for Geoconv.

Every transform, bench run and CLI command writes one line per step to
history.log under config.log_path.

    Log: the main class exported by this module.
"""

import sys
import logging
import datetime
from pathlib import Path

import geoconvlib.config as config

def _now() -> str:
    return datetime.datetime.now().strftime("%Y-%m-%d %H:%M:%S")

class Log:
    """Main class for log writing methods.

    All methods are static, thus this class should never be instantiated.
    """
    @staticmethod
    def config():
        """Configure the logger. When logging is turned off, it is disabled.
        """
        if not config.log_enabled:
            Log.disable()
        else:
            logging.basicConfig(format='%(message)s',
                                filename=str(Path(config.log_path) / 'history.log'),
                                level=logging.DEBUG)

    @staticmethod
    def disable():
        """Disable logging. Cannot be called in debug mode.
        """
        if not config.debug:
            logging.disable(sys.maxsize)
            logging.getLogger().setLevel(logging.WARNING)

    @staticmethod
    def enable():
        if config.log_enabled:
            logging.disable(logging.NOTSET)
            logging.getLogger().setLevel(logging.INFO)

    @staticmethod
    def info(s):
        logging.info(f'{_now()}::{s}')

    @staticmethod
    def error(s):
        """Write an error to the log.
        """
        logging.error(f'{_now()} - Error: {s}')

    @staticmethod
    def debug(s):
        logging.debug(f'{_now()} - Debug: {s}')

# Configure the logger when this module is loaded.
Log.config()
