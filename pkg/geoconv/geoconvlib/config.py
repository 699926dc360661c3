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

"""Config loader for Geoconv runtime options

This module loads configuration options from config.yaml, and optionally
CLI arguments.

    config: an instance of the main class (Config) exported by this module.
"""

import argparse
import codecs
import os
import sys
from pathlib import Path

import yaml
from addict import Dict
from mergedeep import merge

class ConfigModel(object):
    """A model for the config.yaml file.

    Holds the typed defaults that config.yaml and the CLI override.
    """

    def __init__(self, *args, **kwargs):

        super().__init__(*args, **kwargs)

        self.mode: str = 'classical'
        self.signature: str = None
        self.log_path: str = './'
        self.log_enabled: bool = True
        self.debug: bool = False
        self.no_console: bool = False
        self.plaintext: bool = False

        class BenchConfig:
            def __init__(self):
                self.family: str = 'case-split'
                self.n_min: int = 2
                self.n_max: int = 50
                self.output_dir: str = './bench'
                self.workers: int = 1
        self.bench = BenchConfig()

        class LimitsConfig:
            def __init__(self):
                self.recursion: int = 100000
        self.limits = LimitsConfig()

    def update(self, d: Dict):
        """Update the config model with a new dictionary.

        Args:
            d: A dictionary to update the config model with.
        """

        for k, v in self.__dict__.items():
            if hasattr(v, '__dict__') and not isinstance(v, dict):
                self.__dict__[k] = Dict(v.__dict__)
        self.__dict__ = merge(self.__dict__, d)

class Config(ConfigModel):
    """Main class for handling app options.
    """

    __instance = None

    def __new__(cls):
        if cls.__instance is None:
            cls.__instance = super(Config, cls).__new__(cls)
            cls.__instance.__initialized = False
        return cls.__instance

    def __init__(self):
        """Load config.yaml and map global CLI arguments, if applicable.

        Subcommands and their options are parsed by the app.
        """

        if self.__initialized:
            return
        self.__initialized = True

        parser = argparse.ArgumentParser(add_help=False)

        self._defaults = ConfigModel()

        # --config
        # Overrides the path to the built-in config file.
        config_path = [os.path.join(os.path.dirname(
            os.path.dirname(__file__)), 'config.yaml')]

        parser.add_argument(
            '--config',
            action='store',
            nargs=1,
            default=config_path,
            dest='config_path',
            type=str)

        # --log
        # Overrides the directory history.log is written to.
        parser.add_argument(
            '--log',
            action='store',
            default=None,
            dest='log_path',
            type=str)

        # -d, --debug
        # Prints tracebacks and per-step details.
        parser.add_argument(
            '-d',
            '--debug',
            action='store_true',
            default=None,
            dest='debug')

        # --no-console
        parser.add_argument(
            '--no-console',
            action='store_true',
            default=None,
            dest='no_console')

        # --plaintext
        # Output without colors.
        parser.add_argument(
            '--plaintext',
            action='store_true',
            default=None,
            dest='plaintext')

        # Parse known args and discard any we don't know about.
        args, _ = parser.parse_known_args()

        config_path = args.config_path[0]
        assert Path(config_path).exists(), f'Config file does not exist: {config_path}'
        del args.config_path

        # Load the config file and map it to a 'Dict', a dot-notated dictionary.
        with codecs.open(config_path, encoding='utf-8') as yaml_config_file:
            self._defaults.update(Dict(yaml.safe_load(
                yaml_config_file.read()) or {}, sequence_type=list))

        # If using environment variables, overwrite defaults
        self._defaults.debug = str(os.environ.get('DEBUG', self._defaults.debug)).lower() not in ('false', '0', '')
        self._defaults.plaintext = str(os.environ.get(
            'GEOCONV_PLAINTEXT', self._defaults.plaintext)).lower() not in ('false', '0', '')

        # Map anything that is a dict (or a nested model) to a addict.Dict
        for k, v in self._defaults.__dict__.items():
            if hasattr(v, '__dict__') and not isinstance(v, dict):
                v = v.__dict__
            setattr(self, k, Dict(v) if isinstance(v, dict) else v)

        # Finally map any explicitly set args over the config.
        for k, v in args.__dict__.items():
            if v is not None:
                setattr(self, k, v)

    def reload(self):
        """Reload config from config.yaml."""

        self.__instance = None
        self.__initialized = False
        self.__init__()

        sys.modules[__name__] = self

# Apply attributes to globals() so this can be imported using `import config`
sys.modules[__name__] = Config()
