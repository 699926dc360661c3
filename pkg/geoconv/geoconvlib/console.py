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

"""Console output and log proxy handler for Geoconv.

This module handles all the console output for the app, and proxies some
output to the log module.

    Console: the main class exported by this module.
"""

import os
import sys
from datetime import datetime
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Tuple

from halo import Halo
from tinta import Tinta

import geoconvlib.config as config
from .constants import *
from .formatter import Format as ƒ
from .log import Log
from .progress import Progress

Tinta.load_colors(Path(__file__).parent.parent / 'colors.ini')
if config.plaintext:
    os.environ['TINTA_PLAINTEXT'] = '1'

if TYPE_CHECKING:
    from .calculus import CheckReport, SizeReport
    from .classes import ClassMembership, TheoryReport
    from .pipeline import GrowthFit, PipelineTrace

class Console():

    @staticmethod
    def _print(c: Tinta, **kwargs):
        if not config.no_console:
            c.print(**kwargs)

    @staticmethod
    def welcome(command: str):
        """Log a section header for the command about to run."""
        date = f' {datetime.now().strftime("%Y-%m-%d %H:%M:%S")} '
        dashes = "-" * 30
        Log.info(f'{dashes}{date}{command} {dashes}')
        if config.debug:
            Console._print(Tinta().pink(f'geoconv {command}').purple(' ★ debug mode'))

    @staticmethod
    def ok(s: str):
        Log.info(s)
        Console._print(Tinta().green(f'{CHECK} {s}'))

    @staticmethod
    def violations(report: 'CheckReport'):
        """Print every violation of a failed check, or a single check mark."""
        mode = report.mode.display_name
        if report.ok:
            return Console.ok(f'Checks in {mode} mode')
        n = len(report.violations)
        Log.info(f'{n} violations in {mode} mode')
        Console._print(Tinta().red(f'{FAIL} {ƒ.count(n, "violation")} in {mode} mode'))
        for v in report.violations:
            Log.info(f'{INDENT}{v}')
            Console._print(Tinta().gray(f'{INDENT}{v}'))

    @staticmethod
    def membership(f, cm: 'ClassMembership'):
        Console._print(Tinta().white(str(f)))
        for name, member in cm.as_dict().items():
            c = Tinta(INDENT)
            (c.green(f'{CHECK} ') if member else c.dark_gray(f'{FAIL} ')).push(name)
            Console._print(c)

    @staticmethod
    def theory_report(report: 'TheoryReport', name: str):
        wanted = report.requirement.name.lower().replace('_', ' ')
        if report.ok:
            return Console.ok(f"Every axiom of '{name}' is {wanted}")
        for i, axiom in report.failures:
            Console._print(Tinta().red(f'{FAIL} axiom {i} is not {wanted}: ').gray(str(axiom)))

    @staticmethod
    def sizes(trace: 'PipelineTrace'):
        """Print the sizes table of a trace, one step per line."""
        Console.size_table((step.display_name, report) for step, report in trace.sizes.items())

    @staticmethod
    def size_table(rows: Iterable[Tuple[str, 'SizeReport']]):
        Console._print(Tinta().gray('  '.join(f'{c:>15}' for c in SIZE_COLUMNS)))
        for name, report in rows:
            row = ƒ.sizes_row(name, report)
            Log.info(' '.join(row))
            Console._print(Tinta().white('  '.join(f'{c:>15}' for c in row)))

    @staticmethod
    def growth(fit: 'GrowthFit'):
        c = Tinta().pink(f'Growth {ARROW} ').white(f'slope {ƒ.ratio(fit.slope)}')
        c.gray(f', max ratio {ƒ.ratio(fit.max_ratio)}'
               f', ratio of ratios {ƒ.ratio(fit.ratio_of_ratios)}')
        Console._print(c)
        for step, k in fit.per_step.items():
            Console._print(Tinta().gray(f'{INDENT}{step.display_name}: {ƒ.ratio(k)}'))

    @staticmethod
    def progress(done: int, total: int):
        """Redraw the bench progress bar in place."""
        if config.no_console:
            return
        sys.stdout.write(f'\r{Progress.bar(100.0 * done / total)}')
        if done == total:
            sys.stdout.write('\n')
        sys.stdout.flush()

    @staticmethod
    def exit_early():
        Tinta().pink('\n\nInterrupted.').print()

    @staticmethod
    def debug(s: str = '', end=None):
        """Print debugging details, if config.debug is enabled.

        Args:
            s: (str, utf-8) String to print
        """
        if config.debug is True:
            Log.debug(s)
            Tinta().push('🐞 ').debug(s).print(end=end)

    @staticmethod
    def error(s: str = ''):
        """Print and log an error.

        Args:
            s (str): String to print.
        """
        Log.error(s)
        Tinta().bold().error(s).print()

    @staticmethod
    def spinner(s: str = '') -> Halo:
        halo = Halo()
        if (not config.no_console
            and not config.plaintext
                and not config.debug):
            halo = Halo(text=s,
                        spinner='dots',
                        color='yellow',
                        text_color='yellow')
        else:
            halo.start = lambda: Console._print(Tinta(s))
            halo.stop = lambda: None
        return halo
