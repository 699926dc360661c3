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

"""Geoconv setup module.
"""

from pathlib import Path

from setuptools import setup

here = Path(__file__).parent

# Get the long description from the relevant file.
long_description = (here / 'README.md').read_text(encoding='utf-8')

requirements = (here / 'requirements.txt').read_text().splitlines()
requirements_test = (here / 'requirements-test.txt').read_text().splitlines()

setup(
    name='Geoconv',

    version='0.1.0',

    description='A sequent-calculus kernel that turns classical proofs of '
                'geometric implications into intuitionistic proofs.',
    long_description=long_description,
    long_description_content_type='text/markdown',

    # License
    license='GPLv3',

    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 3 - Alpha',

        # Environment
        'Environment :: Console',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',

        # Supported Python versions.
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
    ],

    install_requires=requirements,

    # Dev dependencies
    extras_require={
        'test': requirements_test
    },

    # Entry points
    entry_points={
        'console_scripts': ['geoconv = geoconv:main'],
    },
)
