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

# Config and static modules
import geoconvlib.config as config
import geoconvlib.constants as constants
import geoconvlib.patterns as patterns
import geoconvlib.enums as enums

# Low-level library dependencies (init first)
from .log import Log
from .errors import *
from .syntax import *
from .parser import Parser, parse_formula
from .formatter import Format
from .progress import Progress
from .console import Console
from .calculus import *
from .builder import Build

# Higher level modules (init after)
from .classes import ClassMembership, classify, validate_theory
from .translation import *
from .combinators import Embedding, embed_j, embed_q, embed_r, lemma, lemma_hyp, statement
from .substitution import subst_placeholder_deriv, subst_var_deriv
from .pipeline import PipelineTrace, barr_transform, growth_report
from .corpus import TheoryCorpusEntry, builtin_theories, gen_family, transform_corpus
from .bench import BenchConfig, run_bench
from .app import App
