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

"""Command-line application.

Each subcommand returns the process exit code: 0 when everything checks,
1 when violations (or a rejected transform) were found. Usage and I/O
errors surface as exceptions and exit 2 from main().

    App: the main class exported by this module.
"""

import argparse
from pathlib import Path
from timeit import default_timer as timer
from typing import List, Optional

from tinta import Tinta

import geoconvlib.config as config
from .bench import BenchConfig, run_bench
from .calculus import EMPTY, Derivation, Theory, check, size
from .classes import classify, validate_theory
from .combinators import LEMMA_MODES, embed_j, embed_q, embed_r, lemma, statement
from .console import Console
from .constants import *
from .corpus import FAMILIES, transform_corpus
from .enums import Mode, Requirement, Step
from .errors import PipelineError
from .formatter import Format as ƒ
from .parser import Parser
from .pipeline import barr_transform
from .syntax import Signature
from .translation import TranslatedTheory, e_translate, gg_translate, translate_derivation

EMBEDDINGS = {'q': (embed_q, Mode.INTUITIONISTIC),
              'r': (embed_r, Mode.INTUITIONISTIC),
              'j': (embed_j, Mode.INTUITIONISTIC)}

def _global_flags() -> argparse.ArgumentParser:
    """The flags config reads at import; accepted here so they do not
    trip up subcommand parsing.
    """
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument('--config', nargs=1)
    p.add_argument('--log')
    p.add_argument('-d', '--debug', action='store_true')
    p.add_argument('--plaintext', action='store_true')
    p.add_argument('--no-console', action='store_true')
    return p

class App:
    """Main class for running subcommands.

    All methods are static, thus this class should never be instantiated.
    """

    @staticmethod
    def parser() -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog='geoconv', parents=[_global_flags()],
            description='Check sequent-calculus proofs and turn classical proofs '
                        'of geometric implications into intuitionistic ones.')
        sub = parser.add_subparsers(dest='command', required=True)

        def theory_flag(p):
            p.add_argument('--theory', metavar='FILE', help='theory file')

        p = sub.add_parser('check', help='check a derivation file')
        p.add_argument('proof', metavar='PROOF')
        p.add_argument('--mode', choices=[m.display_name for m in Mode])
        theory_flag(p)

        p = sub.add_parser('classify', help='classify a formula or validate a theory')
        p.add_argument('formula', metavar='FORMULA', nargs='?',
                       help='formula text or a file holding one')
        p.add_argument('--require', choices=['geometric', 'in-q'], default='geometric')
        theory_flag(p)

        p = sub.add_parser('translate', help='E-translate a formula or a derivation')
        p.add_argument('formula', metavar='FORMULA', nargs='?',
                       help='formula text, or a derivation file followed by its THEORY')
        p.add_argument('theory_file', metavar='THEORY', nargs='?')
        p.add_argument('--proof', metavar='PROOF')
        p.add_argument('--gg', action='store_true', help='Gödel-Gentzen translation instead')
        p.add_argument('-o', '--output', metavar='FILE')
        theory_flag(p)

        p = sub.add_parser('lemma', help='build a lemma item (1-10) or an embedding (q, r, j)')
        p.add_argument('item', choices=[str(i) for i in range(1, 11)] + list(EMBEDDINGS))
        p.add_argument('--phi', metavar='FORMULA')
        p.add_argument('--psi', metavar='FORMULA')
        p.add_argument('--body', metavar='FORMULA', help='quantified formula for items 9 and 10')
        p.add_argument('-o', '--output', metavar='FILE')

        p = sub.add_parser('transform', help='classical to intuitionistic proof transform')
        p.add_argument('proof', metavar='PROOF', nargs='?')
        p.add_argument('theory', metavar='THEORY', nargs='?')
        p.add_argument('--emit-trace', metavar='DIR')
        p.add_argument('--corpus', action='store_true', help='transform every built-in sample')
        p.add_argument('-o', '--output', metavar='FILE')

        p = sub.add_parser('bench', help='measure transform growth over a proof family')
        p.add_argument('--family', choices=list(FAMILIES))
        p.add_argument('--n-min', type=int)
        p.add_argument('--n-max', type=int)
        p.add_argument('--output-dir', metavar='DIR')
        p.add_argument('--workers', type=int)
        return parser

    @staticmethod
    def run(argv: Optional[List[str]] = None) -> int:
        """Parses `argv` and runs the subcommand. Returns the exit code."""
        args = App.parser().parse_args(argv)
        Console.welcome(args.command)
        return getattr(App, f'_{args.command}')(args)

    # Input

    @staticmethod
    def signature() -> Signature:
        if config.signature:
            return Parser.signature_file(Path(config.signature).read_text(encoding='utf-8'))
        return Signature(strict=False)

    @staticmethod
    def _text(s: str) -> str:
        """`s` itself, or the contents of the file it names."""
        path = Path(s)
        return path.read_text(encoding='utf-8') if '(' not in s and path.is_file() else s

    @staticmethod
    def _is_proof(s: str) -> bool:
        """True if `s` names a file holding a derivation."""
        path = Path(s)
        if '(' in s or not path.is_file():
            return False
        top = Parser(path.read_text(encoding='utf-8')).sexprs
        return bool(top) and isinstance(top[0], list) and top[0][:1] == ['node']

    @staticmethod
    def read_theory(path: Optional[str], sig: Signature) -> Theory:
        if path is None:
            return EMPTY
        return Parser(Path(path).read_text(encoding='utf-8'), sig).theory()

    @staticmethod
    def read_proof(path: str, sig: Signature) -> Derivation:
        return Parser(Path(path).read_text(encoding='utf-8'), sig, allow_fresh=True).derivation()

    @staticmethod
    def _emit(d: Derivation, output: Optional[str], sig: Signature = None):
        text = ƒ.derivation(d, sig)
        if output:
            Path(output).write_text(text, encoding='utf-8')
            Console.ok(f'Wrote {output}')
        elif not config.no_console:
            print(text, end='')

    # Subcommands

    @staticmethod
    def _check(args) -> int:
        sig = App.signature()
        theory = App.read_theory(args.theory, sig)
        d = App.read_proof(args.proof, sig)
        report = check(d, Mode.parse(args.mode or config.mode), theory)
        Console.violations(report)
        return 0 if report.ok else 1

    @staticmethod
    def _classify(args) -> int:
        sig = App.signature()
        code = 0
        if args.theory:
            theory = App.read_theory(args.theory, sig)
            requirement = Requirement.GEOMETRIC if args.require == 'geometric' \
                else Requirement.IN_Q
            report = validate_theory(theory, requirement)
            Console.theory_report(report, theory.name)
            code = 0 if report.ok else 1
        if args.formula:
            f = Parser(App._text(args.formula), sig).formula()
            Console.membership(ƒ.formula(f, sig), classify(f))
        return code

    @staticmethod
    def _translate(args) -> int:
        sig = App.signature()
        proof = args.proof
        if proof is None and args.formula and (args.theory_file or App._is_proof(args.formula)):
            proof = args.formula
        if proof:
            theory = App.read_theory(args.theory or args.theory_file, sig)
            d = App.read_proof(proof, sig)
            out = translate_derivation(d, theory)
            App._emit(out, args.output, sig)
            Console.size_table([(Step.INPUT.display_name, size(d)),
                                (Step.OUTPUT.display_name, size(out))])
            report = check(out, Mode.MINIMAL, TranslatedTheory.of(theory).as_theory())
            Console.violations(report)
            return 0 if report.ok else 1
        if not args.formula:
            raise ValueError('translate needs a FORMULA or a PROOF')
        f = Parser(App._text(args.formula), sig).formula()
        Tinta().white(ƒ.formula(gg_translate(f) if args.gg else e_translate(f), sig)).print()
        return 0

    @staticmethod
    def _lemma(args) -> int:
        sig = App.signature()

        def read(s):
            return Parser(App._text(s), sig).formula() if s else None
        phi, psi, body = read(args.phi), read(args.psi), read(args.body)
        if args.item in EMBEDDINGS:
            if phi is None:
                raise ValueError(f'Embedding {args.item} needs --phi')
            build, mode = EMBEDDINGS[args.item]
            d = build(phi)
        else:
            i = int(args.item)
            d, mode = lemma(i, phi, psi, body), LEMMA_MODES[i]
            Tinta().gray(f'{i}: ').white(ƒ.formula(statement(i, phi, psi, body), sig)).print()
        App._emit(d, args.output, sig)
        report = check(d, mode)
        Console.violations(report)
        return 0 if report.ok else 1

    @staticmethod
    def _transform(args) -> int:
        if args.corpus:
            spinner = Console.spinner('Transforming the built-in corpus...')
            spinner.start()
            try:
                results = transform_corpus()
            finally:
                spinner.stop()
            for name, trace in results:
                Console.ok(f'{name} {ARROW} {ƒ.count(trace.sizes[Step.OUTPUT].inference_count, "inference")}')
            return 0
        if not (args.proof and args.theory):
            raise ValueError('transform needs PROOF and THEORY, or --corpus')
        sig = App.signature()
        theory = App.read_theory(args.theory, sig)
        d = App.read_proof(args.proof, sig)
        start = timer()
        spinner = Console.spinner('Transforming...')
        spinner.start()
        failure = None
        try:
            trace = barr_transform(d, theory)
        except PipelineError as e:
            failure = e
        finally:
            spinner.stop()
        if failure is not None:
            if failure.trace is not None and args.emit_trace:
                failure.trace.write(args.emit_trace)
            Console.error(str(failure))
            return 1
        if args.emit_trace:
            trace.write(args.emit_trace)
            Console.ok(f'Trace written to {args.emit_trace}')
        Console.sizes(trace)
        Console.ok(f'Output checks in intuitionistic mode ({round(timer() - start, 2)} seconds)')
        if args.output:
            App._emit(trace.output, args.output, sig)
        return 0

    @staticmethod
    def _bench(args) -> int:
        cfg = BenchConfig.from_config(family=args.family, n_min=args.n_min, n_max=args.n_max,
                                      output_dir=args.output_dir, workers=args.workers)
        start = timer()
        result = run_bench(cfg, Console.progress)
        Console.ok(f'{ƒ.count(len(result.sizes), "transform")} in '
                   f'{round(timer() - start, 1)} seconds, written to {cfg.output_dir}')
        if result.fit:
            Console.growth(result.fit)
        return 0
