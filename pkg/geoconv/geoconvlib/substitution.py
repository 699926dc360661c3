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

"""Substitution in derivations: fresh variables for free variables, and
formulas for the placeholder E.
"""

from typing import Dict, Iterator, Set, Tuple

from .calculus import Derivation, Rule, Sequent, Theory
from .errors import DerivationError
from .syntax import *

def derivation_vars(d: Derivation) -> Set[str]:
    """Every free variable name in `d`: sequents, witnessing terms and
    eigenvariables.
    """
    names: Set[str] = set()
    seen = set()
    stack = [d]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        names |= node.conclusion.free_vars
        if node.rule.term is not None:
            names |= term_free_vars(node.rule.term)
        if node.rule.eigen is not None:
            names.add(node.rule.eigen.name)
        stack.extend(node.premises)
    return names

def _rename_rule(rule: Rule, renaming: Dict[str, str]) -> Rule:
    if rule.term is not None:
        mapping = {free(a): free(c) for a, c in renaming.items()}
        term = term_subst(rule.term, mapping)
        return rule if term == rule.term else Rule(rule.kind, term=term)
    if rule.eigen is not None and rule.eigen.name in renaming:
        return Rule(rule.kind, eigen=free(renaming[rule.eigen.name]))
    return rule

def _fresh_names(avoid: Set[str]) -> Iterator[str]:
    i = 0
    while True:
        name = f'{FRESH_PREFIX}{i}'
        if name not in avoid:
            yield name
        i += 1

def subst_var_deriv(d: Derivation, a: Variable, c: Variable) -> Derivation:
    """D[a:=c] for a variable `c` that does not occur in `d`.

    Raises:
        DerivationError: `c` occurs in `d`.
    """
    names = derivation_vars(d)
    if c.name in names:
        raise DerivationError(f"'{c}' occurs in the derivation")
    if a.name not in names:
        return d
    return _rebuild(d, {a.name: c.name}, lambda node, renaming: renaming)

def subst_placeholder_deriv(d: Derivation, psi: Formula, theory: Theory = None) -> Derivation:
    """D[E:=ψ], renaming the eigenvariable of every AllR and ExL inference
    to a variable occurring neither in `d` nor in `psi`.

    Raises:
        DerivationError: an axiom of `theory` mentions E.
    """
    if theory is not None and any(a.has_placeholder for a in theory.axioms):
        raise DerivationError(f"Axioms of '{theory.name}' mention E")
    if isinstance(psi, Placeholder):
        return d
    fresh = _fresh_names(derivation_vars(d) | psi.free_vars)

    def above(node: Derivation, renaming: Dict[str, str]) -> Dict[str, str]:
        if node.rule.eigen is None:
            return renaming
        return {**renaming, node.rule.eigen.name: next(fresh)}
    return _rebuild(d, {}, above, psi)

def _rebuild(d: Derivation, root: Dict[str, str], above, psi: Formula = None) -> Derivation:
    """Rebuilds `d` bottom-up after pushing renamings from the root upward.

    `above(node, renaming)` gives the renaming in force over the premises
    of `node`; `renaming` itself applies to the conclusion of `node`.
    """
    def frozen(renaming):
        return tuple(sorted(renaming.items()))

    def fix(f: Formula, renaming) -> Formula:
        f = rename_free(f, renaming)
        return f if psi is None else subst_placeholder(f, psi)

    out: Dict[Tuple[int, tuple], Derivation] = {}
    stack = [(d, root, None)]
    while stack:
        node, renaming, upper = stack.pop()
        key = (id(node), frozen(renaming))
        if key in out:
            continue
        if upper is None:
            upper = above(node, renaming)
            stack.append((node, renaming, upper))
            stack.extend((p, upper, None) for p in node.premises)
            continue
        premises = tuple(out[(id(p), frozen(upper))] for p in node.premises)
        if node.rule.eigen is not None and node.rule.eigen.name in upper:
            rule = Rule(node.rule.kind, eigen=free(upper[node.rule.eigen.name]))
        else:
            rule = _rename_rule(node.rule, renaming)
        seq = Sequent(tuple(fix(f, renaming) for f in node.ante),
                      tuple(fix(f, renaming) for f in node.succ))
        out[key] = Derivation(seq, rule, premises)
    return out[(id(d), frozen(root))]
