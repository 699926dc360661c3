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

"""Built-in theories with classical sample proofs, and generated proof
families for growth measurements.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from .builder import Build
from .calculus import Derivation, Infer, Theory, cut
from .classes import validate_theory
from .enums import Requirement
from .errors import BenchConfigError
from .parser import Parser
from .pipeline import PipelineTrace, barr_transform
from .syntax import *

A, B, C, D = free('a'), free('b'), free('c'), free('d')
X = bound('x')

@dataclass(frozen=True)
class Sample:
    name: str
    goal: Formula
    proof: Derivation

@dataclass(frozen=True)
class TheoryCorpusEntry:
    name: str
    theory: Theory
    signature: Signature
    samples: Tuple[Sample, ...]

    @property
    def sample_goals(self) -> Tuple[Formula, ...]:
        return tuple(s.goal for s in self.samples)

def _ax(t: Theory, i: int) -> Derivation:
    return Infer.ax_theory(t, i)

def _inst(d: Derivation, *terms: Term) -> Derivation:
    for t in terms:
        d = Build.inst(d, t)
    return d

def _instance(f: Formula, *terms: Term) -> Formula:
    for t in terms:
        f = f.instantiate(t)
    return f

def _gen(d: Derivation, goal: ForAll, *variables: Variable) -> Derivation:
    """Generalizes over `variables`, outermost first, back to `goal`."""
    prefix, q = [], goal
    for a in variables:
        prefix.append(q)
        q = q.instantiate(a)
    for q, a in reversed(list(zip(prefix, variables))):
        d = Build.gen(d, a, q)
    return d

def _move_r(d: Derivation, i: int, j: int) -> Derivation:
    return d if i == j else Infer.exch_r(d, i, j)

def _merge(d: Derivation, disj: Or) -> Derivation:
    """Γ ⇒ Δ, A, B  gives  Γ ⇒ Δ, A ∨ B"""
    d = Infer.or_r(d, disj)
    n = len(d.succ)
    return Infer.contr_r(Infer.or_r(Infer.exch_r(d, n - 2, n - 1), disj))

def _swap(d: Derivation) -> Derivation:
    """Γ ⇒ A ∨ B  gives  Γ ⇒ B ∨ A through the sequent ⇒ B, A."""
    f = d.succ[-1]
    a, b = f.left, f.right
    split = Infer.or_l(Infer.ax_id((a,), (b, a)), Infer.ax_id((b,), (b, a)))
    return _merge(cut(d, split), Or(b, a))

# Sample proofs. Each takes the theory and the goal.

def _all_p(t, goal):
    disj = _instance(t.axioms[0], A)
    p, q = disj.left, disj.right
    no_q = Build.mp(_inst(_ax(t, 1), A), Build.hyp(q))
    d = Build.elim_or(_inst(_ax(t, 0), A), Build.hyp(p), Build.bot_elim(no_q, p))
    return _gen(d, goal, A)

def _swapped_axiom(i: int, *terms: Term):
    def proof(t, goal):
        return _gen(_swap(_inst(_ax(t, i), *terms)), goal, *terms)
    return proof

def _succ_not_zero(t, goal):
    g = _instance(goal, A)
    d = Build.bot_elim(Build.mp(_inst(_ax(t, 2), A), Build.hyp(g.left)), g.right)
    return _gen(Build.intro(d, g.left), goal, A)

def _succ_injective(t, goal):
    g = _instance(goal, A, B)
    inj = Build.mp(_inst(_ax(t, 3), A, B), Build.hyp(g.left))
    d = Build.mp(_inst(_ax(t, 1), A, B), inj)
    return _gen(Build.intro(d, g.left), goal, A, B)

def _succ_witness(t, goal):
    g = _instance(goal, A)
    refl = _inst(_ax(t, 0), Func('s', (A,)))
    return _gen(Build.witness(refl, g, A), goal, A)

def _trivial_ring(t, goal):
    g = _instance(goal, A)
    one, zero = const('one'), const('zero')
    flip = Build.mp(_inst(_ax(t, 1), one, zero), Build.hyp(g.left))
    d = Build.bot_elim(Build.mp(_ax(t, 2), flip), g.right)
    return _gen(Build.intro(d, g.left), goal, A)

def _complement_at_zero(t, goal):
    return _inst(_ax(t, 3), const('zero'))

def _two_steps_up(t, goal):
    up = t.axioms[4]
    g1 = _instance(goal, A)
    g2 = g1.instantiate(B)
    pair = g2.instantiate(C)
    d = Build.conj(Build.hyp(pair.left), Build.hyp(pair.right))
    d = Build.witness(Build.witness(d, g2, C), g1, B)
    d = Build.cut_with(_inst(_ax(t, 4), B), Build.unpack(d, up.instantiate(B), C))
    d = Build.cut_with(_inst(_ax(t, 4), A), Build.unpack(d, up.instantiate(A), B))
    return _gen(d, goal, A)

def _dense_step(t, goal):
    g = _instance(goal, A, B)
    dense = Build.mp(_inst(_ax(t, 3), A, B), Build.hyp(g.left))
    between = dense.succ[0]
    mid = between.instantiate(C)
    pick = Build.witness(Build.proj(Build.hyp(mid)), g.right, C)
    d = Build.cut_with(dense, Build.unpack(pick, between, C))
    return _gen(Build.intro(d, g.left), goal, A, B)

def _euclidean(t, goal):
    g = _instance(goal, A, B, C)
    first_half = Build.proj(Build.hyp(g.left))
    back = Build.mp(_inst(_ax(t, 1), C, B), Build.proj(Build.hyp(g.left), right=True))
    d = Build.mp(_inst(_ax(t, 2), A, B, C), Build.conj(first_half, back))
    return _gen(Build.intro(d, g.left), goal, A, B, C)

def _symmetric_or_reflexive(t, goal):
    g = _instance(goal, A, B)
    flip = Build.mp(_inst(_ax(t, 1), A, B), Build.hyp(g.left))
    d = _merge(Infer.weak_r(flip, g.right.right), g.right)
    return _gen(Build.intro(d, g.left), goal, A, B)

def _point_on_a_line(t, goal):
    g = _instance(goal, A)
    line = Build.mp(_inst(_ax(t, 2), A, A), Build.conj(Build.hyp(g.left), Build.hyp(g.left)))
    through = line.succ[0]
    mid = through.instantiate(C)
    on = Build.proj(Build.proj(Build.hyp(mid), right=True))
    pick = Build.witness(Build.conj(Build.proj(Build.hyp(mid)), on), g.right, C)
    d = Build.cut_with(line, Build.unpack(pick, through, C))
    return _gen(Build.intro(d, g.left), goal, A)

def _same_line_or_point(t, goal):
    g = _instance(goal, A, B, C, D)
    d = _swap(Build.mp(_inst(_ax(t, 4), A, B, C, D), Build.hyp(g.left)))
    return _gen(Build.intro(d, g.left), goal, A, B, C, D)

def _successor_not_zero(t, goal):
    g = _instance(goal, A)
    zero = const('zero')
    apart = Build.conj(Build.hyp(g.left), _inst(_ax(t, 4), A))
    d = Build.mp(_inst(_ax(t, 3), Func('s', (A,)), zero), apart)
    return _gen(Build.intro(d, g.left), goal, A)

def _distinct_successors(t, goal):
    g = _instance(goal, A, B)
    sa, sb = Func('s', (A,)), Func('s', (B,))
    same = _instance(t.axioms[2], sa, sb).left
    back = Build.mp(_inst(_ax(t, 5), A, B), Build.hyp(same))
    clash = Build.mp(_inst(_ax(t, 3), A, B), Build.conj(back, Build.hyp(g.left)))
    d = Build.elim_or(_inst(_ax(t, 2), sa, sb), Build.bot_elim(clash, g.right),
                      Build.hyp(g.right))
    return _gen(Build.intro(d, g.left), goal, A, B)

_EQUALITY = """
  (forall x (atom Eq x x))
  (forall x (forall y (imp (atom Eq x y) (atom Eq y x))))"""

THEORIES = {
    'toy': ("""
(theory toy
  (pred P 1) (pred Q 1)
  (forall x (or (atom P x) (atom Q x)))
  (forall x (imp (atom Q x) bot)))""", [
        ('all-p', '(forall x (atom P x))', _all_p),
        ('q-or-p', '(forall x (or (atom Q x) (atom P x)))', _swapped_axiom(0, A)),
    ]),
    'robinson': (f"""
(theory robinson
  (const zero) (fun s 1) (fun plus 2) (pred Eq 2){_EQUALITY}
  (forall x (imp (atom Eq (s x) zero) bot))
  (forall x (forall y (imp (atom Eq (s x) (s y)) (atom Eq x y))))
  (forall x (or (atom Eq x zero) (exists y (atom Eq x (s y)))))
  (forall x (atom Eq (plus x zero) x))
  (forall x (forall y (atom Eq (plus x (s y)) (s (plus x y))))))""", [
        ('succ-not-zero', '(forall x (imp (atom Eq (s x) zero) (atom Eq x zero)))',
         _succ_not_zero),
        ('succ-injective', '(forall x (forall y (imp (atom Eq (s x) (s y)) (atom Eq y x))))',
         _succ_injective),
        ('succ-witness', '(forall x (exists y (atom Eq (s x) (s y))))', _succ_witness),
        ('successor-or-zero', '(forall x (or (exists y (atom Eq x (s y))) (atom Eq x zero)))',
         _swapped_axiom(4, A)),
    ]),
    'fields': (f"""
(theory fields
  (const zero) (const one) (fun mul 2) (pred Eq 2){_EQUALITY}
  (imp (atom Eq zero one) bot)
  (forall x (or (atom Eq x zero) (exists y (atom Eq (mul x y) one)))))""", [
        ('inverse-or-zero', '(forall x (or (exists y (atom Eq (mul x y) one)) (atom Eq x zero)))',
         _swapped_axiom(3, A)),
        ('trivial-ring', '(forall x (imp (atom Eq one zero) (atom Eq x zero)))', _trivial_ring),
    ]),
    'local-rings': (f"""
(theory local-rings
  (const zero) (const one) (fun mul 2) (fun sub 2) (pred Eq 2){_EQUALITY}
  (imp (atom Eq zero one) bot)
  (forall x (or (exists y (atom Eq (mul x y) one))
                (exists y (atom Eq (mul (sub one x) y) one)))))""", [
        ('complement-or-unit', '(forall x (or (exists y (atom Eq (mul (sub one x) y) one)) '
                               '(exists y (atom Eq (mul x y) one))))', _swapped_axiom(3, A)),
        ('trivial-ring', '(forall x (imp (atom Eq one zero) (atom Eq x zero)))', _trivial_ring),
        ('complement-at-zero', '(or (exists y (atom Eq (mul zero y) one)) '
                               '(exists y (atom Eq (mul (sub one zero) y) one)))',
         _complement_at_zero),
    ]),
    'dense-linear-orders': ("""
(theory dense-linear-orders
  (pred Lt 2) (pred Eq 2)
  (forall x (imp (atom Lt x x) bot))
  (forall x (forall y (forall z (imp (and (atom Lt x y) (atom Lt y z)) (atom Lt x z)))))
  (forall x (forall y (or (atom Lt x y) (or (atom Eq x y) (atom Lt y x)))))
  (forall x (forall y (imp (atom Lt x y) (exists z (and (atom Lt x z) (atom Lt z y))))))
  (forall x (exists y (atom Lt x y)))
  (forall x (exists y (atom Lt y x))))""", [
        ('two-steps-up', '(forall x (exists y (exists z (and (atom Lt x y) (atom Lt y z)))))',
         _two_steps_up),
        ('dense-step', '(forall x (forall y (imp (atom Lt x y) (exists z (atom Lt x z)))))',
         _dense_step),
        ('trichotomy', '(forall x (forall y (or (or (atom Eq x y) (atom Lt y x)) (atom Lt x y))))',
         _swapped_axiom(2, A, B)),
    ]),
    'equivalence-relations': ("""
(theory equivalence-relations
  (pred R 2)
  (forall x (atom R x x))
  (forall x (forall y (imp (atom R x y) (atom R y x))))
  (forall x (forall y (forall z (imp (and (atom R x y) (atom R y z)) (atom R x z))))))""", [
        ('euclidean', '(forall x (forall y (forall z (imp (and (atom R x y) (atom R z y)) '
                      '(atom R x z)))))', _euclidean),
        ('symmetric-or-reflexive', '(forall x (forall y (imp (atom R x y) '
                                   '(or (atom R y x) (atom R x x)))))', _symmetric_or_reflexive),
    ]),
    'projective-geometry': (f"""
(theory projective-geometry
  (pred Pt 1) (pred Ln 1) (pred On 2) (pred Eq 2) (pred Neq 2){_EQUALITY}
  (forall x (forall y (imp (and (atom Pt x) (atom Pt y))
                           (exists z (and (atom Ln z) (and (atom On x z) (atom On y z)))))))
  (forall x (forall y (imp (and (atom Ln x) (atom Ln y))
                           (exists z (and (atom Pt z) (and (atom On z x) (atom On z y)))))))
  (forall x (forall y (forall z (forall w
    (imp (and (and (atom On x z) (atom On y z)) (and (atom On x w) (atom On y w)))
         (or (atom Eq x y) (atom Eq z w)))))))
  (forall x (forall y (or (atom Eq x y) (atom Neq x y)))))""", [
        ('point-on-a-line', '(forall x (imp (atom Pt x) (exists z (and (atom Ln z) (atom On x z)))))',
         _point_on_a_line),
        ('same-line-or-point', '(forall x (forall y (forall z (forall w (imp (and (and (atom On x z) '
                               '(atom On y z)) (and (atom On x w) (atom On y w))) '
                               '(or (atom Eq z w) (atom Eq x y)))))))', _same_line_or_point),
        ('distinct-or-equal', '(forall x (forall y (or (atom Neq x y) (atom Eq x y))))',
         _swapped_axiom(5, A, B)),
    ]),
    'infinite-sets': (f"""
(theory infinite-sets
  (const zero) (fun s 1) (pred Eq 2) (pred Neq 2){_EQUALITY}
  (forall x (forall y (or (atom Eq x y) (atom Neq x y))))
  (forall x (forall y (imp (and (atom Eq x y) (atom Neq x y)) bot)))
  (forall x (atom Neq (s x) zero))
  (forall x (forall y (imp (atom Eq (s x) (s y)) (atom Eq x y)))))""", [
        ('successor-not-zero', '(forall x (imp (atom Eq (s x) zero) bot))', _successor_not_zero),
        ('distinct-successors', '(forall x (forall y (imp (atom Neq x y) (atom Neq (s x) (s y)))))',
         _distinct_successors),
        ('distinct-or-equal', '(forall x (forall y (or (atom Neq x y) (atom Eq x y))))',
         _swapped_axiom(2, A, B)),
    ]),
}

def load_entry(name: str) -> TheoryCorpusEntry:
    """Parses the theory `name` and builds its sample proofs.

    Raises:
        KeyError: no built-in theory is called `name`.
    """
    text, samples = THEORIES[name]
    parser = Parser(text)
    theory = parser.theory()
    built = []
    for sample, goal_text, proof in samples:
        goal = Parser(goal_text, parser.signature).formula()
        built.append(Sample(sample, goal, proof(theory, goal)))
    return TheoryCorpusEntry(name, theory, parser.signature, tuple(built))

def builtin_theories() -> List[TheoryCorpusEntry]:
    """Every built-in theory. Each passes geometric validation."""
    entries = [load_entry(name) for name in THEORIES]
    for e in entries:
        report = validate_theory(e.theory, Requirement.GEOMETRIC)
        assert report.ok, f'{e.name}: axiom {report.failures[0][0]} is not geometric'
    return entries

def transform_corpus() -> List[Tuple[str, PipelineTrace]]:
    """Runs the transform over every sample proof of every built-in theory."""
    return [(f'{e.name}/{s.name}', barr_transform(s.proof, e.theory, s.goal))
            for e in builtin_theories() for s in e.samples]

# Generated families. gen_family(name, n) returns (theory, goal, proof).

def _atoms(n: int, t: Term) -> List[Formula]:
    """P1(t), ..., P{n+1}(t)"""
    return [Atom(f'P{i}', (t,)) for i in range(1, n + 2)]

def _disjunction(fs: List[Formula]) -> Formula:
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = Or(f, out)
    return out

def _case_split(n: int) -> Tuple[Theory, Formula, Derivation]:
    """Axioms ∀x(P1 ∨ P2), ∀x(Pi → P1 ∨ Pi+1) for 2 ≤ i ≤ n and
    ∀x(Pn+1 → ⊥); goal ∀x(P1 ∨ Pn+1) by a chained classical case split.
    """
    ps = [None] + _atoms(n, X)
    axioms = [ForAll(X, Or(ps[1], ps[2]))]
    axioms += [ForAll(X, Imp(ps[i], Or(ps[1], ps[i + 1]))) for i in range(2, n + 1)]
    axioms += [ForAll(X, Imp(ps[n + 1], BOT))]
    theory = Theory(f'case-split-{n}', tuple(axioms))
    goal = ForAll(X, Or(ps[1], ps[n + 1]))

    p = [None] + _atoms(n, A)
    both = (p[1], p[n + 1])
    d = Infer.ax_id((p[n + 1],), both)
    for i in range(n, 1, -1):
        step = Infer.imp_l(Infer.axiom(p[i]), Infer.or_l(Infer.ax_id((p[1],), both), d))
        d = cut(_inst(_ax(theory, i - 1), A), step)
    d = cut(_inst(_ax(theory, 0), A), Infer.or_l(Infer.ax_id((p[1],), both), d))
    return theory, goal, _gen(_merge(d, Or(p[1], p[n + 1])), goal, A)

def _swap_family(n: int) -> Tuple[Theory, Formula, Derivation]:
    """Axiom ∀x(P1 ∨ (P2 ∨ ... Pn+1)); goal the reversed disjunction,
    rebuilt one disjunct at a time from the sequent ⇒ P1, ..., Pn+1.
    """
    theory = Theory(f'swap-{n}', (ForAll(X, _disjunction(_atoms(n, X))),))
    goal = ForAll(X, _disjunction(_atoms(n, X)[::-1]))

    ps = tuple(_atoms(n, A))
    d = Infer.ax_id((ps[-1],), ps)
    for k in range(n - 1, -1, -1):
        d = Infer.or_l(Infer.ax_id((ps[k],), ps), d)
    d = cut(_inst(_ax(theory, 0), A), d)
    r = ps[0]
    for j in range(1, n + 1):
        last = len(d.succ) - 1
        nxt = Or(ps[j], r)
        d = Infer.or_r(_move_r(d, 1, last), nxt)
        d = Infer.contr_r(Infer.or_r(_move_r(d, 0, last), nxt))
        d = _move_r(d, last - 1, 0)
        r = nxt
    return theory, goal, _gen(d, goal, A)

FAMILIES: Dict[str, Callable[[int], Tuple[Theory, Formula, Derivation]]] = {
    'case-split': _case_split,
    'swap': _swap_family,
}

def gen_family(name: str, n: int) -> Tuple[Theory, Formula, Derivation]:
    """A theory, a geometric goal and a classical proof of it, of size
    growing linearly in `n`.

    Raises:
        BenchConfigError: unknown family or n < 1.
    """
    if name not in FAMILIES:
        raise BenchConfigError(f"Unknown family '{name}', expected one of "
                               f"{', '.join(FAMILIES)}")
    if n < 1:
        raise BenchConfigError(f'Family size must be at least 1, got {n}')
    return FAMILIES[name](n)
