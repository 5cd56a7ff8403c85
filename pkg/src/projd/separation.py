"""Separatedness of the glued chart model via multiplication maps.

Two chart monomials form a weak pair when the multiplication map from the
tensor product of their chart algebras onto the product chart fails to be
surjective; any weak pair obstructs separatedness of the model.  The
degree relations among variable degrees classify the easy cases: if all
relations merely identify two variable degrees the model is separated,
while an irreducible relation with a side of two or more variables forces
a weak pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm
from typing import Optional, Sequence

from projd.charts import chart_algebra
from projd.diophantine import (
    ExponentVector,
    minimal_nonneg_solutions,
    semigroup_member,
    vector_key,
)
from projd.fgab import FgAbGroup, subgroup_member
from projd.ringspec import Monomial, NotRelevant, RingSpec


@dataclass(frozen=True)
class WeakPairReport:
    """Surjectivity audit of the multiplication map onto a product chart."""

    pair: tuple[Monomial, Monomial]
    weak: bool
    witness: Optional[ExponentVector]
    decompositions: tuple[tuple[ExponentVector, tuple[int, ...]], ...]


@dataclass(frozen=True)
class DependencyReport:
    """Degree relations among variables and their reducibility class.

    Relations are the minimal kernel vectors under the sign-split order,
    stated over variable degrees only; general homogeneous elements are
    outside the classifier's scope.
    """

    klass: str
    witness: Optional[ExponentVector]
    relations: tuple[ExponentVector, ...]
    scope: str = "variable-degree relations"


@dataclass(frozen=True)
class SeparationVerdict:
    separated: bool
    weak_pairs: tuple[WeakPairReport, ...]
    dependency_class: str


def mu_surjective(spec: RingSpec, f, g) -> WeakPairReport:
    """Audit the multiplication map of the pair (f, g).

    Every generator and unit of the product chart must decompose over the
    union of the two factor pools; the first element with no decomposition
    is the weakness witness.

    >>> from projd.fgab import FgAbGroup
    >>> G = FgAbGroup(2)
    >>> R = RingSpec(G, ["x", "y", "z"],
    ...              [G.element((1, 0)), G.element((0, 1)), G.element((1, 1))])
    >>> mu_surjective(R, "xz", "yz").weak
    True
    >>> mu_surjective(R, "xz", "yz").witness
    (-1, -1, 1)
    >>> mu_surjective(R, "xy", "xz").weak
    False
    """
    f, g = spec.monomial(f), spec.monomial(g)
    for m in (f, g):
        if not spec.is_relevant(m):
            raise NotRelevant(m.render(spec.variables))
    pool = chart_algebra(spec, f).pool() + chart_algebra(spec, g).pool()
    targets = chart_algebra(spec, f * g).pool()
    witness = None
    decompositions = []
    for target in sorted(set(targets), key=vector_key):
        coeffs = semigroup_member(pool, target)
        if coeffs is None:
            if witness is None:
                witness = target
        else:
            decompositions.append((target, coeffs))
    return WeakPairReport((f, g), witness is not None, witness,
                          tuple(decompositions))


def _minimal_divisibility(monos: Sequence[Monomial]) -> list[Monomial]:
    uniq = []
    for m in monos:
        if m not in uniq:
            uniq.append(m)
    return [m for m in uniq
            if not any(o != m and o.divides(m) for o in uniq)]


def weak_pairs(spec: RingSpec, B=None) -> tuple[WeakPairReport, ...]:
    """All weak pairs among the model's chart monomials.

    B defaults to the spec's chosen ideal when present, otherwise to the
    irrelevant-ideal generators; an explicit B is reduced to its minimal
    monomials first.
    """
    if B is None:
        B = spec.conical_ideal
    if B is None:
        gens = list(spec.irrelevant_generators())
    else:
        gens = _minimal_divisibility([spec.monomial(b) for b in B])
    gens = [g for g in gens if g.support]
    gens.sort(key=lambda m: vector_key(m.exponents))
    out = []
    for f, g in itertools.combinations(gens, 2):
        report = mu_surjective(spec, f, g)
        if report.weak:
            out.append(report)
    return tuple(out)


def is_separated(spec: RingSpec, B=None) -> SeparationVerdict:
    """Separatedness verdict: no weak pair among the chart monomials.

    >>> from projd.fgab import FgAbGroup
    >>> G = FgAbGroup(1, [2])
    >>> R = RingSpec(G, ["x", "y", "z"],
    ...              [G.element((1,), (0,)), G.element((0,), (1,)),
    ...               G.element((1,), (1,))])
    >>> is_separated(R).separated
    True
    """
    pairs = weak_pairs(spec, B)
    return SeparationVerdict(not pairs, pairs, classify_dependencies(spec).klass)


def _graver_relations(spec: RingSpec) -> tuple[ExponentVector, ...]:
    """Minimal nonzero kernel vectors under the sign-split order."""
    group = spec.group
    n = len(spec.variables)
    t = len(group.torsion)
    lifts = [d.lift() for d in spec.degrees]
    rows = []
    for r in range(group.dim):
        row = [lifts[i][r] for i in range(n)]
        row += [-lifts[i][r] for i in range(n)]
        for k in range(t):
            m = group.torsion[k] if r == group.rank + k else 0
            row += [m, -m]
        rows.append(row)
    sols = minimal_nonneg_solutions(rows, 2 * n + 2 * t)
    seen = set()
    for sol in sols:
        a = tuple(sol[i] - sol[n + i] for i in range(n))
        if not any(a):
            continue
        canon = a
        for v in a:
            if v:
                if v < 0:
                    canon = tuple(-b for b in a)
                break
        seen.add(canon)
    return tuple(sorted(seen, key=vector_key))


def classify_dependencies(spec: RingSpec) -> DependencyReport:
    """Classify the variable-degree relations of the grading.

    length-one-only: every relation matches a single variable against a
    single variable.  nontrivial-irreducible: some relation with a side of
    two or more variables stays undecomposable over the other relations
    for every power up to the torsion exponent.  none: no relations at
    all.  Anything else is undetermined and the separation verdict rests
    on the multiplication maps alone.
    """
    relations = _graver_relations(spec)
    if not relations:
        return DependencyReport("none", None, relations)
    def sides(a):
        pos = sum(1 for v in a if v > 0)
        neg = sum(1 for v in a if v < 0)
        return pos, neg
    if all(sides(a) == (1, 1) for a in relations):
        return DependencyReport("length-one-only", None, relations)
    exponent = lcm(*spec.group.torsion) if spec.group.torsion else 1
    # nonneg combinations over {r, -r} are exactly the integer span
    ambient = FgAbGroup(len(spec.variables))
    for a in relations:
        if max(sides(a)) < 2:
            continue
        others = [r for r in relations if r != a]
        span = ambient.subgroup([ambient.element(r) for r in others])
        reducible = any(
            subgroup_member(span, ambient.element(tuple(e * v for v in a)))[0]
            for e in range(1, exponent + 1))
        if not reducible:
            return DependencyReport("nontrivial-irreducible", a, relations)
    return DependencyReport("undetermined", None, relations)


def separated_submodels(spec: RingSpec) -> tuple[tuple[Monomial, ...], ...]:
    """Maximal sets of chart monomials whose induced model is separated.

    These are the maximal independent sets of the weak-pair graph on the
    irrelevant-ideal generators, deterministically ordered.
    """
    gens = [g for g in spec.irrelevant_generators()]
    edges = {frozenset(r.pair) for r in weak_pairs(spec, gens)}
    independent = []
    for size in range(len(gens), -1, -1):
        for combo in itertools.combinations(gens, size):
            chosen = set(combo)
            if any(set(e) <= chosen for e in edges):
                continue
            if any(chosen < set(big) for big in independent):
                continue
            independent.append(combo)
    key = lambda combo: tuple(vector_key(m.exponents) for m in combo)
    return tuple(sorted((tuple(sorted(c, key=lambda m: vector_key(m.exponents)))
                         for c in independent), key=key))
