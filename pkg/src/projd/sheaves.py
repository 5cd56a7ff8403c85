"""Twists of the structure sheaf at the exponent-lattice level.

The twist by a degree d is controlled per chart by the set of exponent
vectors of degree d that are nonnegative off the chart's support.  The
twist is trivial on a chart exactly when a vector of degree d supported
inside the chart exists (a unit); it is free globally exactly when d lies
in every chart's support group.  Both tests are kept as independent code
paths and cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Optional

from projd.diophantine import (
    ConstrainedSemigroup,
    ExponentVector,
    _coset_minimal,
    _unit_lattice,
    degree_zero_semigroup,
    hilbert_basis,
    kernel_lattice,
    shifted_minimal_generators,
    vector_key,
)
from projd.fgab import GroupElement, subgroup_intersection, subgroup_member
from projd.ringspec import Monomial, NotRelevant, RingSpec


@dataclass(frozen=True)
class SheafReport:
    """Freeness and invertibility audit of a twist, chart by chart."""

    d: GroupElement
    free: bool
    invertible: bool
    chart_units: tuple[tuple[str, Optional[ExponentVector]], ...]
    obstruction: Optional[str]


@dataclass(frozen=True)
class TwistProductReport:
    """Surjectivity audit of the multiplication of two twists on a chart."""

    f: Monomial
    d: GroupElement
    e: GroupElement
    surjective: bool
    decompositions: tuple[tuple[ExponentVector, ExponentVector, ExponentVector,
                                ExponentVector], ...]


@dataclass(frozen=True)
class GlobalSectionsReport:
    monomials: tuple[Monomial, ...]
    complete: bool


def unit_of_degree(spec: RingSpec, f, d: GroupElement) -> Optional[ExponentVector]:
    """Graded-lex least vector of degree d supported inside supp(f).

    Such a vector is a homogeneous unit of the localization at f; it
    exists iff d lies in the support group of f.

    >>> from projd.fgab import FgAbGroup
    >>> G = FgAbGroup(1, [2])
    >>> R = RingSpec(G, ["x", "y", "z"],
    ...              [G.element((1,), (0,)), G.element((0,), (1,)),
    ...               G.element((1,), (1,))])
    >>> unit_of_degree(R, "x", G.element((2,), (0,)))
    (2, 0, 0)
    >>> unit_of_degree(R, "x", G.element((1,), (1,))) is None
    True
    """
    f = spec.monomial(f)
    if not spec.is_relevant(f):
        raise NotRelevant(f.render(spec.variables))
    ok, coeffs = subgroup_member(spec.support_group(f), d)
    if not ok:
        return None
    particular = [0] * len(spec.variables)
    for idx, c in zip(sorted(f.support), coeffs):
        particular[idx] = c
    units = _unit_lattice(degree_zero_semigroup(spec, f.support))
    return _coset_minimal(particular, units)


def is_free(spec: RingSpec, d: GroupElement) -> bool:
    """Whether d lies in the intersection of all chart support groups."""
    gens = spec.irrelevant_generators()
    groups = [spec.support_group(g) for g in gens]
    inter = reduce(subgroup_intersection, groups)
    ok, _ = subgroup_member(inter, d)
    return ok


def is_invertible(spec: RingSpec, d: GroupElement) -> SheafReport:
    """Per-chart unit scan for the twist by d, with the freeness flag.

    Kept independent of is_free on purpose: the two must agree, and any
    divergence signals a bug rather than a mathematical possibility.
    """
    chart_units = []
    obstruction = None
    for g in spec.irrelevant_generators():
        name = g.render(spec.variables)
        unit = unit_of_degree(spec, g, d)
        chart_units.append((name, unit))
        if unit is None and obstruction is None:
            obstruction = name
    return SheafReport(d, is_free(spec, d), obstruction is None,
                       tuple(chart_units), obstruction)


def twist_module_generators(spec: RingSpec, f, d: GroupElement) -> tuple[ExponentVector, ...]:
    """Minimal generators of the degree-d chart module over the chart algebra."""
    f = spec.monomial(f)
    if not spec.is_relevant(f):
        raise NotRelevant(f.render(spec.variables))
    return shifted_minimal_generators(spec, f.support, d)


def twist_product_surjective(spec: RingSpec, f, d: GroupElement,
                             e: GroupElement) -> TwistProductReport:
    """Whether products of d- and e-sections span the (d+e)-sections on f.

    Each generator of the (d+e)-module must split as a d-generator plus an
    e-generator plus a degree-zero chart element; the witness quadruples
    are (target, d-part, e-part, chart remainder).
    """
    f = spec.monomial(f)
    if not spec.is_relevant(f):
        raise NotRelevant(f.render(spec.variables))
    gens_d = twist_module_generators(spec, f, d)
    gens_e = twist_module_generators(spec, f, e)
    targets = twist_module_generators(spec, f, d + e)
    sg = degree_zero_semigroup(spec, f.support)
    decompositions = []
    surjective = True
    for b in targets:
        found = None
        for gd in gens_d:
            for ge in gens_e:
                rest = tuple(t - p - q for t, p, q in zip(b, gd, ge))
                if sg.contains(rest):
                    found = (b, gd, ge, rest)
                    break
            if found:
                break
        if found is None:
            surjective = False
        else:
            decompositions.append(found)
    return TwistProductReport(f, d, e, surjective, tuple(decompositions))


def _bounded_exponents(n: int, bound: int):
    if n == 0:
        yield ()
        return
    for head in range(bound + 1):
        for tail in _bounded_exponents(n - 1, bound - head):
            yield (head,) + tail


def global_sections(spec: RingSpec, d: GroupElement,
                    total_degree_bound: int) -> GlobalSectionsReport:
    """Monomials of degree d up to a total-degree bound.

    The listing is complete (no monomial of degree d was cut off by the
    bound) iff the grading is pointed: no nonzero monomial has degree
    zero, so each degree class is finite.

    >>> from projd.fgab import FgAbGroup
    >>> G = FgAbGroup(2)
    >>> R = RingSpec(G, ["x", "y", "z"],
    ...              [G.element((1, 0)), G.element((0, 1)), G.element((1, 1))])
    >>> rep = global_sections(R, G.element((1, 1)), 3)
    >>> [m.render(R.variables) for m in rep.monomials], rep.complete
    (['z', 'xy'], True)
    """
    if total_degree_bound < 0:
        raise ValueError("bound must be nonnegative")
    n = len(spec.variables)
    found = []
    for exps in _bounded_exponents(n, total_degree_bound):
        if spec.degree_of(Monomial(exps)) == d:
            found.append(Monomial(exps))
    found.sort(key=lambda m: vector_key(m.exponents))
    sg = ConstrainedSemigroup(n, kernel_lattice(spec), frozenset())
    units, pointed_gens = hilbert_basis(sg)
    return GlobalSectionsReport(tuple(found), not (units or pointed_gens))
