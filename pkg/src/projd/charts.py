"""Degree-zero chart algebras and the prime correspondence.

Each relevant monomial f carries an affine chart whose coordinate ring is
the degree-zero part of the localization at f.  That ring is a semigroup
algebra: exponent vectors of degree zero, negative only at variables of f.
Monomial primes of the ambient ring transfer to chart ideals through the
correspondence p -> pS_f intersected with the degree-zero part, and charts
are glued along the charts of products.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Union

from projd.diophantine import (
    ConstrainedSemigroup,
    ExponentVector,
    degree_zero_semigroup,
    hilbert_basis,
    semigroup_member,
    vector_key,
)
from projd.ringspec import Monomial, NotRelevant, RingSpec


class PrimeMeetsF(ValueError):
    """The prime contains a variable of the localizing monomial."""


@dataclass(frozen=True)
class MonomialPrime:
    """Prime ideal generated by a set of variables; () is the zero ideal."""

    variables: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(sorted(set(self.variables))))

    def render(self, names: Sequence[str]) -> str:
        if not self.variables:
            return "(0)"
        return "(" + ", ".join(names[i] for i in self.variables) + ")"


@dataclass(frozen=True)
class ChartAlgebra:
    """Generators and units of the degree-zero algebra of a chart.

    The semigroup of all degree-zero exponent vectors that are nonnegative
    off supp(f) is generated by `generators` together with both signs of
    `units`; the generators are minimal and canonically chosen.
    """

    f: Monomial
    units: tuple[ExponentVector, ...]
    generators: tuple[ExponentVector, ...]
    free_coords: frozenset[int]

    def pool(self) -> list[ExponentVector]:
        """Generators plus both signs of the unit basis."""
        return (list(self.generators)
                + [tuple(u) for u in self.units]
                + [tuple(-a for a in u) for u in self.units])


def _prime(spec: RingSpec, p) -> MonomialPrime:
    if isinstance(p, MonomialPrime):
        return p
    idx = []
    for item in p:
        if isinstance(item, str):
            idx.append(spec.variables.index(item))
        else:
            idx.append(int(item))
    return MonomialPrime(tuple(idx))


def _chart_data(spec: RingSpec, f: Monomial):
    sg = degree_zero_semigroup(spec, f.support)
    return hilbert_basis(sg)


def chart_algebra(spec: RingSpec, f) -> ChartAlgebra:
    """Chart of a relevant monomial: units and minimal generators.

    >>> from projd.fgab import FgAbGroup
    >>> G = FgAbGroup(2)
    >>> R = RingSpec(G, ["x", "y", "z"],
    ...              [G.element((1, 0)), G.element((0, 1)), G.element((1, 1))])
    >>> chart_algebra(R, "xy").generators
    ((-1, -1, 1),)
    >>> chart_algebra(R, "x*y*z^2").units
    ((1, 1, -1),)
    """
    f = spec.monomial(f)
    if not spec.is_relevant(f):
        raise NotRelevant(f.render(spec.variables))
    units, gens = _chart_data(spec, f)
    return ChartAlgebra(f, units, gens, f.support)


@dataclass(frozen=True)
class ChartIntersectionReport:
    """Outcome of rebuilding the product chart from one factor's chart."""

    f: Monomial
    g: Monomial
    chart: ChartAlgebra
    inverted: tuple[ExponentVector, ...]
    decompositions: tuple[tuple[ExponentVector, tuple[int, ...]], ...]
    ok: bool


def chart_intersection_check(spec: RingSpec, f, g) -> ChartIntersectionReport:
    """Verify that the product chart is the f-chart with some units added.

    The generators of the f-chart supported inside supp(fg) become units of
    the fg-chart; every generator and unit of the fg-chart must decompose
    over the f-chart pool extended by the inverses of those elements.  The
    returned decompositions are coefficient vectors over that pool.
    """
    f, g = spec.monomial(f), spec.monomial(g)
    for m in (f, g):
        if not spec.is_relevant(m):
            raise NotRelevant(m.render(spec.variables))
    fg = f * g
    chart_f = chart_algebra(spec, f)
    chart_fg = chart_algebra(spec, fg)
    inverted = tuple(v for v in chart_f.generators
                     if all(i in fg.support for i, a in enumerate(v) if a))
    pool = chart_f.pool() + [tuple(-a for a in v) for v in inverted]
    targets = chart_fg.pool()
    decompositions = []
    ok = True
    for target in targets:
        coeffs = semigroup_member(pool, target)
        if coeffs is None:
            ok = False
            continue
        decompositions.append((target, coeffs))
    # the reverse inclusion holds coordinatewise: anything allowed negative
    # exponents only on supp(f) is allowed them on supp(fg) as well
    sg_fg = degree_zero_semigroup(spec, fg.support)
    for v in chart_f.pool():
        if not sg_fg.contains(v):
            ok = False
    return ChartIntersectionReport(f, g, chart_fg, inverted,
                                   tuple(decompositions), ok)


def psi_image(spec: RingSpec, f, p) -> tuple[ExponentVector, ...]:
    """Chart generators of the image of a monomial prime on the f-chart.

    Relevance of f is not required; the correspondence is still defined and
    its failure to stay injective for irrelevant f is observable.  Raises
    PrimeMeetsF when the prime contains a variable of f.
    """
    f = spec.monomial(f)
    p = _prime(spec, p)
    if set(p.variables) & f.support:
        raise PrimeMeetsF(p.render(spec.variables))
    units, gens = _chart_data(spec, f)
    pool = (list(gens) + [tuple(u) for u in units]
            + [tuple(-a for a in u) for u in units])
    hit = {v for v in pool
           if any(v[i] > 0 for i in p.variables)}
    return tuple(sorted(hit, key=vector_key))


def psi_collision_scan(spec: RingSpec, f) -> Union[str, tuple[MonomialPrime, MonomialPrime]]:
    """First pair of primes with equal images on the f-chart, else "injective".

    Scans every monomial prime avoiding supp(f) that does not contain the
    whole irrelevant ideal, in size-then-index order.
    """
    f = spec.monomial(f)
    n = len(spec.variables)
    gens = spec.irrelevant_generators()
    outside = [i for i in range(n) if i not in f.support]
    primes = []
    for size in range(len(outside) + 1):
        for combo in combinations(outside, size):
            s = set(combo)
            if gens and all(g.support & s for g in gens):
                continue  # contains the irrelevant ideal
            primes.append(MonomialPrime(combo))
    images = [psi_image(spec, f, p) for p in primes]
    for i in range(len(primes)):
        for j in range(i + 1, len(primes)):
            if images[i] == images[j]:
                return (primes[i], primes[j])
    return "injective"


def cover_decomposition(spec: RingSpec, h) -> tuple[Monomial, ...]:
    """Irrelevant-ideal generators whose charts assemble the open set of h.

    Returned are the generators whose support contains supp(h); their
    chart union equals the open set of h exactly when supp(h) is an
    independent set of the degree configuration (some generator's support
    contains it), and is contained in it always.
    """
    h = spec.monomial(h)
    return tuple(g for g in spec.irrelevant_generators()
                 if h.support <= g.support)


def v_plus(spec: RingSpec, ideal: Iterable) -> tuple[MonomialPrime, ...]:
    """Minimal monomial primes of the vanishing set, within the model.

    Primes containing every irrelevant-ideal generator are discarded; the
    empty ideal yields the zero prime, the marker for the whole space.
    """
    monos = [spec.monomial(m) for m in ideal]
    if not monos:
        return (MonomialPrime(()),)
    if any(not m.support for m in monos):
        return ()
    n = len(spec.variables)
    supports = [m.support for m in monos]
    gens = spec.irrelevant_generators()
    found: list[MonomialPrime] = []
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            s = set(combo)
            if any(set(q.variables) <= s for q in found):
                continue
            if all(s & supp for supp in supports):
                found.append(MonomialPrime(combo))
    kept = [p for p in found
            if not (gens and all(g.support & set(p.variables) for g in gens))]
    return tuple(kept)
