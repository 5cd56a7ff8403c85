"""Gradings of polynomial rings and the combinatorics of relevance.

A RingSpec is a polynomial ring with variables graded by a finitely
generated abelian group.  A monomial f is relevant when the subgroup
generated by the degrees of its support has finite index in the whole
group; the square-free relevant monomials minimal under divisibility
generate the irrelevant ideal, and each one carries a chart.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from projd.diophantine import minimal_nonneg_solutions, vector_key
from projd.fgab import (
    FgAbGroup,
    GroupElement,
    Subgroup,
    row_hnf,
    subgroup_index,
    subgroup_member,
)


class NotEffective(ValueError):
    """The variable degrees fail to generate the whole grading group."""


class NotRelevant(ValueError):
    """The monomial's support degrees span a subgroup of infinite index."""


class BadConicalIdeal(ValueError):
    """A chosen ideal generator is not a relevant monomial."""


@dataclass(frozen=True)
class Monomial:
    """Exponent vector of a monomial, tied to a variable list by position."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("monomial exponents must be nonnegative")

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def render(self, names: Sequence[str]) -> str:
        if not any(self.exponents):
            return "1"
        parts = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "".join(parts)


class RingSpec:
    """A polynomial ring with an effective grading by an fg abelian group.

    conical_ideal optionally restricts the model to a chosen set B of
    relevant monomials; every entry is checked for relevance.

    >>> G = FgAbGroup(2)
    >>> R = RingSpec(G, ["x", "y", "z"],
    ...              [G.element((1, 0)), G.element((0, 1)), G.element((1, 1))])
    >>> R.is_relevant(R.monomial("x*z"))
    True
    >>> R.is_relevant(R.monomial("x"))
    False
    >>> [m.render(R.variables) for m in R.irrelevant_generators()]
    ['yz', 'xz', 'xy']
    """

    def __init__(self, group: FgAbGroup, variables: Sequence[str],
                 degrees: Sequence[GroupElement],
                 conical_ideal: Optional[Sequence[Monomial]] = None,
                 check_effective: bool = True):
        if len(variables) != len(degrees):
            raise ValueError("one degree per variable required")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for d in degrees:
            if d.group != group:
                raise ValueError("degree from the wrong group")
        self.group = group
        self.variables = tuple(variables)
        self.degrees = tuple(degrees)
        if check_effective:
            validate_effective(self)
        if conical_ideal is not None:
            conical_ideal = tuple(self.monomial(b) for b in conical_ideal)
            for b in conical_ideal:
                if not self.is_relevant(b):
                    raise BadConicalIdeal(
                        f"{b.render(self.variables)} is not relevant")
        self.conical_ideal = conical_ideal

    def __eq__(self, other):
        return (isinstance(other, RingSpec)
                and self.group == other.group
                and self.variables == other.variables
                and self.degrees == other.degrees
                and self.conical_ideal == other.conical_ideal)

    def __hash__(self):
        return hash((self.group, self.variables, self.degrees, self.conical_ideal))

    def monomial(self, source) -> Monomial:
        """Build a monomial from exponents or from text like "x*z^2"."""
        if isinstance(source, Monomial):
            return source
        if isinstance(source, str):
            return parse_monomial(source, self.variables)
        exps = tuple(int(e) for e in source)
        if len(exps) != len(self.variables):
            raise ValueError("wrong number of exponents")
        return Monomial(exps)

    def degree_of(self, mono: Monomial) -> GroupElement:
        deg = self.group.zero()
        for e, d in zip(mono.exponents, self.degrees):
            deg = deg + e * d
        return deg

    def support_group(self, mono: Monomial) -> Subgroup:
        """Subgroup of degrees generated by the support of a monomial."""
        gens = [self.degrees[i] for i in sorted(mono.support)]
        return self.group.subgroup(gens)

    def is_relevant(self, mono: Monomial) -> bool:
        return subgroup_index(self.group, self.support_group(mono)) != math.inf

    def irrelevant_generators(self) -> tuple[Monomial, ...]:
        """Minimal square-free relevant monomials, graded-lex ordered.

        A rank-zero grading makes every monomial relevant, so the single
        generator is 1 and the model collapses to one affine chart.
        """
        n = len(self.variables)
        if self.group.rank == 0:
            return (Monomial((0,) * n),)
        minimal_supports: list[frozenset[int]] = []
        for size in range(1, n + 1):
            for combo in itertools.combinations(range(n), size):
                s = frozenset(combo)
                if any(t <= s for t in minimal_supports):
                    continue
                mono = Monomial(tuple(1 if i in s else 0 for i in range(n)))
                if self.is_relevant(mono):
                    minimal_supports.append(s)
        monos = [Monomial(tuple(1 if i in s else 0 for i in range(n)))
                 for s in minimal_supports]
        return tuple(sorted(monos, key=lambda m: vector_key(m.exponents)))


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    """Parse "x*z^2" or "xz" style monomial text against a variable list."""
    text = text.strip()
    exps = [0] * len(names)
    if text in ("1", ""):
        return Monomial(tuple(exps))
    index = {name: i for i, name in enumerate(names)}
    for factor in text.replace(" ", "").split("*"):
        if not factor:
            raise ValueError(f"empty factor in monomial {text!r}")
        if "^" in factor:
            base, _, power = factor.partition("^")
            try:
                e = int(power)
            except ValueError:
                raise ValueError(f"bad exponent in monomial factor {factor!r}")
        else:
            base, e = factor, 1
        if e < 0:
            raise ValueError(f"negative exponent in monomial factor {factor!r}")
        if base in index:
            exps[index[base]] += e
            continue
        # juxtaposed single-letter names like "xz" are accepted
        if base and all(ch in index for ch in base):
            for ch in base[:-1]:
                exps[index[ch]] += 1
            exps[index[base[-1]]] += e
            continue
        raise ValueError(f"unknown variable in monomial factor {factor!r}")
    return Monomial(tuple(exps))


def validate_effective(spec: RingSpec) -> None:
    """Check that the variable degrees generate the whole grading group.

    Raises NotEffective naming a group generator that is not reached.
    """
    sub = spec.group.subgroup(list(spec.degrees))
    if subgroup_index(spec.group, sub) == 1:
        return
    for g in spec.group.standard_generators():
        ok, _ = subgroup_member(sub, g)
        if not ok:
            raise NotEffective(f"grading misses the group element {g}")
    raise NotEffective("variable degrees do not generate the grading group")


def relevance_via_components(spec: RingSpec, mono: Monomial) -> bool:
    """Relevance decided through the free rank of the support degrees.

    Torsion never obstructs finite index, so f is relevant exactly when
    the free parts of its support degrees have full rank.  Kept separate
    from the index criterion so the two can be cross checked.
    """
    rows = [spec.degrees[i].lift() for i in sorted(mono.support)]
    hnf = row_hnf(rows, spec.group.dim)
    free_rank = sum(1 for row in hnf if any(row[: spec.group.rank]))
    return free_rank == spec.group.rank


def veronese_scaled_spec(spec: RingSpec, n: int) -> RingSpec:
    """Same variables with every degree multiplied by n.

    Scaling can break effectiveness (the scaled degrees may span a proper
    subgroup), so the result is built unchecked; relevance of monomials
    is preserved either way.
    """
    if n < 1:
        raise ValueError("scaling factor must be positive")
    degrees = [n * d for d in spec.degrees]
    return RingSpec(spec.group, spec.variables, degrees,
                    conical_ideal=spec.conical_ideal, check_effective=False)


def degree_zero_companion(spec: RingSpec, h: Monomial,
                          f: Monomial) -> Optional[tuple[int, Monomial, int]]:
    """Least (N, g, k) with deg(h^N * g) = deg(f^k), or None if f irrelevant.

    N is minimized first, then k, then g in graded-lex order.  Existence
    for relevant f is guaranteed within N <= [D : D^f]: that multiple of
    deg(h) falls into the support group of f.
    """
    if not spec.is_relevant(f):
        return None
    d_h = spec.degree_of(h)
    d_f = spec.degree_of(f)
    n = len(spec.variables)
    t = len(spec.group.torsion)
    lifts = [d.lift() for d in spec.degrees]
    # unknowns: g (n columns), k, then +/- pairs absorbing torsion congruences
    rows = []
    for r in range(spec.group.dim):
        row = [lifts[i][r] for i in range(n)]
        row.append(-d_f.lift()[r])
        for j in range(t):
            m = spec.group.torsion[j] if r == spec.group.rank + j else 0
            row += [m, -m]
        rows.append(row)
    bound = subgroup_index(spec.group, spec.support_group(f))
    for N in range(1, bound + 1):
        target = (-N) * d_h
        if target.is_zero():
            return N, Monomial((0,) * n), 0
        sols = minimal_nonneg_solutions(rows, n + 1 + 2 * t,
                                        rhs=list(target.lift()))
        if not sols:
            continue
        best = None
        for sol in sols:
            g, k = sol[:n], sol[n]
            key = (k, vector_key(g))
            if best is None or key < best[0]:
                best = (key, g, k)
        return N, Monomial(best[1]), best[2]
    return None
