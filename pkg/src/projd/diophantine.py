"""Nonnegative integer solving over graded exponent lattices.

The central object is a constrained lattice semigroup: all vectors of a
sublattice L of Z^n whose coordinates outside a designated free set F are
nonnegative.  These model Laurent monomials of degree zero on a chart, with
negative exponents permitted only at the inverted variables.

Minimal solutions of homogeneous systems A x = 0, x >= 0 are computed with
the Contejean-Devie completion: grow candidate vectors one unit step at a
time, extending t by e_j only while <A t, A e_j> < 0, and prune anything
that dominates a known minimal solution.  The procedure is exact and
complete; inhomogeneous problems are homogenized with an extra counter
coordinate, and congruence conditions (torsion gradings) enter through
auxiliary columns scaled by the torsion orders.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from projd.fgab import hnf_reduce, kernel_basis, lattice_coords, row_hnf

ExponentVector = tuple[int, ...]


def vector_key(vec: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Graded-lex sort key: L1 norm first, then entries."""
    return (sum(abs(a) for a in vec), tuple(vec))


@dataclass(frozen=True)
class ConstrainedSemigroup:
    """Vectors of a lattice with signs constrained off the free coordinates.

    kernel_basis spans the lattice L inside Z^nvars; coordinates listed in
    free_coords may go negative, all others must stay >= 0.
    """

    nvars: int
    kernel_basis: tuple[ExponentVector, ...]
    free_coords: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        for v in self.kernel_basis:
            if len(v) != self.nvars:
                raise ValueError("kernel basis vector of wrong length")
        if any(i < 0 or i >= self.nvars for i in self.free_coords):
            raise ValueError("free coordinate out of range")

    def constrained_coords(self) -> list[int]:
        return [i for i in range(self.nvars) if i not in self.free_coords]

    def contains(self, vec: Sequence[int]) -> bool:
        """Exact membership: lattice equations plus sign constraints."""
        if any(vec[i] < 0 for i in self.constrained_coords()):
            return False
        return lattice_coords(self.kernel_basis, vec) is not None


# ---------------------------------------------------------------------------
# Contejean-Devie completion

def minimal_nonneg_solutions(rows: Sequence[Sequence[int]], ncols: int,
                             rhs: Optional[Sequence[int]] = None) -> list[ExponentVector]:
    """Minimal solutions of rows @ x = rhs with x >= 0 integral.

    With rhs omitted (or zero) this is the Hilbert basis of the solution
    monoid, excluding zero.  With rhs given, the system is homogenized with
    a counter coordinate forced to 1, and the returned vectors are exactly
    the minimal inhomogeneous solutions.
    """
    homogeneous = rhs is None or not any(rhs)
    if rhs is None:
        rhs = [0] * len(rows)
    cols = ncols if homogeneous else ncols + 1
    columns = []
    for j in range(ncols):
        columns.append(tuple(row[j] for row in rows))
    if not homogeneous:
        columns.append(tuple(-b for b in rhs))

    minimals: list[tuple[int, ...]] = []
    frontier = []
    seen = set()
    for j in range(cols):
        t = tuple(1 if i == j else 0 for i in range(cols))
        frontier.append((t, columns[j]))
        seen.add(t)
    while frontier:
        nxt = []
        for t, val in frontier:
            if not any(val):
                # counter 0 solutions are recorded too: pruning against them
                # is what bounds the search, they are filtered on return
                if not any(all(a <= b for a, b in zip(m, t)) for m in minimals):
                    minimals.append(t)
                continue
            for j in range(cols):
                if not homogeneous and j == ncols and t[ncols] >= 1:
                    continue  # never raise the counter past 1
                if sum(v * c for v, c in zip(val, columns[j])) >= 0:
                    continue
                t2 = list(t)
                t2[j] += 1
                t2 = tuple(t2)
                if t2 in seen:
                    continue
                if any(all(a <= b for a, b in zip(m, t2)) for m in minimals):
                    continue
                seen.add(t2)
                nxt.append((t2, tuple(v + c for v, c in zip(val, columns[j]))))
        frontier = nxt
    if homogeneous:
        return sorted(minimals, key=vector_key)
    out = [m[:ncols] for m in minimals if m[ncols] == 1]
    return sorted(out, key=vector_key)


# ---------------------------------------------------------------------------
# Hilbert bases of constrained semigroups

def _unit_lattice(sg: ConstrainedSemigroup) -> tuple[ExponentVector, ...]:
    """HNF basis of the invertible part: lattice vectors supported on F."""
    K = sg.kernel_basis
    if not K:
        return ()
    conn = sg.constrained_coords()
    rows = [[K[k][i] for k in range(len(K))] for i in conn]
    coeffs = kernel_basis(rows, len(K))
    vecs = [[sum(c[k] * K[k][i] for k in range(len(K))) for i in range(sg.nvars)]
            for c in coeffs]
    return row_hnf(vecs, sg.nvars)


def _coset_minimal(vec: Sequence[int], units: Sequence[Sequence[int]]) -> ExponentVector:
    """Graded-lex least representative of vec modulo the unit lattice.

    The L1 norm is proper on every coset, so the minimum exists; candidates
    are enumerated through the triangular structure of the HNF basis.
    """
    if not units:
        return tuple(vec)
    start = hnf_reduce(units, vec)
    best = [vector_key(start)]
    pivots = [next(j for j, a in enumerate(row) if a) for row in units]
    bound = best[0][0]

    def descend(level: int, current: list[int], partial: int) -> None:
        if partial > best[0][0]:
            return
        if level == len(units):
            key = vector_key(current)
            if key < best[0]:
                best[0] = key
            return
        row = units[level]
        p = pivots[level]
        step = row[p]
        # |current[p] + k*step| <= bound caps k on both sides
        lo = -(bound + current[p]) // step
        hi = (bound - current[p]) // step
        for k in range(lo, hi + 1):
            cand = [a + k * b for a, b in zip(current, row)]
            descend(level + 1, cand, partial + abs(cand[p]))

    descend(0, list(start), 0)
    return best[0][1]


def _member_with_units(gens, units, constrained, target):
    """Decompose target as nonneg generators plus a unit-lattice vector.

    Requires every generator nonnegative with positive mass on the
    constrained coordinates and units vanishing there, so coefficients are
    bounded by exact matching on those coordinates.  Returns
    (gen_coeffs, unit_coords) or None.
    """
    gens = [tuple(g) for g in gens]
    conn = list(constrained)
    target = tuple(target)
    for g in gens:
        assert any(g[i] > 0 for i in conn), "generator with no constrained mass"
    if any(target[i] < 0 for i in conn):
        return None

    def close_with_units(current):
        z = [t - c for t, c in zip(target, current)]
        if units:
            return lattice_coords(units, z)
        return () if not any(z) else None

    def descend(idx, current):
        if idx == len(gens):
            if any(current[i] != target[i] for i in conn):
                return None
            coords = close_with_units(current)
            return None if coords is None else ([], coords)
        g = gens[idx]
        cap = min((target[i] - current[i]) // g[i] for i in conn if g[i] > 0)
        for c in range(cap + 1):
            nxt = tuple(a + c * b for a, b in zip(current, g))
            found = descend(idx + 1, nxt)
            if found is not None:
                coeffs, coords = found
                return [c] + coeffs, coords
        return None

    return descend(0, (0,) * len(target))


def hilbert_basis(sg: ConstrainedSemigroup):
    """Unit lattice basis and minimal generators of the pointed quotient.

    Returns (units_basis, generators): the semigroup is generated by the
    generators together with both signs of the units basis.  Generator
    representatives are the graded-lex least members of their unit cosets,
    listed in graded-lex order; the whole answer depends only on the
    lattice and the free coordinates, not on the presented basis.

    >>> sg = ConstrainedSemigroup(3, ((1, 1, -1),), frozenset({0, 1}))
    >>> hilbert_basis(sg)
    ((), ((-1, -1, 1),))
    >>> hilbert_basis(ConstrainedSemigroup(3, ((1, 1, -1),), frozenset({0, 1, 2})))
    (((1, 1, -1),), ())
    """
    K = sg.kernel_basis
    units = _unit_lattice(sg)
    if not K:
        return (), ()
    k = len(K)
    conn = sg.constrained_coords()
    # unknowns: c+ (k), c- (k), slack (len(conn)); rows force K(c+ - c-) = slack
    rows = []
    for idx, i in enumerate(conn):
        row = [K[j][i] for j in range(k)] + [-K[j][i] for j in range(k)]
        row += [-1 if s == idx else 0 for s in range(len(conn))]
        rows.append(row)
    raw = minimal_nonneg_solutions(rows, 2 * k + len(conn))
    candidates = set()
    for sol in raw:
        coeff = [sol[j] - sol[k + j] for j in range(k)]
        vec = tuple(sum(coeff[j] * K[j][i] for j in range(k)) for i in range(sg.nvars))
        if any(vec):
            rep = _coset_minimal(vec, units)
            if any(rep):
                candidates.add(rep)
    candidates = sorted(candidates, key=vector_key)
    gens = []
    for idx, cand in enumerate(candidates):
        others = [c for j, c in enumerate(candidates) if j != idx]
        if _member_with_units(others, units, conn, cand) is None:
            gens.append(cand)
    return units, tuple(gens)


def semigroup_member(gens, target: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Nonnegative integer decomposition of target over gens, or None.

    gens may be a ConstrainedSemigroup (decomposition runs over its Hilbert
    generators followed by +units and -units) or an explicit vector list;
    coefficients are returned in the order of the list used.  The decision
    is exact, never heuristic.

    >>> semigroup_member([(1, 1, -1)], (2, 2, -2))
    (2,)
    >>> semigroup_member([(1, 1, -1)], (-1, -1, 1)) is None
    True
    """
    target = tuple(target)
    if isinstance(gens, ConstrainedSemigroup):
        sg = gens
        units, pointed = hilbert_basis(sg)
        width = len(pointed) + 2 * len(units)
        if not any(target):
            return (0,) * width
        if not sg.contains(target):
            return None
        found = _member_with_units(pointed, units, sg.constrained_coords(), target)
        assert found is not None, "Hilbert generators fail to reach a member"
        coeffs, coords = found
        return (tuple(coeffs) + tuple(max(z, 0) for z in coords)
                + tuple(max(-z, 0) for z in coords))
    gens = [tuple(g) for g in gens]
    if not any(target):
        return (0,) * len(gens)
    if not gens:
        return None
    n = len(target)
    rows = [[g[i] for g in gens] for i in range(n)]
    sols = minimal_nonneg_solutions(rows, len(gens), rhs=list(target))
    if not sols:
        return None
    return sols[0]


def shifted_minimal_generators(spec, free_coords, d) -> tuple[ExponentVector, ...]:
    """Minimal degree-d Laurent monomials modulo the degree-zero semigroup.

    spec carries the grading (a RingSpec); free_coords tells which exponents
    may be negative.  The result generates {a : deg(a) = d, a >= 0 off
    free_coords} as a module over the degree-zero semigroup, one canonical
    representative per unit coset, graded-lex ordered.  Empty iff the
    solution set is empty; for d = 0 the answer is the zero vector alone.
    """
    free_coords = frozenset(free_coords)
    n = len(spec.variables)
    if d.is_zero():
        return ((0,) * n,)
    rows, rhs, width = _degree_rows(spec, free_coords, d)
    raw = minimal_nonneg_solutions(rows, width, rhs=rhs)
    sg = degree_zero_semigroup(spec, free_coords)
    units = _unit_lattice(sg)
    reps = sorted({_coset_minimal(_assemble(spec, free_coords, sol), units) for sol in raw},
                  key=vector_key)
    out = []
    for cand in reps:
        reducible = False
        for other in reps:
            if other == cand:
                continue
            diff = tuple(a - b for a, b in zip(cand, other))
            if any(diff) and sg.contains(diff):
                reducible = True
                break
        if not reducible:
            out.append(cand)
    return tuple(out)


def degree_zero_semigroup(spec, free_coords) -> ConstrainedSemigroup:
    """The degree-zero constrained semigroup of a grading."""
    return ConstrainedSemigroup(len(spec.variables), kernel_lattice(spec),
                                frozenset(free_coords))


def kernel_lattice(spec) -> tuple[ExponentVector, ...]:
    """HNF basis of {a in Z^n : sum a_i deg(x_i) = 0}.

    Torsion congruences are absorbed by auxiliary columns scaled by the
    torsion orders; the auxiliary block is projected away afterwards.
    """
    group = spec.group
    n = len(spec.variables)
    t = len(group.torsion)
    rows = []
    for r in range(group.dim):
        row = [spec.degrees[j].lift()[r] for j in range(n)]
        row += [group.torsion[k] if r == group.rank + k else 0 for k in range(t)]
        rows.append(row)
    K = kernel_basis(rows, n + t)
    return row_hnf([row[:n] for row in K], n)


def _degree_rows(spec, free_coords, d):
    """Equation system for {a : deg(a) = d} in split nonnegative unknowns.

    Unknown layout: one column per constrained coordinate, a +/- pair per
    free coordinate, then a +/- pair per torsion congruence.
    """
    group = spec.group
    n = len(spec.variables)
    t = len(group.torsion)
    conn = [i for i in range(n) if i not in free_coords]
    free = [i for i in range(n) if i in free_coords]
    lifts = [spec.degrees[j].lift() for j in range(n)]
    width = len(conn) + 2 * len(free) + 2 * t
    rows = []
    for r in range(group.dim):
        row = [lifts[i][r] for i in conn]
        for i in free:
            row += [lifts[i][r], -lifts[i][r]]
        for k in range(t):
            m = group.torsion[k] if r == group.rank + k else 0
            row += [m, -m]
        rows.append(row)
    return rows, list(d.lift()), width


def _assemble(spec, free_coords, sol) -> ExponentVector:
    """Rebuild an exponent vector from the split unknown layout."""
    n = len(spec.variables)
    conn = [i for i in range(n) if i not in free_coords]
    free = [i for i in range(n) if i in free_coords]
    vec = [0] * n
    for idx, i in enumerate(conn):
        vec[i] = sol[idx]
    base = len(conn)
    for idx, i in enumerate(free):
        vec[i] = sol[base + 2 * idx] - sol[base + 2 * idx + 1]
    return tuple(vec)
