from __future__ import annotations

import random
from types import SimpleNamespace

import oracles
from projd.diophantine import (
    ConstrainedSemigroup,
    hilbert_basis,
    kernel_lattice,
    minimal_nonneg_solutions,
    semigroup_member,
    shifted_minimal_generators,
)
from projd.fgab import FgAbGroup, row_hnf


def _grading(group, lifts, names=None):
    degrees = tuple(group.from_lift(list(v)) for v in lifts)
    names = names or [f"v{i}" for i in range(len(lifts))]
    return SimpleNamespace(group=group, degrees=degrees, variables=tuple(names))


def _plane_spec():
    G = FgAbGroup(2)
    return _grading(G, [(1, 0), (0, 1), (1, 1)], ["x", "y", "z"])


def _torsion_spec():
    G = FgAbGroup(1, [2])
    return _grading(G, [(1, 0), (0, 1), (1, 1)], ["x", "y", "z"])


def _same_lattice(a, b, width):
    ha, hb = row_hnf(a, width), row_hnf(b, width)
    return ha == hb


def test_kernel_lattice_plane():
    K = kernel_lattice(_plane_spec())
    assert _same_lattice(K, [(1, 1, -1)], 3)


def test_kernel_lattice_torsion():
    K = kernel_lattice(_torsion_spec())
    assert _same_lattice(K, [(-1, 1, 1), (0, 2, 0)], 3)


def test_kernel_lattice_matches_degree_zero_box():
    for spec in (_plane_spec(), _torsion_spec()):
        K = kernel_lattice(spec)
        for cand in oracles.box(3, -3, 3):
            deg = spec.group.zero()
            for c, d in zip(cand, spec.degrees):
                deg = deg + c * d
            assert oracles.in_lattice(K, list(cand)) == deg.is_zero()


def test_hilbert_basis_plane_charts():
    K = kernel_lattice(_plane_spec())
    units, gens = hilbert_basis(ConstrainedSemigroup(3, K, frozenset({0, 1})))
    assert units == () and gens == ((-1, -1, 1),)
    units, gens = hilbert_basis(ConstrainedSemigroup(3, K, frozenset({0, 1, 2})))
    assert gens == () and _same_lattice(units, [(1, 1, -1)], 3)


def test_hilbert_basis_torsion_chart():
    K = kernel_lattice(_torsion_spec())
    units, gens = hilbert_basis(ConstrainedSemigroup(3, K, frozenset({0})))
    assert units == ()
    assert set(gens) == {(-1, 1, 1), (0, 2, 0), (-2, 0, 2)}


def test_hilbert_basis_invariant_under_basis_change():
    K = kernel_lattice(_torsion_spec())
    sg = ConstrainedSemigroup(3, K, frozenset({0}))
    base = hilbert_basis(sg)
    # permute and mix the presented basis; the lattice is unchanged
    K2 = (K[1], tuple(a + b for a, b in zip(K[0], K[1])))
    assert hilbert_basis(ConstrainedSemigroup(3, K2, frozenset({0}))) == base
    assert hilbert_basis(sg) == base  # determinism


def test_semigroup_member_examples():
    assert semigroup_member([(1, 1, -1)], (2, 2, -2)) == (2,)
    assert semigroup_member([(1, 1, -1)], (-1, -1, 1)) is None
    assert semigroup_member([(1, 1, -1), (0, 1, 0)], (1, 3, -1)) == (1, 2)
    assert semigroup_member([(1, 1)], (0, 0)) == (0,)
    assert semigroup_member([], (0, 0)) == ()
    assert semigroup_member([], (1, 0)) is None


def test_semigroup_member_over_constrained_semigroup():
    K = kernel_lattice(_plane_spec())
    sg = ConstrainedSemigroup(3, K, frozenset({0, 1}))
    got = semigroup_member(sg, (-2, -2, 2))
    assert got == (2,)
    assert semigroup_member(sg, (1, 1, -1)) is None


def _random_semigroup(rng, n):
    k = rng.randint(1, n - 1)
    basis = []
    while len(basis) < k:
        v = tuple(rng.randint(-2, 2) for _ in range(n))
        if any(v):
            basis.append(v)
    basis = row_hnf(basis, n)
    if not basis:
        basis = ((1,) * n,)
    free = frozenset(i for i in range(n) if rng.random() < 0.4)
    return ConstrainedSemigroup(n, tuple(basis), free)


def test_hilbert_and_member_agree_with_box_enumeration():
    rng = random.Random(101)
    done = 0
    while done < 12:
        n = rng.randint(2, 4)
        sg = _random_semigroup(rng, n)
        units, gens = hilbert_basis(sg)
        pool = list(gens) + [list(u) for u in units] + [[-a for a in u] for u in units]
        for u in units:
            assert sg.contains(u) and sg.contains([-a for a in u])
        for g in gens:
            assert sg.contains(g)
        for cand in oracles.box(n, -2, 2):
            expected = sg.contains(cand)
            got = semigroup_member(pool, cand)
            assert (got is not None) == expected, (sg, cand, got)
            if got is not None:
                combo = [sum(c * p[i] for c, p in zip(got, pool)) for i in range(n)]
                assert tuple(combo) == tuple(cand)
        done += 1


def test_hilbert_generators_are_minimal_within_box():
    rng = random.Random(103)
    for _ in range(8):
        n = rng.randint(2, 3)
        sg = _random_semigroup(rng, n)
        units, gens = hilbert_basis(sg)
        members = [v for v in oracles.box(n, -3, 3) if sg.contains(v) and any(v)]
        nonunits = [v for v in members if not oracles.in_lattice(units, list(v))]
        for g in gens:
            for u in nonunits:
                w = tuple(a - b for a, b in zip(g, u))
                if any(w) and w in [tuple(m) for m in nonunits]:
                    raise AssertionError(f"generator {g} splits as {u} + {w}")


def test_shifted_minimal_generators_plane():
    spec = _plane_spec()
    d = spec.group.element((1, 1))
    assert shifted_minimal_generators(spec, {0, 1}, d) == ((1, 1, 0),)


def test_shifted_minimal_generators_torsion():
    spec = _torsion_spec()
    d = spec.group.element((0,), (1,))
    got = shifted_minimal_generators(spec, {0}, d)
    assert set(got) == {(0, 1, 0), (-1, 0, 1)}


def test_shifted_minimal_generators_zero_degree():
    spec = _plane_spec()
    assert shifted_minimal_generators(spec, {0, 1}, spec.group.zero()) == ((0, 0, 0),)


def test_shifted_minimal_generators_empty_when_unreachable():
    G = FgAbGroup(1)
    spec = _grading(G, [(2,), (2,)])
    d = G.element((1,))
    assert shifted_minimal_generators(spec, {0}, d) == ()


def test_minimal_nonneg_solutions_small_systems():
    # x - y = 0 over N^2
    sols = minimal_nonneg_solutions([[1, -1]], 2)
    assert sols == [(1, 1)]
    # x + y = 3
    sols = minimal_nonneg_solutions([[1, 1]], 2, rhs=[3])
    assert set(sols) == {(0, 3), (1, 2), (2, 1), (3, 0)}
    # infeasible
    assert minimal_nonneg_solutions([[2]], 1, rhs=[3]) == []
    # no equations: unit vectors
    assert minimal_nonneg_solutions([], 2) == [(0, 1), (1, 0)]


def test_minimal_nonneg_solutions_against_box():
    rng = random.Random(107)
    for _ in range(20):
        m, n = rng.randint(1, 2), rng.randint(2, 4)
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        sols = minimal_nonneg_solutions(A, n)
        solset = set(sols)
        for s in sols:
            assert all(v == 0 for v in oracles.mat_vec(A, list(s)))
            assert all(a >= 0 for a in s) and any(s)
        # every small solution dominates a reported minimal one
        for cand in oracles.box(n, 0, 3):
            if any(cand) and all(v == 0 for v in oracles.mat_vec(A, list(cand))):
                assert any(all(a <= b for a, b in zip(s, cand)) for s in sols)
        # no reported solution strictly dominates another
        for s in sols:
            for s2 in sols:
                if s != s2:
                    assert not all(a <= b for a, b in zip(s, s2))
