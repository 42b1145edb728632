import random

import pytest

from gsinterp.bipoly import BiPoly
from gsinterp.field import PrimeField
from gsinterp.classic import hasse_combine, hasse_shift_down, interpolate
from gsinterp.oracle import minimal_solution
from gsinterp.problem import InterpolationInstance, random_instance
from util import proportional

F3 = PrimeField(3)
F5 = PrimeField(5)
F101 = PrimeField(101)


def collinear_instance():
    return InterpolationInstance(F3, [(0, 0), (1, 1), (2, 2)], [1, 1, 1], ell=1, w=1)


def rand_inst(rng, field=F101, nmax=8, smax=3):
    return random_instance(
        field, rng, rng.randint(1, nmax), rng.randint(1, 4), rng.randint(1, 4),
        smin=1, smax=smax,
    )


# -- worked examples -----------------------------------------------------------


def test_collinear_example():
    q, basis = interpolate(collinear_instance(), "naive")
    y_minus_x = BiPoly.from_monomials(F3, 1, [(0, 1, 1), (1, 0, -1)])
    assert proportional(q, y_minus_x)
    assert q.weighted_degree(1) == 1


def test_single_point_basis_example():
    inst = InterpolationInstance(F5, [(0, 0)], [1], ell=1, w=1)
    q, basis = interpolate(inst, "naive")
    x_elem = BiPoly.from_monomials(F5, 1, [(1, 0, 1)])
    y_elem = BiPoly.from_monomials(F5, 1, [(0, 1, 1)])
    got = {e.pretty() for e in basis.elems}
    assert got == {x_elem.pretty(), y_elem.pretty()}
    assert basis.deltas == [1, 1]
    assert any(proportional(q, e) for e in (x_elem, y_elem))


def test_returned_q_satisfies_constraints():
    rng = random.Random(0)
    for _ in range(25):
        inst = rand_inst(rng)
        q, _ = interpolate(inst, "cached")
        for (x, y), s in zip(inst.points, inst.mults):
            assert q.has_multiplicity(x, y, s)


def test_minimality_matches_oracle():
    rng = random.Random(1)
    for _ in range(25):
        inst = rand_inst(rng, nmax=6)
        q, basis = interpolate(inst, "cached")
        _, mindeg = minimal_solution(inst)
        assert q.weighted_degree(inst.w) == min(basis.deltas) == mindeg


# -- invariants ------------------------------------------------------------------


def test_prefix_bases_satisfy_processed_points():
    # after processing points 1..i, every element vanishes to order s_h at
    # every processed point; prefixes are realized as truncated instances
    rng = random.Random(2)
    full = rand_inst(rng, nmax=6)
    for i in range(1, full.n + 1):
        prefix = InterpolationInstance(
            full.field, full.points[:i], full.mults[:i], full.ell, full.w
        )
        _, basis = interpolate(prefix, "cached")
        for e in basis.elems:
            for (x, y), s in zip(prefix.points, prefix.mults):
                assert e.has_multiplicity(x, y, s)
        assert sorted(basis.positions) == list(range(full.ell + 1))


def test_leading_positions_stay_a_permutation():
    rng = random.Random(3)
    for _ in range(20):
        inst = rand_inst(rng)
        _, basis = interpolate(inst, "cached")
        got = [e.leading_position(inst.w) for e in basis.elems]
        assert got == basis.positions
        assert sorted(got) == list(range(inst.ell + 1))


def test_x_degree_bound():
    # the classical argument bounds every row by the total multiplicity;
    # the bound is attained (single point, s=1 already reaches it)
    rng = random.Random(4)
    for _ in range(20):
        inst = rand_inst(rng)
        _, basis = interpolate(inst, "cached")
        bound = inst.total_multiplicity()
        for e in basis.elems:
            assert e.x_degree <= bound
    inst = InterpolationInstance(F5, [(0, 0)], [1], ell=1, w=1)
    _, basis = interpolate(inst, "naive")
    assert max(e.x_degree for e in basis.elems) == 1


def test_pivot_chosen_once_per_derivative_row():
    rng = random.Random(5)
    for _ in range(15):
        inst = rand_inst(rng, nmax=5)
        log = []
        interpolate(inst, "cached", pivot_log=log)
        seen = set()
        per_point = {}
        for point, dx, dy, t in log:
            assert (point, dx, t) not in seen  # never re-chosen for the same dx
            seen.add((point, dx, t))
            per_point[(point, t)] = per_point.get((point, t), 0) + 1
        for (point, t), count in per_point.items():
            assert count <= inst.mults[point]


def test_delta_bookkeeping_exact():
    rng = random.Random(6)
    for _ in range(20):
        inst = rand_inst(rng)
        _, basis = interpolate(inst, "cached")
        for e, d in zip(basis.elems, basis.deltas):
            assert e.weighted_degree(inst.w) == d


def test_modes_bit_identical():
    rng = random.Random(7)
    for _ in range(100):
        inst = rand_inst(rng)
        _, b1 = interpolate(inst, "naive")
        _, b2 = interpolate(inst, "cached")
        assert b1.deltas == b2.deltas
        assert b1.positions == b2.positions
        assert all(x == y for x, y in zip(b1.elems, b2.elems))


def test_usage_errors():
    with pytest.raises(ValueError):
        interpolate(collinear_instance(), "bogus")
    with pytest.raises(ValueError):
        InterpolationInstance(F5, [], [], 1, 1)


# -- Hasse matrix helpers -----------------------------------------------------------


def test_hasse_shift_down_example():
    H = [[7, 9], [3, 0]]
    assert hasse_shift_down(H, 2) == [[0, 0], [7, 0]]


def test_hasse_shift_down_edge_cases():
    assert hasse_shift_down([[0, 0], [0, 0]], 2) == [[0, 0], [0, 0]]
    assert hasse_shift_down([[5]], 1) == [[0]]


def test_hasse_shift_down_matches_multiplication():
    rng = random.Random(8)
    from util import rand_bipoly

    for _ in range(25):
        q = rand_bipoly(F101, rng, rng.randint(0, 3), 6)
        x0, y0 = F101.rand(rng), F101.rand(rng)
        s = rng.randint(1, 4)
        H = q.hasse_matrix(x0, y0, s)
        assert hasse_shift_down(H, s) == q.mul_linear(x0).hasse_matrix(x0, y0, s)


def test_hasse_combine():
    rng = random.Random(9)
    Hj = [[F101.rand(rng) for _ in range(3)] for _ in range(3)]
    Ht = [[F101.rand(rng) for _ in range(3)] for _ in range(3)]
    assert hasse_combine(Hj, Ht, 0, 101) == Hj
    assert hasse_combine(Hj, Hj, 1, 101) == [[0] * 3 for _ in range(3)]
    c = F101.rand(rng)
    got = hasse_combine(Hj, Ht, c, 101)
    for r in range(3):
        for col in range(3):
            assert got[r][col] == (Hj[r][col] - c * Ht[r][col]) % 101
