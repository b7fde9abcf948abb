import random

import pytest
from hypothesis import given

from matbrion.euler import (HStarVector, NonPolynomialSequence, axiom_check, chi_star, hstar,
                            is_macaulay_prefix_ok, nonflat_check, serre_check)
from matbrion.fixtures import fixture_matroids, hexagon_z, triangle_z
from matbrion.matroid import Matroid, mask_of
from matbrion.polytope import SetFunction, ehrhart_values, interior_lattice_points

from conftest import matroid_and_delta


def test_chi_of_zero_is_one():
    for name, m in fixture_matroids(5).items():
        if not m.loops:
            assert chi_star(m, SetFunction.zero(m.n)) == 1, name


def test_u12_delta_full_set():
    assert chi_star(Matroid.uniform(1, 2), SetFunction.delta(2, 3)) == 1


def test_axiom_example_boolean():
    (fc1, fc2) = axiom_check(Matroid.boolean(2), SetFunction.zero(2))
    assert fc1.flat == (1,)
    assert (fc1.lhs, fc1.restrict, fc1.contract) == (1, 1, 1)
    assert fc1.slid == chi_star(Matroid.boolean(2), -SetFunction.delta(2, 1))
    assert fc1.ok and fc2.ok


def test_axiom_u23_zero():
    checks = axiom_check(Matroid.uniform(2, 3), SetFunction.zero(3))
    assert len(checks) == 3 and all(c.ok for c in checks)


def test_axiom_no_proper_flats():
    assert axiom_check(Matroid.uniform(1, 1), SetFunction.from_map(1, {(1,): 4})) == []


def test_axiom_rejects_loops():
    with pytest.raises(ValueError):
        axiom_check(Matroid.from_sets(2, [(1,)]), SetFunction.zero(2))


def test_hstar_unit_segment():
    z = SetFunction.rank_function(Matroid.uniform(1, 2))
    h = hstar(Matroid.boolean(2), z)
    assert h.chi[:3] == [1, 2, 3]
    assert (h.d, h.entries) == (1, [1, 0])


def test_hstar_boolean_matches_ehrhart():
    z = hexagon_z()
    h = hstar(Matroid.boolean(3), z, kmax=4)
    assert h.chi == ehrhart_values(z, 4)
    # E(k) = 12k^2 + 6k + 1; h*_d counts interior points, sum h* = 2! * area
    assert h.entries == [1, 16, 7]


def test_hstar_zero_polytope():
    h = hstar(Matroid.uniform(2, 4), SetFunction.zero(4))
    assert (h.d, h.entries) == (0, [1])


def test_hstar_short_table_raises():
    with pytest.raises(NonPolynomialSequence):
        hstar(Matroid.boolean(3), hexagon_z(), kmax=2)


def test_macaulay_prefix():
    assert is_macaulay_prefix_ok(HStarVector(1, [1, 3], [1, 5]))
    assert not is_macaulay_prefix_ok(HStarVector(1, [1, -1], [1, 1]))


def test_serre_boolean_interior_count():
    lhs, rhs = serre_check(Matroid.boolean(2), triangle_z())
    assert lhs == rhs == -len(interior_lattice_points(triangle_z()))


def test_serre_rank_one_zero():
    assert serre_check(Matroid.uniform(1, 3), SetFunction.zero(3)) == (1, 1)


def test_serre_u23_rank_function():
    m = Matroid.uniform(2, 3)
    lhs, rhs = serre_check(m, SetFunction.rank_function(m))
    assert lhs == rhs


@given(matroid_and_delta(1, 4))
def test_loops_kill_chi(pair):
    m, a = pair
    if m.loops:
        assert chi_star(m, a) == 0


@given(matroid_and_delta(2, 4))
def test_axiom_two_random(pair):
    m, a = pair
    if not m.loops:
        assert all(c.ok for c in axiom_check(m, a))


@given(matroid_and_delta(2, 4))
def test_nonflat_insensitivity(pair):
    m, a = pair
    if not m.loops:
        assert all(before == after for _, before, after in nonflat_check(m, a))
