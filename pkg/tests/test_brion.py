import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matbrion.brion import (NotApplicable, PoleHit, cone_partial_sum_eval, eliminate_top,
                            k_threshold, oracle_agrees, prime_points, q_base_case, q_matroid,
                            rational_sum_eval, reciprocity_pair, recursion_terms)
from matbrion.fixtures import (direct_sum, fixture_matroids, hexagon_z, loop_matroid,
                               random_set_function, triangle_z)
from matbrion.laurent import LaurentPoly, parse
from matbrion.matroid import Matroid, mask_of
from matbrion.perms import all_perms
from matbrion.plaur import PiecewiseLaurent, from_delta, is_valid
from matbrion.polytope import SetFunction, enumerate_lattice_points

from conftest import matroid_and_delta


def P(text, n):
    return parse(text, nvars=n)


def test_triangle_boolean_is_segment_polynomial():
    q = q_matroid(from_delta(triangle_z()), Matroid.boolean(2)).result
    assert q == P("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", 2)


def test_ten_term_triangle_after_dehomogenizing():
    # the triangle conv{0, 3e1, 3e2} is the image of 3 * simplex under x3 -> 1
    z = SetFunction.from_function(3, lambda s: 3)
    q = q_matroid(from_delta(z), Matroid.boolean(3)).result.set_ones([3])
    expected = P("1 + x1 + x1^2 + x1^3 + x2 + x1*x2 + x1^2*x2 + x2^2 + x1*x2^2 + x2^3", 3)
    assert q == expected


def test_elimination_step_example():
    f = from_delta(triangle_z())
    out, steps = eliminate_top(f, Matroid.boolean(2), trace=True)
    (step,) = steps
    assert step.case == "coloop"
    assert step.g == [P("x1^2 + x1*x2 + x2^2", 2)]
    assert out.polys == (P("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", 2),)


def test_uniform_rank_one_segment():
    q = q_matroid(from_delta(SetFunction.rank_function(Matroid.uniform(1, 2))),
                  Matroid.uniform(1, 2)).result
    assert q == P("-x1*x2 + x1 + x2", 2)


def test_u12_delta_full_set():
    q = q_matroid(from_delta(SetFunction.delta(2, 3)), Matroid.uniform(1, 2)).result
    assert q == P("x1*x2", 2)


def test_oracle_hand_values():
    seg = from_delta(SetFunction.rank_function(Matroid.uniform(1, 2)))
    assert rational_sum_eval(seg, Matroid.uniform(1, 2), (2, 3)) == -1
    one = PiecewiseLaurent.constant(2)
    loop2 = Matroid.from_sets(2, [(1,)])
    assert rational_sum_eval(one, loop2, (2, 3)) == -2
    # 4-point segment polynomial at (2, 3): 8 + 12 + 18 + 27
    assert rational_sum_eval(from_delta(triangle_z()), Matroid.boolean(2), (2, 3)) == 65


def test_pole_detection():
    f = PiecewiseLaurent.constant(2)
    with pytest.raises(PoleHit):
        rational_sum_eval(f, Matroid.boolean(2), (2, 2))
    with pytest.raises(PoleHit):
        rational_sum_eval(f, Matroid.boolean(2), (0, 2))


def test_k_threshold():
    m = Matroid.uniform(2, 3)
    # prefixes of mu=(1,2): {} and {1}; adding 3 raises rank for both
    assert k_threshold(m, (1, 2)) == 2
    m2 = Matroid.from_sets(3, [(1, 3), (2, 3), (1, 2)])
    assert k_threshold(m2, (2, 1)) == 2
    par = Matroid.from_sets(3, [(1, 2), (2, 3)])  # 1 and 3 parallel
    assert k_threshold(par, (1, 2)) == 1
    with pytest.raises(NotApplicable):
        k_threshold(Matroid.boolean(3), (1, 2))


def test_cone_partial_sums():
    pt = (2, 3, 5, 7)
    for mu in all_perms([1, 2, 3]):
        for i in (1, 2, 3):
            lower, upper = cone_partial_sum_eval(mu, i, pt)
            assert isinstance(lower, Fraction) and isinstance(upper, Fraction)


def test_base_case_products():
    for name, m in fixture_matroids(5).items():
        q = q_matroid(PiecewiseLaurent.constant(m.n), m).result
        assert q == q_base_case(m), name


def test_base_case_formula():
    m = direct_sum(Matroid.uniform(1, 2), loop_matroid(2))
    assert q_base_case(m) == P("x3*x4 - x3 - x4 + 1", 4)


def test_hexagon_boolean_is_lattice_points():
    z = hexagon_z()
    assert q_matroid(from_delta(z), Matroid.boolean(3)).result == enumerate_lattice_points(z)


def test_non_monomial_family_against_oracle():
    f = PiecewiseLaurent.from_mapping(2, {(1, 2): P("x1^2 + 3", 2), (2, 1): P("x1*x2 + 3", 2)})
    assert is_valid(f)
    for m in (Matroid.boolean(2), Matroid.uniform(1, 2), loop_matroid(2)):
        q = q_matroid(f, m).result
        assert oracle_agrees(f, m, q, prime_points(2, 6))


def test_trace_cross_check_runs():
    rep = q_matroid(from_delta(hexagon_z()), Matroid.uniform(2, 3), trace=True)
    assert [len(level) for level in rep.trace] == [2, 1, 1]
    assert rep.trace[0][0].case == "neither"


def test_prime_points_distinct_and_deterministic():
    pts = prime_points(6, 20, seed=3)
    assert pts == prime_points(6, 20, seed=3)
    assert all(len(set(p)) == 6 for p in pts)
    assert len(set(pts)) == 20


@given(matroid_and_delta(1, 4))
def test_recursion_matches_oracle(pair):
    m, a = pair
    f = from_delta(a)
    q = q_matroid(f, m).result
    assert oracle_agrees(f, m, q, prime_points(m.n, 4))


@given(matroid_and_delta(2, 4), st.data())
def test_elimination_order_independent(pair, data):
    m, a = pair
    order = data.draw(st.permutations(list(range(1, m.n + 1))))
    f = from_delta(a)
    assert q_matroid(f, m, order=order).result == q_matroid(f, m).result


@given(matroid_and_delta(2, 4), st.data())
def test_facet_slide_identity(pair, data):
    m, a = pair
    t = data.draw(st.integers(1, (1 << m.n) - 2))
    assert recursion_terms(from_delta(a), m, t).holds


@given(matroid_and_delta(1, 4))
def test_reciprocity_identity(pair):
    m, a = pair
    lhs, rhs = reciprocity_pair(from_delta(a), m)
    assert lhs == rhs


@given(matroid_and_delta(1, 4))
def test_linear_in_family(pair):
    m, a = pair
    f = from_delta(a)
    g = from_delta(a.scale(-1))
    assert q_matroid(f + g, m).result == q_matroid(f, m).result + q_matroid(g, m).result


def test_threads_do_not_change_result():
    f = from_delta(random_set_function(random.Random(1), 5))
    m = Matroid.uniform(3, 5)
    base = q_matroid(f, m, threads=1).result
    assert q_matroid(f, m, threads=4).result == base
