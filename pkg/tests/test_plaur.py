import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matbrion.fixtures import fixture_matroids, hexagon_z, random_set_function, triangle_z
from matbrion.laurent import LaurentPoly, parse
from matbrion.matroid import Matroid, mask_of
from matbrion.perms import all_perms, lehmer_rank, lehmer_unrank
from matbrion.plaur import (GluingViolation, NotAMonomialFamily, PiecewiseLaurent, delta_split,
                            family_slide, family_split, from_delta, is_valid, omega,
                            validate_family)
from matbrion.polytope import SetFunction


def mono(*e):
    return LaurentPoly.monomial(e)


def test_lehmer_order():
    perms = all_perms([1, 2, 3])
    assert [lehmer_rank(p) for p in perms] == list(range(6))
    assert all(lehmer_unrank(k, [1, 2, 3]) == p for k, p in enumerate(perms))


def test_triangle_family():
    f = from_delta(triangle_z())
    assert f[(1, 2)] == mono(3, 0)
    assert f[(2, 1)] == mono(0, 3)
    assert f.dual()[(1, 2)] == mono(-3, 0)


def test_delta_family_example():
    f = from_delta(SetFunction.delta(2, 3))
    assert f[(1, 2)] == mono(0, 1) and f[(2, 1)] == mono(1, 0)
    assert from_delta(SetFunction.zero(3)) == PiecewiseLaurent.constant(3)


def test_rank_function_gives_base_polytope_vertices():
    m = Matroid.uniform(2, 3)
    f = from_delta(SetFunction.rank_function(m))
    for s, p in f.items():
        (e,) = p.terms
        assert mask_of(i + 1 for i, v in enumerate(e) if v) == m.greedy_basis(s)


def test_gluing_violation_witness():
    f = PiecewiseLaurent.from_mapping(2, {(1, 2): mono(1, 0), (2, 1): mono(0, 0) + mono(0, 0)})
    with pytest.raises(GluingViolation) as err:
        validate_family(f)
    assert err.value.sigma == (1, 2) and err.value.i == 1


def test_non_monomial_family_accepted():
    # x1 - x2 divides f_12 - f_21
    f = PiecewiseLaurent.from_mapping(2, {(1, 2): parse("x1^2 + 3", nvars=2),
                                          (2, 1): parse("x1*x2 + 3", nvars=2)})
    assert is_valid(f)


def test_hexagon_slide_example():
    f = from_delta(hexagon_z())
    g = family_slide(f, mask_of([2, 3]))
    assert f[(2, 3, 1)] == mono(2, 6, 4) and g[(2, 3, 1)] == mono(3, 6, 3)
    assert f[(3, 2, 1)] == mono(2, 4, 6) and g[(3, 2, 1)] == mono(3, 3, 6)
    changed = [s for s in g.perms if g[s] != f[s]]
    assert sorted(changed) == [(2, 3, 1), (3, 2, 1)]


def test_hexagon_split_example():
    parts = family_split(from_delta(hexagon_z()), mask_of([2, 3]))
    assert sorted(next(iter(p.terms)) for p in parts.restrict.polys) == [(4, 6), (6, 4)]
    assert parts.contract.polys == (mono(2),)


def test_split_requires_monomials():
    f = PiecewiseLaurent.constant(2, 2)
    with pytest.raises(NotAMonomialFamily):
        family_split(f, 1)


def test_delta_split_examples():
    n = 3
    flat = mask_of([1])
    r, c = delta_split(SetFunction.delta(n, flat), flat)
    assert r.values == (0, 1)
    # a/F(S) = a(F u S) - a(F) = -1 on every nonempty S
    assert c.values == (0, -1, -1, -1)
    r, c = delta_split(SetFunction.delta(n, mask_of([2])), flat)
    assert set(r.values) == {0} and set(c.values) == {0}
    r, c = delta_split(SetFunction.zero(n), flat)
    assert set(r.values) == {0} and set(c.values) == {0}


def test_omega_glues():
    for m in fixture_matroids(4).values():
        validate_family(omega(m))


def test_json_round_trip():
    f = from_delta(hexagon_z()) * omega(Matroid.uniform(2, 3))
    assert PiecewiseLaurent.from_json(f.to_json()) == f


@given(st.integers(1, 5), st.integers(0, 10**6))
def test_delta_families_glue(n, seed):
    a = random_set_function(random.Random(seed), n)
    validate_family(from_delta(a))


@given(st.integers(2, 4), st.integers(0, 10**6))
def test_split_agrees_with_delta_split(n, seed):
    rng = random.Random(seed)
    a = random_set_function(rng, n)
    t = rng.randrange(1, (1 << n) - 1)
    parts = family_split(from_delta(a), t)
    r, c = delta_split(a, t)
    assert parts.restrict == from_delta(r)
    assert parts.contract == from_delta(c)


@given(st.integers(2, 4), st.integers(0, 10**6))
def test_slide_equals_delta_shift(n, seed):
    rng = random.Random(seed)
    a = random_set_function(rng, n)
    t = rng.randrange(1, (1 << n) - 1)
    assert family_slide(from_delta(a), t) == from_delta(a - SetFunction.delta(n, t))


@given(st.integers(1, 4), st.integers(0, 10**6))
def test_products_and_sums_glue(n, seed):
    rng = random.Random(seed)
    f = from_delta(random_set_function(rng, n))
    g = from_delta(random_set_function(rng, n))
    assert is_valid(f + g) and is_valid(f * g) and is_valid(f - g.dual())
