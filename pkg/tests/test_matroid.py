import random

import pytest
from hypothesis import given

from matbrion.fixtures import fixture_matroids, graphic_k4_minus_edge, random_matroid
from matbrion.matroid import Matroid, NotAMatroid, elements_of, mask_of, popcount
from matbrion.perms import all_perms

from conftest import matroids


def test_uniform_rank():
    m = Matroid.uniform(2, 3)
    assert m.rk == 2
    assert [m.rank(s) for s in range(8)] == [0, 1, 1, 2, 1, 2, 2, 2]


def test_unequal_cardinalities_rejected():
    with pytest.raises(NotAMatroid, match="unequal"):
        Matroid.from_sets(2, [[1], [1, 2]])


def test_exchange_failure_has_witness():
    # {12, 34} fails exchange
    with pytest.raises(NotAMatroid) as err:
        Matroid.from_sets(4, [[1, 2], [3, 4]])
    b1, b2, i = err.value.witness
    assert i in b1 and i not in b2


def test_empty_and_out_of_range():
    with pytest.raises(NotAMatroid):
        Matroid.from_sets(2, [])
    with pytest.raises(NotAMatroid):
        Matroid.from_sets(2, [[3]])


def test_loops_and_coloops():
    m = Matroid.from_sets(3, [(1, 2), (1, 3)])
    assert elements_of(m.coloops) == (1,)
    assert m.loops == 0
    loopy = Matroid.from_sets(3, [(1,)])
    assert elements_of(loopy.loops) == (2, 3)
    assert elements_of(loopy.coloops) == (1,)


def test_greedy_basis_examples():
    m = Matroid.uniform(2, 3)
    assert elements_of(m.greedy_basis((3, 1, 2))) == (1, 3)
    assert elements_of(m.greedy_basis((2, 3, 1))) == (2, 3)


def test_minors_of_u24():
    m = Matroid.uniform(2, 4)
    r = m.restrict(mask_of([1, 2, 3]))
    assert r.labels == (1, 2, 3)
    assert r.matroid == Matroid.uniform(2, 3)
    c = m.contract(mask_of([2]))
    assert c.labels == (1, 3, 4)
    assert c.matroid == Matroid.uniform(1, 3)
    d = m.delete(mask_of([4]))
    assert d.matroid == Matroid.uniform(2, 3)


def test_contract_loop_like_subset():
    m = Matroid.from_sets(3, [(1,)])
    c = m.contract(mask_of([2]))
    assert c.matroid.rk == 1


def test_flats_of_u23():
    m = Matroid.uniform(2, 3)
    assert [elements_of(f) for f in m.flats()] == [(), (1,), (2,), (3,), (1, 2, 3)]


def test_flats_of_graphic():
    m = graphic_k4_minus_edge()
    flats = {elements_of(f) for f in m.flats()}
    assert (1, 2, 3) in flats and (3, 4, 5) in flats
    assert (1, 2) not in flats


def test_json_round_trip():
    for m in fixture_matroids().values():
        assert Matroid.from_json(m.to_json()) == m


def test_relabel_preserves_structure():
    m = graphic_k4_minus_edge()
    r = m.relabel([5, 4, 3, 2, 1])
    assert len(r.bases) == len(m.bases)
    assert r.rank(mask_of([3, 4, 5])) == m.rank(mask_of([1, 2, 3]))


@given(matroids(1, 5))
def test_greedy_basis_is_a_basis(m):
    for s in all_perms(range(1, m.n + 1))[:24]:
        assert m.greedy_basis(s) in m.bases


@given(matroids(1, 5))
def test_rank_axioms(m):
    size = 1 << m.n
    for a in range(size):
        assert 0 <= m.rank(a) <= popcount(a)
        for b in range(size):
            assert m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b)


@given(matroids(2, 5))
def test_restrict_contract_ranks(m):
    t = random.Random(m.n).randrange(1, 1 << m.n)
    r = m.restrict(t).matroid
    c = m.contract(t).matroid
    assert r.rk == m.rank(t)
    assert c.rk == m.rk - m.rank(t)


def test_random_matroid_deterministic():
    a = random_matroid(random.Random(7), 5)
    b = random_matroid(random.Random(7), 5)
    assert a == b
