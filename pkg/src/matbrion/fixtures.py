"""Named matroids and set functions used by the checks, plus random generators."""
from __future__ import annotations

import random
from itertools import combinations

from .matroid import Matroid, elements_of, mask_of, popcount
from .polytope import SetFunction


def by_size(values) -> dict:
    return {i: v for i, v in enumerate(values)}


def _card(n: int, fn) -> SetFunction:
    return SetFunction.from_function(n, lambda s: fn(popcount(s)))


def triangle_z() -> SetFunction:
    """z{1}=z{2}=z{12}=3 on n=2."""
    return SetFunction.from_map(2, {(1,): 3, (2,): 3, (1, 2): 3})


def hexagon_z() -> SetFunction:
    """Singletons 6, pairs 10, full set 12: the 19-point hexagon."""
    return _card(3, lambda k: {1: 6, 2: 10, 3: 12}[k])


def simplex_z(n: int, k: int) -> SetFunction:
    """k times the standard simplex conv{k e_i}."""
    return _card(n, lambda c: k if c else 0)


def permutohedron_z(n: int) -> SetFunction:
    """Standard permutohedron conv of permutations of (1..n)."""
    return _card(n, lambda c: sum(range(n - c + 1, n + 1)))


def graphic_k4_minus_edge() -> Matroid:
    # edges 1=ab 2=ac 3=bc 4=bd 5=cd; circuits {1,2,3}, {3,4,5}, {1,2,4,5}
    bad = {mask_of((1, 2, 3)), mask_of((3, 4, 5))}
    bases = [c for c in combinations(range(1, 6), 3) if mask_of(c) not in bad]
    return Matroid.from_sets(5, bases)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    bases = set()
    for b1 in m1.bases:
        for b2 in m2.bases:
            bases.add(b1 | (b2 << m1.n))
    return Matroid(m1.n + m2.n, frozenset(bases))


def loop_matroid(n: int = 1) -> Matroid:
    return Matroid(n, frozenset([0]))


def fixture_matroids(max_n: int = 5) -> dict[str, Matroid]:
    """Small matroids on n <= max_n, loopless and loop-bearing."""
    out = {
        "U01": loop_matroid(1),
        "U11": Matroid.boolean(1),
        "U12": Matroid.uniform(1, 2),
        "B2": Matroid.boolean(2),
        "coloop+loop": Matroid.from_sets(2, [(1,)]),
        "B3": Matroid.boolean(3),
        "U23": Matroid.uniform(2, 3),
        "U13": Matroid.uniform(1, 3),
        "coloop+parallel": Matroid.from_sets(3, [(1, 2), (1, 3)]),
        "U12+loop": direct_sum(Matroid.uniform(1, 2), loop_matroid(1)),
        "U24": Matroid.uniform(2, 4),
        "U34": Matroid.uniform(3, 4),
        "two-parallel-pairs": Matroid.from_sets(4, [(1, 3), (1, 4), (2, 3), (2, 4)]),
        "U23+loop": direct_sum(Matroid.uniform(2, 3), loop_matroid(1)),
        "B4": Matroid.boolean(4),
        "U25": Matroid.uniform(2, 5),
        "U35": Matroid.uniform(3, 5),
        "K4-e": graphic_k4_minus_edge(),
        "U24+loop": direct_sum(Matroid.uniform(2, 4), loop_matroid(1)),
    }
    return {k: m for k, m in out.items() if m.n <= max_n}


def fixture_set_functions(max_n: int = 5) -> dict[str, SetFunction]:
    """Submodular set functions (generalized permutohedra) on n <= max_n."""
    u23 = SetFunction.rank_function(Matroid.uniform(2, 3))
    u13 = SetFunction.rank_function(Matroid.uniform(1, 3))
    u24 = SetFunction.rank_function(Matroid.uniform(2, 4))
    u14 = SetFunction.rank_function(Matroid.uniform(1, 4))
    out = {
        "point1": SetFunction.from_map(1, {(1,): 2}),
        "segment3": triangle_z(),
        "unit-segment": SetFunction.rank_function(Matroid.uniform(1, 2)),
        "shifted-point2": SetFunction.modular([2, -1]),
        "hexagon": hexagon_z(),
        "permutohedron3": permutohedron_z(3),
        "simplex3x2": simplex_z(3, 2),
        "hypersimplex-2-3": u23,
        "degenerate3": u13.scale(2) + SetFunction.modular([1, 0, 2]),
        "permutohedron4": permutohedron_z(4),
        "hypersimplex-2-4": u24,
        "simplex4x2": simplex_z(4, 2),
        "mixed4": u24 + u14 + SetFunction.modular([0, 1, 0, -1]),
        "hypersimplex-2-5": SetFunction.rank_function(Matroid.uniform(2, 5)),
        "mixed5": SetFunction.rank_function(Matroid.uniform(1, 5))
        + SetFunction.rank_function(graphic_k4_minus_edge()),
    }
    return {k: z for k, z in out.items() if z.n <= max_n}


def fixture_pairs(max_n: int = 5):
    """(matroid name, matroid, set function name, set function) on a common n."""
    ms = fixture_matroids(max_n)
    zs = fixture_set_functions(max_n)
    for mname, m in ms.items():
        for zname, z in zs.items():
            if z.n == m.n:
                yield mname, m, zname, z


# random generators ----------------------------------------------------------

def random_matroid(rng: random.Random, n: int) -> Matroid:
    """Column matroid of a random small integer matrix (loops and parallels allowed)."""
    from sympy import Matrix

    r = rng.randint(0, n)
    entries = [-1, 0, 0, 1, 1, 2]
    rows = [[rng.choice(entries) for _ in range(n)] for _ in range(r)]
    if r == 0:
        return Matroid(n, frozenset([0]))
    mat = Matrix(rows)
    rank = mat.rank()
    if rank == 0:
        return Matroid(n, frozenset([0]))
    bases = []
    for cols in combinations(range(n), rank):
        if mat.extract(list(range(r)), list(cols)).rank() == rank:
            bases.append(tuple(c + 1 for c in cols))
    return Matroid.from_sets(n, bases)


def random_submodular(rng: random.Random, n: int, parts: int = 2, scale: int = 2) -> SetFunction:
    """Nonnegative combination of random matroid rank functions plus a modular part."""
    z = SetFunction.modular([rng.randint(-1, 1) for _ in range(n)])
    for _ in range(parts):
        m = random_matroid(rng, n)
        z = z + SetFunction.rank_function(m).scale(rng.randint(0, scale))
    return z


def random_set_function(rng: random.Random, n: int, lo: int = -2, hi: int = 2) -> SetFunction:
    """Arbitrary integer ray values: a piecewise linear function, not nec. convex."""
    return SetFunction.from_function(n, lambda s: rng.randint(lo, hi))


def nonflats(m: Matroid) -> list[int]:
    return [t for t in range(1, 1 << m.n) if not m.is_flat(t)]


def describe(mask: int) -> str:
    return "{" + ",".join(map(str, elements_of(mask))) + "}"
