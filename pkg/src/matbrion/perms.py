"""Permutations in single-line notation, indexed by Lehmer code.

A permutation of a ground set is a tuple listing sigma(1), ..., sigma(n).
Lexicographic order of the tuples (for a sorted ground set) coincides with
Lehmer-code order, which is what ``itertools.permutations`` produces.
"""
from __future__ import annotations

from itertools import permutations
from math import factorial
from typing import Sequence

Perm = tuple[int, ...]


def all_perms(elements: Sequence[int]) -> list[Perm]:
    return list(permutations(sorted(elements)))


def lehmer_rank(perm: Sequence[int]) -> int:
    """Position of ``perm`` in lexicographic order of permutations of its values."""
    n = len(perm)
    rank = 0
    remaining = sorted(perm)
    for i, v in enumerate(perm):
        j = remaining.index(v)
        rank += j * factorial(n - 1 - i)
        del remaining[j]
    return rank


def lehmer_unrank(rank: int, elements: Sequence[int]) -> Perm:
    remaining = sorted(elements)
    n = len(remaining)
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} out of range for {n} elements")
    out = []
    for i in range(n):
        f = factorial(n - 1 - i)
        j, rank = divmod(rank, f)
        out.append(remaining.pop(j))
    return tuple(out)


def swap_adjacent(perm: Perm, i: int) -> Perm:
    """perm composed with the transposition of positions i and i+1 (1-indexed)."""
    p = list(perm)
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def insert_at(mu: Perm, element: int, i: int) -> Perm:
    """The permutation mu_i with ``element`` placed at position i (1-indexed)."""
    return mu[: i - 1] + (element,) + mu[i - 1:]


def format_perm(perm: Sequence[int]) -> str:
    return ",".join(str(v) for v in perm)


def parse_perm(text: str) -> Perm:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(v) for v in text.split(","))
