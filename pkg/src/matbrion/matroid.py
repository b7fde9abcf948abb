"""Matroids stored by their bases.

Subsets of the ground set {1..n} are bitmasks: element i is bit i-1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class NotAMatroid(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def validate_bases(n: int, bases: Iterable[int]) -> None:
    """Check nonemptiness, equicardinality and basis exchange.

    Raises NotAMatroid; for exchange failures the witness is (B1, B2, i)
    as element tuples.
    """
    bases = sorted(set(bases))
    if not bases:
        raise NotAMatroid("a matroid needs at least one basis")
    full = (1 << n) - 1
    for b in bases:
        if b & ~full:
            raise NotAMatroid(f"basis {elements_of(b)} is not a subset of [{n}]")
    sizes = {popcount(b) for b in bases}
    if len(sizes) > 1:
        raise NotAMatroid(f"bases have unequal cardinalities {sorted(sizes)}")
    present = set(bases)
    for b1 in bases:
        for b2 in bases:
            diff = b1 & ~b2
            other = b2 & ~b1
            for i in elements_of(diff):
                base = b1 & ~(1 << (i - 1))
                if not any(base | (1 << (j - 1)) in present for j in elements_of(other)):
                    raise NotAMatroid(
                        f"exchange fails for B1={elements_of(b1)}, B2={elements_of(b2)}, i={i}",
                        witness=(elements_of(b1), elements_of(b2), i),
                    )


@dataclass(frozen=True)
class Matroid:
    n: int
    bases: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "bases", frozenset(self.bases))
        validate_bases(self.n, self.bases)

    @classmethod
    def from_sets(cls, n: int, bases: Iterable[Iterable[int]]) -> "Matroid":
        return cls(n, frozenset(mask_of(b) for b in bases))

    @classmethod
    def uniform(cls, r: int, n: int) -> "Matroid":
        return cls.from_sets(n, combinations(range(1, n + 1), r))

    @classmethod
    def boolean(cls, n: int) -> "Matroid":
        return cls(n, frozenset([(1 << n) - 1]))

    def validate(self) -> None:
        validate_bases(self.n, self.bases)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def rk(self) -> int:
        return popcount(next(iter(self.bases)))

    @cached_property
    def _rank_table(self) -> list[int]:
        table = [0] * (1 << self.n)
        bases = list(self.bases)
        for s in range(1 << self.n):
            table[s] = max(popcount(b & s) for b in bases)
        return table

    def rank(self, s: int) -> int:
        return self._rank_table[s]

    @cached_property
    def loops(self) -> int:
        union = 0
        for b in self.bases:
            union |= b
        return self.full & ~union

    @cached_property
    def coloops(self) -> int:
        inter = self.full
        for b in self.bases:
            inter &= b
        return inter

    def loops_coloops(self) -> tuple[int, int]:
        return self.loops, self.coloops

    def is_loop(self, i: int) -> bool:
        return bool(self.loops >> (i - 1) & 1)

    def is_coloop(self, i: int) -> bool:
        return bool(self.coloops >> (i - 1) & 1)

    def greedy_basis(self, sigma: Sequence[int]) -> int:
        """Basis picked by scanning sigma(1), sigma(2), ... keeping rank jumps."""
        table = self._rank_table
        prefix = 0
        basis = 0
        for e in sigma:
            bit = 1 << (e - 1)
            if table[prefix | bit] > table[prefix]:
                basis |= bit
            prefix |= bit
        return basis

    def is_flat(self, s: int) -> bool:
        r = self.rank(s)
        for i in range(self.n):
            bit = 1 << i
            if not s & bit and self.rank(s | bit) == r:
                return False
        return True

    def flats(self) -> list[int]:
        """All flats, sorted by size then by element tuple."""
        out = [s for s in range(1 << self.n) if self.is_flat(s)]
        return sorted(out, key=lambda s: (popcount(s), elements_of(s)))

    def restrict(self, t: int) -> "Minor":
        return minor(self, t, "restrict")

    def contract(self, t: int) -> "Minor":
        return minor(self, t, "contract")

    def delete(self, t: int) -> "Minor":
        return minor(self, t, "delete")

    def delete_top(self) -> "Matroid":
        """M minus element n; labels 1..n-1 are unchanged."""
        return minor(self, 1 << (self.n - 1), "delete").matroid

    def relabel(self, perm: Sequence[int]) -> "Matroid":
        """Image of M under the bijection i -> perm[i-1]."""
        out = set()
        for b in self.bases:
            out.add(mask_of(perm[e - 1] for e in elements_of(b)))
        return Matroid(self.n, frozenset(out))

    def to_json(self) -> dict:
        return {"n": self.n, "bases": sorted(list(elements_of(b)) for b in self.bases)}

    @classmethod
    def from_json(cls, data: dict) -> "Matroid":
        return cls.from_sets(int(data["n"]), data["bases"])

    def __repr__(self) -> str:
        bases = sorted(elements_of(b) for b in self.bases)
        return f"Matroid(n={self.n}, bases={bases})"


@dataclass(frozen=True)
class Minor:
    """A minor relabeled onto {1..k}; ``labels[i]`` is the original label of i+1."""

    matroid: Matroid
    labels: tuple[int, ...] = field(default=())


def _compress(mask: int, labels: Sequence[int]) -> int:
    out = 0
    for new, old in enumerate(labels):
        if mask >> (old - 1) & 1:
            out |= 1 << new
    return out


def minor(m: Matroid, t: int, kind: str) -> Minor:
    if kind == "delete":
        return minor(m, m.full & ~t, "restrict")
    r = m.rank(t)
    if kind == "restrict":
        labels = elements_of(t)
        bases = {_compress(b & t, labels) for b in m.bases if popcount(b & t) == r}
    elif kind == "contract":
        labels = elements_of(m.full & ~t)
        bases = {_compress(b & ~t, labels) for b in m.bases if popcount(b & t) == r}
    else:
        raise ValueError(f"unknown minor kind {kind!r}")
    return Minor(Matroid(len(labels), frozenset(bases)), tuple(labels))
