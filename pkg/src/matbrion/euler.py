"""Matroid Euler characteristics as specializations of Q_M at x = 1."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .brion import q_matroid
from .matroid import Matroid, elements_of
from .plaur import delta_split, from_delta, omega
from .polytope import SetFunction, finite_differences, polynomial_degree


class NonPolynomialSequence(ValueError):
    pass


def chi_star(m: Matroid, a: SetFunction, threads: int | None = None) -> int:
    """chi*_M(a) = Q_M(x^a) at x_1 = ... = x_n = 1."""
    if a.n != m.n:
        raise ValueError("set function and matroid live on different ground sets")
    return q_matroid(from_delta(a), m, threads=threads).result.specialize_ones()


@dataclass
class FlatCheck:
    flat: tuple[int, ...]
    lhs: int
    slid: int
    restrict: int
    contract: int

    @property
    def rhs(self) -> int:
        return self.slid + self.restrict * self.contract

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def axiom_check(m: Matroid, a: SetFunction, threads: int | None = None) -> list[FlatCheck]:
    """chi*(a) = chi*(a - delta_F) + chi*_{M|F}(a|F) chi*_{M/F}(a/F) per flat F."""
    if m.loops:
        raise ValueError("axiom check needs a loopless matroid")
    lhs = chi_star(m, a, threads)
    out = []
    for flat in m.flats():
        if flat == 0 or flat == m.full:
            continue
        slid = chi_star(m, a - SetFunction.delta(m.n, flat), threads)
        ar, ac = delta_split(a, flat)
        cr = chi_star(m.restrict(flat).matroid, ar, threads)
        cc = chi_star(m.contract(flat).matroid, ac, threads)
        out.append(FlatCheck(elements_of(flat), lhs, slid, cr, cc))
    return out


def nonflat_check(m: Matroid, a: SetFunction, subsets=None,
                  threads: int | None = None) -> list[tuple[tuple[int, ...], int, int]]:
    """(T, chi*(a), chi*(a - delta_T)) for nonempty non-flats T; the values should agree."""
    base = chi_star(m, a, threads)
    if subsets is None:
        subsets = [t for t in range(1, 1 << m.n) if not m.is_flat(t)]
    out = []
    for t in subsets:
        if m.is_flat(t):
            raise ValueError(f"{elements_of(t)} is a flat")
        out.append((elements_of(t), base, chi_star(m, a - SetFunction.delta(m.n, t), threads)))
    return out


@dataclass
class HStarVector:
    d: int
    entries: list[int]
    chi: list[int]


def hstar(m: Matroid, z: SetFunction, kmax: int | None = None,
          threads: int | None = None) -> HStarVector:
    """h*-vector of k -> chi*_M(f_P^k) from exact finite differences."""
    if m.loops:
        raise ValueError("h* needs a loopless matroid")
    kmax = m.n + 2 if kmax is None else kmax
    chi = [chi_star(m, z.scale(k), threads) for k in range(kmax + 1)]
    d = polynomial_degree(chi)
    if d is None:
        raise NonPolynomialSequence(
            f"values {chi} do not pin down a polynomial with kmax={kmax}")
    entries = [sum((-1) ** i * comb(d + 1, i) * chi[j - i] for i in range(j + 1))
               for j in range(d + 1)]
    return HStarVector(d, entries, chi)


def serre_check(m: Matroid, a: SetFunction, threads: int | None = None) -> tuple[int, int]:
    """(chi of f^v, (-1)^(rk-1) chi of f * omega_M), both through the recursion."""
    f = from_delta(a)
    lhs = q_matroid(f.dual(), m, threads=threads).result.specialize_ones()
    twisted = q_matroid(f * omega(m), m, threads=threads).result.specialize_ones()
    sign = -1 if (m.rk - 1) % 2 else 1
    return lhs, sign * twisted


def is_macaulay_prefix_ok(h: HStarVector) -> bool:
    """The weak consequences checked here: h*_0 = 1 and every entry >= 0."""
    return h.entries[0] == 1 and all(v >= 0 for v in h.entries)


__all__ = [
    "chi_star", "axiom_check", "FlatCheck", "nonflat_check", "hstar", "HStarVector",
    "serre_check", "NonPolynomialSequence", "finite_differences",
]
