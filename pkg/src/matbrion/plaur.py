"""Piecewise Laurent polynomials on the braid fan.

A family assigns a Laurent polynomial to every permutation of the ground
set {1..n}.  Entries are stored densely in Lehmer-code order.  The
polynomials may live in a larger ring (``nvars >= n``); the extra
variables behave as scalars, which is how eliminated variables persist
during the recursion in ``brion``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .laurent import LaurentPoly, NotDivisible, parse
from .matroid import Matroid, elements_of, popcount
from .perms import Perm, all_perms, format_perm, lehmer_rank, parse_perm, swap_adjacent
from .polytope import SetFunction


class GluingViolation(ValueError):
    def __init__(self, message: str, sigma: Perm, i: int):
        super().__init__(message)
        self.sigma = sigma
        self.i = i


class NotAMonomialFamily(ValueError):
    pass


class WellDefinednessViolation(ValueError):
    pass


class PiecewiseLaurent:
    __slots__ = ("n", "nvars", "polys", "perms")

    def __init__(self, n: int, polys: Sequence[LaurentPoly], nvars: int | None = None,
                 perms: Sequence[Perm] | None = None):
        self.n = n
        self.nvars = n if nvars is None else nvars
        self.perms = tuple(perms) if perms is not None else tuple(all_perms(range(1, n + 1)))
        self.polys = tuple(polys)
        if len(self.polys) != len(self.perms):
            raise ValueError(f"need {len(self.perms)} entries, got {len(self.polys)}")
        for p in self.polys:
            if p.nvars != self.nvars:
                raise ValueError("entry lives in the wrong polynomial ring")

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Perm], LaurentPoly],
                      nvars: int | None = None) -> "PiecewiseLaurent":
        perms = all_perms(range(1, n + 1))
        return cls(n, [fn(s) for s in perms], nvars, perms)

    @classmethod
    def constant(cls, n: int, c: int = 1, nvars: int | None = None) -> "PiecewiseLaurent":
        nv = n if nvars is None else nvars
        p = LaurentPoly.constant(nv, c)
        return cls.from_function(n, lambda s: p, nv)

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[Perm, LaurentPoly]) -> "PiecewiseLaurent":
        perms = all_perms(range(1, n + 1))
        missing = [s for s in perms if s not in mapping]
        if missing:
            raise ValueError(f"family is missing permutation {format_perm(missing[0])}")
        return cls(n, [mapping[s] for s in perms], n, perms)

    def __getitem__(self, sigma: Sequence[int]) -> LaurentPoly:
        return self.polys[lehmer_rank(sigma)]

    def items(self):
        return zip(self.perms, self.polys)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiecewiseLaurent):
            return NotImplemented
        return self.n == other.n and self.nvars == other.nvars and self.polys == other.polys

    def __repr__(self) -> str:
        body = ", ".join(f"{format_perm(s)}: {p}" for s, p in list(self.items())[:6])
        more = ", ..." if len(self.perms) > 6 else ""
        return f"PiecewiseLaurent(n={self.n}, {{{body}{more}}})"

    def _pointwise(self, other: "PiecewiseLaurent", op) -> "PiecewiseLaurent":
        if self.n != other.n or self.nvars != other.nvars:
            raise ValueError("family size mismatch")
        return PiecewiseLaurent(self.n, [op(a, b) for a, b in zip(self.polys, other.polys)],
                                self.nvars, self.perms)

    def __add__(self, other):
        return self._pointwise(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._pointwise(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._pointwise(other, lambda a, b: a * b)

    def __neg__(self):
        return PiecewiseLaurent(self.n, [-p for p in self.polys], self.nvars, self.perms)

    def __pow__(self, k: int) -> "PiecewiseLaurent":
        return PiecewiseLaurent(self.n, [p ** k for p in self.polys], self.nvars, self.perms)

    def dual(self) -> "PiecewiseLaurent":
        return PiecewiseLaurent(self.n, [p.dual() for p in self.polys], self.nvars, self.perms)

    def map(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "PiecewiseLaurent":
        return PiecewiseLaurent(self.n, [fn(p) for p in self.polys], self.nvars, self.perms)

    def relabel(self, perm: Sequence[int]) -> "PiecewiseLaurent":
        """Transport along the bijection i -> perm[i-1] of elements and variables.

        Only valid when nvars == n.
        """
        if self.nvars != self.n:
            raise ValueError("relabel needs nvars == n")
        mapping = {}
        for s, p in self.items():
            mapping[tuple(perm[e - 1] for e in s)] = p.reindex(perm, self.n)
        return PiecewiseLaurent.from_mapping(self.n, mapping)

    def is_monomial_family(self) -> bool:
        return all(p.is_monomial() for p in self.polys)

    def exponents(self) -> list[tuple[int, ...]]:
        if not self.is_monomial_family():
            raise NotAMonomialFamily("family entries are not monic monomials")
        return [next(iter(p.terms)) for p in self.polys]

    # serialization
    def to_json(self) -> dict:
        if self.nvars != self.n:
            raise ValueError("only top-level families serialize")
        return {"n": self.n, "family": {format_perm(s): p.to_text() for s, p in self.items()}}

    @classmethod
    def from_json(cls, data: dict) -> "PiecewiseLaurent":
        n = int(data["n"])
        mapping = {}
        for key, text in data["family"].items():
            s = parse_perm(key)
            if sorted(s) != list(range(1, n + 1)):
                raise ValueError(f"{key!r} is not a permutation of [{n}]")
            mapping[s] = parse(str(text), nvars=n)
        return cls.from_mapping(n, mapping)


def validate_family(f: PiecewiseLaurent) -> None:
    """Raise GluingViolation unless every adjacent difference is divisible."""
    index = {s: k for k, s in enumerate(f.perms)}
    for k, s in enumerate(f.perms):
        for i in range(1, f.n):
            t = swap_adjacent(s, i)
            if index[t] < k:
                continue
            try:
                (f.polys[k] - f.polys[index[t]]).divide_binomial(s[i - 1], s[i])
            except NotDivisible:
                raise GluingViolation(
                    f"f_{format_perm(s)} - f_{format_perm(t)} is not divisible by "
                    f"x{s[i - 1]} - x{s[i]}", s, i) from None


def is_valid(f: PiecewiseLaurent) -> bool:
    try:
        validate_family(f)
    except GluingViolation:
        return False
    return True


def from_delta(a: SetFunction) -> PiecewiseLaurent:
    """Monomial family of the piecewise linear function with ray values a(T).

    On the cone of sigma the exponent of x_sigma(i) is a(S_i) - a(S_{i-1})
    for the prefix sets S_i.
    """
    n = a.n
    vals = a.values

    def entry(s: Perm) -> LaurentPoly:
        e = [0] * n
        prev = 0
        mask = 0
        for x in s:
            mask |= 1 << (x - 1)
            e[x - 1] = vals[mask] - vals[prev]
            prev = mask
        return LaurentPoly.monomial(e)

    return PiecewiseLaurent.from_function(n, entry)


def piecewise_monomial(z: SetFunction) -> PiecewiseLaurent:
    """f_P = {x^{v_P(sigma)}}; for submodular z the greedy vertices."""
    return from_delta(z)


def family_op(f: PiecewiseLaurent, g: PiecewiseLaurent, kind: str) -> PiecewiseLaurent:
    if kind == "add":
        return f + g
    if kind == "mul":
        return f * g
    raise ValueError(f"unknown family op {kind!r}")


def family_dual(f: PiecewiseLaurent) -> PiecewiseLaurent:
    return f.dual()


def omega(m: Matroid) -> PiecewiseLaurent:
    """(x_sigma(n) / x_sigma(1)) * prod_{i not in B(sigma)} x_i^-1."""
    n = m.n

    def entry(s: Perm) -> LaurentPoly:
        e = [0] * n
        e[s[-1] - 1] += 1
        e[s[0] - 1] -= 1
        b = m.greedy_basis(s)
        for i in range(n):
            if not b >> i & 1:
                e[i] -= 1
        return LaurentPoly.monomial(e)

    return PiecewiseLaurent.from_function(n, entry)


def in_slide_set(sigma: Perm, t: int) -> bool:
    """sigma in S_{E,T}: its first |T| entries are exactly T."""
    k = popcount(t)
    mask = 0
    for x in sigma[:k]:
        mask |= 1 << (x - 1)
    return mask == t


def family_slide(f: PiecewiseLaurent, t: int, check: bool = True) -> PiecewiseLaurent:
    """f_T: multiply f_sigma by x_sigma(k+1)/x_sigma(k) for sigma in S_{E,T}."""
    if not 0 < t < (1 << f.n) - 1:
        raise ValueError("t must be a nonempty proper subset")
    k = popcount(t)
    out = []
    for s, p in f.items():
        if in_slide_set(s, t):
            p = p.times_var(s[k]).times_var(s[k - 1], -1)
        out.append(p)
    g = PiecewiseLaurent(f.n, out, f.nvars, f.perms)
    if check:
        validate_family(g)
    return g


@dataclass(frozen=True)
class FamilySplit:
    restrict: PiecewiseLaurent  # on T, relabeled to 1..|T|
    contract: PiecewiseLaurent  # on T^c, relabeled to 1..|T^c|
    t_labels: tuple[int, ...]
    c_labels: tuple[int, ...]


def family_split(f: PiecewiseLaurent, t: int) -> FamilySplit:
    """f|T and f/T of a monomial family, checked for well-definedness."""
    n = f.n
    full = (1 << n) - 1
    if not 0 < t < full:
        raise ValueError("t must be a nonempty proper subset")
    if f.nvars != n:
        raise ValueError("family_split needs a top-level family")
    if not f.is_monomial_family():
        raise NotAMonomialFamily("f|T and f/T are only defined for piecewise monomials")
    lt = elements_of(t)
    lc = elements_of(full & ~t)
    pos_t = {e: i + 1 for i, e in enumerate(lt)}
    pos_c = {e: i + 1 for i, e in enumerate(lc)}
    k = len(lt)
    rest: dict[Perm, LaurentPoly] = {}
    con: dict[Perm, LaurentPoly] = {}
    for s, p in f.items():
        if not in_slide_set(s, t):
            continue
        (e,) = p.terms
        r_key = tuple(pos_t[x] for x in s[:k])
        c_key = tuple(pos_c[x] for x in s[k:])
        r_val = LaurentPoly.monomial([e[x - 1] for x in lt])
        c_val = LaurentPoly.monomial([e[x - 1] for x in lc])
        for store, key, val, side in ((rest, r_key, r_val, "f|T"), (con, c_key, c_val, "f/T")):
            old = store.setdefault(key, val)
            if old != val:
                raise WellDefinednessViolation(
                    f"{side} differs between permutations sharing {format_perm(key)}")
    return FamilySplit(PiecewiseLaurent.from_mapping(k, rest),
                       PiecewiseLaurent.from_mapping(n - k, con), lt, lc)


def delta_split(a: SetFunction, flat: int) -> tuple[SetFunction, SetFunction]:
    """Restriction and contraction of ray-value data at a subset F.

    a|F(S) = a(S) for S inside F and a/F(S) = a(F u S) - a(F) for S inside
    F^c, both relabeled onto 1..|F| and 1..|F^c|.  This agrees with
    ``family_split`` applied to ``from_delta(a)``.
    """
    from .polytope import split

    rest, con, _, _ = split(a, flat)
    return rest, con
