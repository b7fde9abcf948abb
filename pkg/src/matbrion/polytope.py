"""Generalized permutohedra described by integer set functions.

A set function ``z`` on [n] with z(empty) = 0 stands for the polytope

    P = {x : sum_{i in T} x_i <= z(T) for all T,  sum_i x_i = z([n])}.

The same data also serves as the ray values (delta-coefficients) of a
piecewise linear function on the braid fan; see ``plaur.from_delta``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .laurent import LaurentPoly
from .matroid import Matroid, elements_of, mask_of, popcount


class InfeasibleBox(ValueError):
    pass


class Unsupported(ValueError):
    pass


@dataclass(frozen=True)
class SetFunction:
    n: int
    values: tuple[int, ...]  # indexed by bitmask

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != 1 << self.n:
            raise ValueError(f"need {1 << self.n} values, got {len(values)}")
        if values[0] != 0:
            raise ValueError("z(empty set) must be 0")
        object.__setattr__(self, "values", values)

    def __call__(self, s: int) -> int:
        return self.values[s]

    def at(self, elements: Iterable[int]) -> int:
        return self.values[mask_of(elements)]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @classmethod
    def zero(cls, n: int) -> "SetFunction":
        return cls(n, (0,) * (1 << n))

    @classmethod
    def from_map(cls, n: int, mapping: Mapping) -> "SetFunction":
        """Build from {subset: value}; subsets as element iterables or masks."""
        vals = [0] * (1 << n)
        for key, v in mapping.items():
            s = key if isinstance(key, int) else mask_of(key)
            if s:
                vals[s] = v
        return cls(n, tuple(vals))

    @classmethod
    def from_function(cls, n: int, fn) -> "SetFunction":
        return cls(n, tuple([0] + [fn(s) for s in range(1, 1 << n)]))

    @classmethod
    def delta(cls, n: int, t: int) -> "SetFunction":
        vals = [0] * (1 << n)
        vals[t] = 1
        return cls(n, tuple(vals))

    @classmethod
    def rank_function(cls, m: Matroid) -> "SetFunction":
        return cls(m.n, tuple(m.rank(s) for s in range(1 << m.n)))

    @classmethod
    def modular(cls, weights: Sequence[int]) -> "SetFunction":
        n = len(weights)
        return cls.from_function(n, lambda s: sum(weights[i - 1] for i in elements_of(s)))

    def __add__(self, other: "SetFunction") -> "SetFunction":
        if self.n != other.n:
            raise ValueError("size mismatch")
        return SetFunction(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "SetFunction") -> "SetFunction":
        if self.n != other.n:
            raise ValueError("size mismatch")
        return SetFunction(self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "SetFunction":
        return SetFunction(self.n, tuple(-a for a in self.values))

    def scale(self, k: int) -> "SetFunction":
        """Dilation k*P: multiply every value by k."""
        return SetFunction(self.n, tuple(k * a for a in self.values))

    def to_json(self) -> dict:
        z = {}
        for s in range(1, 1 << self.n):
            z[",".join(map(str, elements_of(s)))] = self.values[s]
        return {"n": self.n, "z": z}

    @classmethod
    def from_json(cls, data: dict) -> "SetFunction":
        n = int(data["n"])
        vals = [0] * (1 << n)
        for key, v in data["z"].items():
            key = key.strip()
            if not key:
                if int(v) != 0:
                    raise ValueError("z(empty set) must be 0")
                continue
            elems = [int(e) for e in key.split(",")]
            if any(not 1 <= e <= n for e in elems):
                raise ValueError(f"subset {key!r} is not inside [{n}]")
            vals[mask_of(elems)] = int(v)
        return cls(n, tuple(vals))


def _prefix_masks(sigma: Sequence[int]) -> list[int]:
    masks = [0]
    for e in sigma:
        masks.append(masks[-1] | 1 << (e - 1))
    return masks


def vertex(z: SetFunction, sigma: Sequence[int]) -> tuple[int, ...]:
    """Greedy vertex: coordinate sigma(i) gets z(S_i) - z(S_{i-1})."""
    v = [0] * z.n
    masks = _prefix_masks(sigma)
    for i, e in enumerate(sigma):
        v[e - 1] = z.values[masks[i + 1]] - z.values[masks[i]]
    return tuple(v)


def is_submodular(z: SetFunction) -> tuple[int, int] | None:
    """None if submodular, else a violating pair (A, B) of masks."""
    vals = z.values
    size = 1 << z.n
    for a in range(size):
        for b in range(a + 1, size):
            if vals[a] + vals[b] < vals[a | b] + vals[a & b]:
                return a, b
    return None


def slide_facet(z: SetFunction, t: int) -> SetFunction:
    if not 0 < t < z.full:
        raise ValueError("t must be a nonempty proper subset")
    vals = list(z.values)
    vals[t] -= 1
    return SetFunction(z.n, tuple(vals))


def _compress(mask: int, labels: Sequence[int]) -> int:
    out = 0
    for new, old in enumerate(labels):
        if mask >> (old - 1) & 1:
            out |= 1 << new
    return out


def _expand(mask: int, labels: Sequence[int]) -> int:
    out = 0
    for new, old in enumerate(labels):
        if mask >> new & 1:
            out |= 1 << (old - 1)
    return out


def split(z: SetFunction, t: int):
    """(z|T, z/T, labels_T, labels_Tc): z|T(S) = z(S), z/T(S) = z(S u T) - z(T)."""
    if not 0 < t < z.full:
        raise ValueError("t must be a nonempty proper subset")
    lt = elements_of(t)
    lc = elements_of(z.full & ~t)
    rest = SetFunction(len(lt), tuple(z.values[_expand(s, lt)] for s in range(1 << len(lt))))
    con = SetFunction(
        len(lc), tuple(z.values[_expand(s, lc) | t] - z.values[t] for s in range(1 << len(lc)))
    )
    return rest, con, lt, lc


def coordinate_box(z: SetFunction) -> list[tuple[int, int]]:
    full = z.full
    box = []
    for i in range(z.n):
        bit = 1 << i
        box.append((z.values[full] - z.values[full & ~bit], z.values[bit]))
    return box


def _points(z: SetFunction, strict: bool):
    n = z.n
    vals = z.values
    full = z.full
    box = coordinate_box(z)
    for lo, hi in box:
        if lo > hi:
            raise InfeasibleBox(f"empty coordinate interval [{lo}, {hi}]")
    if n == 0:
        yield ()
        return
    total = vals[full]
    lo_last, hi_last = box[-1]
    size = 1 << n
    for head in product(*(range(lo, hi + 1) for lo, hi in box[:-1])):
        last = total - sum(head)
        if not lo_last <= last <= hi_last:
            continue
        x = head + (last,)
        sums = [0] * size
        ok = True
        for s in range(1, size):
            low = s & -s
            sums[s] = sums[s ^ low] + x[low.bit_length() - 1]
            if s == full:
                continue
            if sums[s] > vals[s] or (strict and sums[s] == vals[s]):
                ok = False
                break
        if ok:
            yield x


def lattice_points(z: SetFunction) -> list[tuple[int, ...]]:
    return list(_points(z, strict=False))


def enumerate_lattice_points(z: SetFunction) -> LaurentPoly:
    """q(P) by scanning the coordinate box and filtering by every inequality."""
    return LaurentPoly(z.n, {x: 1 for x in _points(z, strict=False)})


def interior_lattice_points(z: SetFunction) -> LaurentPoly:
    """Points strict in every proper inequality, on the hyperplane sum = z([n])."""
    return LaurentPoly(z.n, {x: 1 for x in _points(z, strict=True)})


def ehrhart_values(z: SetFunction, kmax: int) -> list[int]:
    return [len(enumerate_lattice_points(z.scale(k))) for k in range(kmax + 1)]


def vertices(z: SetFunction) -> list[tuple[int, ...]]:
    from .perms import all_perms

    return sorted({vertex(z, s) for s in all_perms(range(1, z.n + 1))})


def dimension(z: SetFunction) -> int:
    """Dimension of the convex hull of the greedy vertices."""
    from sympy import Matrix

    vs = vertices(z)
    if len(vs) <= 1:
        return 0
    base = vs[0]
    rows = [[a - b for a, b in zip(v, base)] for v in vs[1:]]
    return Matrix(rows).rank()


def finite_differences(values: Sequence[int]) -> list[list[int]]:
    rows = [list(values)]
    while len(rows[-1]) > 1:
        r = rows[-1]
        rows.append([b - a for a, b in zip(r, r[1:])])
    return rows


def polynomial_degree(values: Sequence[int]) -> int | None:
    """Degree of the polynomial through values at 0..len-1, or None if the
    table is too short to certify it (the top difference is nonzero)."""
    rows = finite_differences(values)
    nonzero = [j for j, r in enumerate(rows) if any(r)]
    if not nonzero:
        return 0
    d = max(nonzero)
    if d == len(rows) - 1:
        return None
    return d


def newton_eval(values: Sequence[int], t: int):
    """Value at integer t of the interpolating polynomial through values at 0..len-1."""
    from fractions import Fraction

    def binom(x: int, j: int):
        num = Fraction(1)
        for i in range(j):
            num *= Fraction(x - i, i + 1)
        return num

    total = Fraction(0)
    for j, row in enumerate(finite_differences(values)):
        total += row[0] * binom(t, j)
    return total


def ehrhart_reciprocity(z: SetFunction, kmax: int | None = None) -> tuple[int, int]:
    """(E_P(-1), (-1)^(n-1) |P interior|) for a GP of dimension n-1."""
    if is_submodular(z) is not None:
        raise Unsupported("set function is not submodular")
    d = dimension(z)
    if d != z.n - 1:
        raise Unsupported(f"polytope has dimension {d}, need {z.n - 1}")
    kmax = z.n + 2 if kmax is None else kmax
    values = ehrhart_values(z, kmax)
    if polynomial_degree(values) is None:
        raise Unsupported("kmax too small to determine the Ehrhart polynomial")
    e_minus_one = newton_eval(values, -1)
    interior = len(interior_lattice_points(z))
    return int(e_minus_one), (-1) ** (z.n - 1) * interior
