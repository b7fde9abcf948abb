"""Sparse multivariate Laurent polynomials with integer coefficients.

Polynomials are immutable maps from exponent tuples to nonzero ``int``
coefficients.  Iteration order is descending lexicographic on exponents.
"""
from __future__ import annotations

import re
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Exponent = tuple[int, ...]


class NotDivisible(ArithmeticError):
    """Raised when a binomial x_a - x_b does not divide a polynomial."""


class ParseError(ValueError):
    pass


class LaurentPoly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, int] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                if c:
                    clean[tuple(e)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, int]) -> "LaurentPoly":
        # terms must already be clean (no zeros, correct lengths)
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence[int], coef: int = 1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls._raw(len(exps), {exps: coef} if coef else {})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        """The monomial x_i**power (i is 1-indexed)."""
        e = [0] * nvars
        e[i - 1] = power
        return cls._raw(nvars, {tuple(e): 1})

    # basic protocol
    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        """Terms in canonical (descending lexicographic) order."""
        for e in sorted(self._terms, reverse=True):
            yield e, self._terms[e]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1

    def leading_exponent(self) -> Exponent:
        return max(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == LaurentPoly.constant(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # ring operations
    def _check(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"ambient size mismatch: {self.nvars} != {other.nvars}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.constant(self.nvars, other)
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) == 1:
            (e, c), = other._terms.items()
            return self.shift(e, c)
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            return other.shift(e, c)
        out: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("negative powers only for unit monomials")
            (e, c), = self._terms.items()
            return LaurentPoly._raw(self.nvars, {tuple(k * a for a in e): c ** (-k)})
        result = LaurentPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Sequence[int], coef: int = 1) -> "LaurentPoly":
        """Multiply by the single term coef * x**exps."""
        if not coef:
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): c * coef for e, c in self._terms.items()},
        )

    def times_var(self, i: int, power: int = 1) -> "LaurentPoly":
        """Multiply by x_i**power (1-indexed)."""
        k = i - 1
        return LaurentPoly._raw(
            self.nvars,
            {e[:k] + (e[k] + power,) + e[k + 1:]: c for e, c in self._terms.items()},
        )

    # substitutions and evaluation
    def dual(self) -> "LaurentPoly":
        """Invert every variable."""
        return LaurentPoly._raw(self.nvars, {tuple(-a for a in e): c for e, c in self._terms.items()})

    def substitute(self, a: int, b: int) -> "LaurentPoly":
        """Set x_a := x_b."""
        i, j = a - 1, b - 1
        out: dict[Exponent, int] = defaultdict(int)
        for e, c in self._terms.items():
            f = list(e)
            f[j] += f[i]
            f[i] = 0
            out[tuple(f)] += c
        return LaurentPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    def set_ones(self, variables: Iterable[int]) -> "LaurentPoly":
        """Specialize the given (1-indexed) variables to 1."""
        idx = [v - 1 for v in variables]
        out: dict[Exponent, int] = defaultdict(int)
        for e, c in self._terms.items():
            f = list(e)
            for i in idx:
                f[i] = 0
            out[tuple(f)] += c
        return LaurentPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    def reindex(self, labels: Sequence[int], nvars: int) -> "LaurentPoly":
        """Move variable i+1 of self to variable labels[i] of an nvars-variable ring.

        Variables of self not covered by ``labels`` must not occur.
        """
        out: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            f = [0] * nvars
            for i, a in enumerate(e):
                if a:
                    if i >= len(labels):
                        raise ValueError(f"variable x{i + 1} has no target label")
                    f[labels[i] - 1] += a
            out[tuple(f)] = out.get(tuple(f), 0) + c
        return LaurentPoly._raw(nvars, {e: c for e, c in out.items() if c})

    def eval(self, point: Sequence) -> Fraction:
        """Exact value at a point of nonzero rationals."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for v, a in zip(pt, e):
                if a:
                    if a < 0 and v == 0:
                        raise ZeroDivisionError("negative exponent at a zero coordinate")
                    term *= v ** a
            total += term
        return total

    def specialize_ones(self) -> int:
        return sum(self._terms.values())

    def degree_in(self, i: int) -> tuple[int, int]:
        """(min, max) exponent of x_i; (0, 0) for the zero polynomial."""
        if not self._terms:
            return (0, 0)
        vals = [e[i - 1] for e in self._terms]
        return min(vals), max(vals)

    # division by x_a - x_b
    def divide_binomial(self, a: int, b: int) -> "LaurentPoly":
        return divide_binomial(self, a, b)

    def is_divisible_by_binomial(self, a: int, b: int) -> bool:
        return self.substitute(a, b).is_zero()

    # text
    def to_text(self, names: Sequence[str] | None = None) -> str:
        return to_text(self, names)


def divide_binomial(p: LaurentPoly, a: int, b: int) -> LaurentPoly:
    """Exact quotient p / (x_a - x_b).

    Synthetic division in descending powers of x_a: with p = sum P_e x_a^e,
    the quotient coefficients satisfy Q_{e-1} = P_e + x_b Q_e, and the last
    carry must cancel P_min.  The result is checked by back-multiplication.
    """
    if a == b:
        raise ValueError("binomial x_a - x_b needs a != b")
    if p.is_zero():
        return p
    n = p.nvars
    ia, ib = a - 1, b - 1
    groups: dict[int, dict[Exponent, int]] = defaultdict(dict)
    for e, c in p._terms.items():
        groups[e[ia]][e[:ia] + (0,) + e[ia + 1:]] = c
    top = max(groups)
    bottom = min(groups)
    quotient: dict[Exponent, int] = {}
    carry: dict[Exponent, int] = {}  # Q_e, exponents with the a-slot zeroed
    for e in range(top, bottom, -1):
        # Q_{e-1} = P_e + x_b * Q_e
        nxt = dict(groups.get(e, {}))
        for f, c in carry.items():
            g = f[:ib] + (f[ib] + 1,) + f[ib + 1:]
            s = nxt.get(g, 0) + c
            if s:
                nxt[g] = s
            else:
                nxt.pop(g, None)
        carry = nxt
        for f, c in carry.items():
            quotient[f[:ia] + (e - 1,) + f[ia + 1:]] = c
    # remainder: P_bottom + x_b * Q_bottom must vanish
    rem = dict(groups.get(bottom, {}))
    for f, c in carry.items():
        g = f[:ib] + (f[ib] + 1,) + f[ib + 1:]
        s = rem.get(g, 0) + c
        if s:
            rem[g] = s
        else:
            rem.pop(g, None)
    if rem:
        raise NotDivisible(f"x{a} - x{b} does not divide {p.to_text()}")
    q = LaurentPoly._raw(n, quotient)
    if q * (LaurentPoly.var(n, a) - LaurentPoly.var(n, b)) != p:
        raise ArithmeticError("binomial division failed back-multiplication check")
    return q


def default_names(nvars: int) -> list[str]:
    return [f"x{i}" for i in range(1, nvars + 1)]


def to_text(p: LaurentPoly, names: Sequence[str] | None = None) -> str:
    names = list(names) if names is not None else default_names(p.nvars)
    if len(names) != p.nvars:
        raise ValueError("need one name per variable")
    if p.is_zero():
        return "0"
    out = []
    for k, (e, c) in enumerate(p.items()):
        factors = []
        for name, a in zip(names, e):
            if a == 1:
                factors.append(name)
            elif a:
                factors.append(f"{name}^{a}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|([+-]))")


def parse(text: str, nvars: int | None = None, names: Sequence[str] | None = None) -> LaurentPoly:
    """Parse the canonical text grammar back into a polynomial.

    Accepts ``term ((+|-) term)*`` with term = ``[coef *] var^exp (* var^exp)*``.
    Variable names default to x1..xn.
    """
    if names is None:
        if nvars is None:
            raise ValueError("need nvars or names")
        names = default_names(nvars)
    index = {name: i for i, name in enumerate(names)}
    nvars = len(names)
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        kinds = ("int", "name", "^", "*", "sign")
        for kind, val in zip(kinds, m.groups()):
            if val is not None:
                tokens.append((kind, val))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial text")

    terms: dict[Exponent, int] = defaultdict(int)
    i = 0

    def peek(k=0):
        return tokens[i + k] if i + k < len(tokens) else (None, None)

    sign = 1
    if peek()[0] == "sign":
        sign = -1 if peek()[1] == "-" else 1
        i += 1
    while True:
        coef = 1
        exps = [0] * nvars
        seen_factor = False
        while True:
            kind, val = peek()
            if kind == "int":
                coef *= int(val)
                i += 1
            elif kind == "name":
                if val not in index:
                    raise ParseError(f"unknown variable {val!r}")
                i += 1
                power = 1
                if peek()[0] == "^":
                    i += 1
                    neg = False
                    if peek()[0] == "sign":
                        neg = peek()[1] == "-"
                        i += 1
                    k2, v2 = peek()
                    if k2 != "int":
                        raise ParseError("expected integer exponent")
                    i += 1
                    power = -int(v2) if neg else int(v2)
                exps[index[val]] += power
            else:
                raise ParseError(f"expected a factor, got {val!r}")
            seen_factor = True
            if peek()[0] == "*":
                i += 1
                continue
            break
        if not seen_factor:
            raise ParseError("empty term")
        terms[tuple(exps)] += sign * coef
        kind, val = peek()
        if kind is None:
            break
        if kind != "sign":
            raise ParseError(f"expected + or -, got {val!r}")
        sign = -1 if val == "-" else 1
        i += 1
    return LaurentPoly(nvars, {e: c for e, c in terms.items() if c})


def specialize_ones(p: LaurentPoly) -> int:
    return p.specialize_ones()


def dual(p: LaurentPoly) -> LaurentPoly:
    return p.dual()
