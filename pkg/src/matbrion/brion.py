"""Matroid-twisted Brion sums Q_M(f).

``q_matroid`` computes Q_M(f) as a Laurent polynomial by eliminating the
top element one level at a time.  For each mu in S_{n-1} the n
permutations mu_1..mu_n (n inserted at position i) are collapsed into one
entry f_mu using the divided differences g_{mu,j}, the telescoped sum
h_mu and, when n is neither a loop nor a coloop, the greedy threshold
k_M(mu).  ``rational_sum_eval`` is the independent oracle: it evaluates
the defining sum of rational functions exactly at a rational point.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .laurent import LaurentPoly, NotDivisible
from .matroid import Matroid, elements_of
from .perms import Perm, all_perms, insert_at
from .plaur import (GluingViolation, PiecewiseLaurent, family_slide, family_split, omega,
                    validate_family)


class NotApplicable(ValueError):
    pass


class PoleHit(ZeroDivisionError):
    pass


class EliminationError(RuntimeError):
    """Output of an elimination step failed gluing: an implementation bug."""


@dataclass
class EliminationStep:
    mu: Perm
    g: list[LaurentPoly]
    h: LaurentPoly
    k: int | None
    case: str  # "loop", "coloop" or "neither"
    f_out: LaurentPoly


@dataclass
class QReport:
    result: LaurentPoly
    trace: list[list[EliminationStep]] = field(default_factory=list)
    elimination_order: list[int] = field(default_factory=list)


def worker_count(threads: int | None = None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("BRION_THREADS")
    return max(1, int(env)) if env else 1


def k_threshold(m: Matroid, mu: Sequence[int]) -> int:
    """Largest i with rk(mu(1..i-1)) < rk(mu(1..i-1) + n)."""
    n = m.n
    if m.is_loop(n) or m.is_coloop(n):
        raise NotApplicable(f"element {n} is a loop or coloop")
    top = 1 << (n - 1)
    best = 0
    prefix = 0
    for i in range(1, n):
        if m.rank(prefix) < m.rank(prefix | top):
            best = i
        prefix |= 1 << (mu[i - 1] - 1)
    return best


def _case(m: Matroid) -> str:
    if m.is_loop(m.n):
        return "loop"
    if m.is_coloop(m.n):
        return "coloop"
    return "neither"


def _eliminate_one(f: PiecewiseLaurent, m: Matroid, mu: Perm, case: str,
                   keep: bool) -> tuple[LaurentPoly, EliminationStep | None]:
    n = m.n
    N = f.nvars
    xn = LaurentPoly.var(N, n)
    polys = [f[insert_at(mu, n, i)] for i in range(1, n + 1)]
    g = []
    for j in range(1, n):
        diff = polys[j - 1] - polys[j]
        # divisor is x_n - x_mu(j)
        g.append(diff.divide_binomial(n, mu[j - 1]))
    total = LaurentPoly.zero(N)
    for gj in g:
        total = total + gj
    h = total.times_var(n) + polys[-1]
    k = None
    if case == "coloop":
        out = h
    elif case == "loop":
        out = h - h.times_var(n)
    else:
        k = k_threshold(m, mu)
        acc = LaurentPoly.zero(N)
        head = LaurentPoly.zero(N)
        for j in range(1, k + 1):
            head = head + g[j - 1]
        acc = head.times_var(mu[k - 1])
        for j in range(k + 1, n):
            acc = acc + g[j - 1].times_var(mu[j - 1])
        out = h - acc.times_var(n)
        if keep:
            # equivalent rearranged form; guards the index bookkeeping above
            fk = polys[k - 1]
            left = LaurentPoly.zero(N)
            for j in range(1, k):
                left = left + g[j - 1]
            right = LaurentPoly.zero(N)
            for j in range(k, n):
                right = right + g[j - 1].times_var(mu[j - 1])
            one = LaurentPoly.constant(N, 1)
            alt = (fk + (one - LaurentPoly.var(N, mu[k - 1])) * left.times_var(n)
                   + (one - xn) * right)
            if alt != out:
                raise EliminationError(f"cross-check of the elimination formula failed at mu={mu}")
    step = EliminationStep(mu, g, h, k, case, out) if keep else None
    return out, step


def eliminate_top(f: PiecewiseLaurent, m: Matroid, trace: bool = False,
                  threads: int | None = None, check: bool = True):
    """Collapse the family over S_n to one over S_{n-1}; variable x_n stays.

    Returns (f', steps) where steps is empty unless ``trace`` is set.
    """
    if f.n != m.n:
        raise ValueError("family and matroid live on different ground sets")
    n = m.n
    case = _case(m)
    mus = all_perms(range(1, n))
    workers = worker_count(threads)

    def run(mu):
        return _eliminate_one(f, m, mu, case, trace)

    if workers > 1 and len(mus) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, mus))
    else:
        results = [run(mu) for mu in mus]
    out = PiecewiseLaurent(n - 1, [r[0] for r in results], f.nvars, mus)
    if check:
        try:
            validate_family(out)
        except GluingViolation as exc:
            raise EliminationError(f"eliminated family fails gluing: {exc}") from exc
    steps = [r[1] for r in results] if trace else []
    return out, steps


def _q_largest_first(f: PiecewiseLaurent, m: Matroid, trace: bool, threads: int | None,
                     check: bool) -> QReport:
    report = QReport(LaurentPoly.zero(f.nvars))
    while m.n > 0:
        report.elimination_order.append(m.n)
        f, steps = eliminate_top(f, m, trace=trace, threads=threads, check=check)
        if trace:
            report.trace.append(steps)
        m = m.delete_top()
    report.result = f.polys[0]
    return report


def q_matroid(f: PiecewiseLaurent, m: Matroid, trace: bool = False,
              threads: int | None = None, order: Sequence[int] | None = None,
              check: bool = True) -> QReport:
    """Q_M(f) as a Laurent polynomial in x_1..x_n.

    ``order`` lists the elements in elimination order (default n, n-1, ..., 1);
    other orders are handled by relabeling.
    """
    if f.n != m.n or f.nvars != f.n:
        raise ValueError("family and matroid must share the ground set [n]")
    n = m.n
    if order is None or list(order) == list(range(n, 0, -1)):
        return _q_largest_first(f, m, trace, threads, check)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError("order must list every element once")
    # element order[j] becomes label n - j, so it is eliminated j-th
    rho = [0] * n
    for j, e in enumerate(order):
        rho[e - 1] = n - j
    inverse = [0] * n
    for e, r in enumerate(rho, start=1):
        inverse[r - 1] = e
    report = _q_largest_first(f.relabel(rho), m.relabel(rho), trace, threads, check)
    report.result = report.result.reindex(inverse, n)
    report.elimination_order = list(order)
    return report


def q_base_case(m: Matroid) -> LaurentPoly:
    """prod over loops i of (1 - x_i): the value of Q_M on the constant family 1."""
    out = LaurentPoly.constant(m.n, 1)
    for i in elements_of(m.loops):
        out = out - out.times_var(i)
    return out


# -- evaluation oracle ------------------------------------------------------

def _check_point(pt: Sequence) -> list[Fraction]:
    pt = [Fraction(v) for v in pt]
    if any(v == 0 for v in pt):
        raise PoleHit("evaluation point has a zero coordinate")
    if len(set(pt)) != len(pt):
        raise PoleHit("evaluation point has repeated coordinates")
    return pt


def cone_value(sigma: Sequence[int], pt: Sequence[Fraction]) -> Fraction:
    """Q(C_sigma) = 1 / prod_i (1 - x_sigma(i+1) / x_sigma(i)) at pt."""
    denom = Fraction(1)
    for a, b in zip(sigma, sigma[1:]):
        denom *= 1 - pt[b - 1] / pt[a - 1]
    if denom == 0:
        raise PoleHit(f"pole of Q(C_sigma) for sigma={sigma}")
    return 1 / denom


def rational_sum_eval(f: PiecewiseLaurent, m: Matroid, pt: Sequence) -> Fraction:
    """Exact value of sum_sigma f_sigma Q(C_sigma) prod_{i not in B(sigma)} (1 - x_i)."""
    if f.n != m.n:
        raise ValueError("family and matroid live on different ground sets")
    pt = _check_point(pt)
    if len(pt) != f.nvars:
        raise ValueError("point has wrong length")
    one_minus = [1 - v for v in pt]
    total = Fraction(0)
    for s, p in f.items():
        if p.is_zero():
            continue
        b = m.greedy_basis(s)
        factor = Fraction(1)
        for i in range(m.n):
            if not b >> i & 1:
                factor *= one_minus[i]
        if factor == 0:
            continue
        total += p.eval(pt) * cone_value(s, pt) * factor
    return total


def cone_partial_sum_eval(mu: Sequence[int], i: int, pt: Sequence) -> tuple[Fraction, Fraction]:
    """Partial sums Q(C_mu_1)+..+Q(C_mu_i) and Q(C_mu_{i+1})+..+Q(C_mu_n).

    Both are compared with their closed forms before being returned.
    """
    mu = tuple(mu)
    n = len(mu) + 1
    if not 1 <= i <= n - 1:
        raise ValueError(f"i must lie in 1..{n - 1}")
    pt = _check_point(pt)
    if len(pt) < n:
        raise ValueError("point has too few coordinates")
    raw = [cone_value(insert_at(mu, n, j), pt) for j in range(1, n + 1)]
    lower = sum(raw[:i], Fraction(0))
    upper = sum(raw[i:], Fraction(0))
    base = Fraction(1)
    for a, b in zip(mu, mu[1:]):
        base *= 1 - pt[b - 1] / pt[a - 1]
    ratio = pt[n - 1] / pt[mu[i - 1] - 1]
    closed_lower = -ratio / (base * (1 - ratio))
    closed_upper = 1 / (base * (1 - ratio))
    if lower != closed_lower or upper != closed_upper:
        raise ArithmeticError("cone partial sums disagree with their closed forms")
    return lower, upper


_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
           79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151]


def prime_points(n: int, count: int, seed: int = 0) -> list[tuple[int, ...]]:
    """Deterministic pole-avoiding points made of distinct small primes."""
    import random

    rng = random.Random(seed)
    points = []
    for j in range(count):
        window = _PRIMES[j % (len(_PRIMES) - n):][:n]
        window = list(window)
        if j:
            rng.shuffle(window)
        points.append(tuple(window))
    return points


def oracle_agrees(f: PiecewiseLaurent, m: Matroid, result: LaurentPoly,
                  points: Sequence[Sequence]) -> bool:
    return all(rational_sum_eval(f, m, pt) == result.eval(pt) for pt in points)


# -- identities -------------------------------------------------------------------

def reciprocity_pair(f: PiecewiseLaurent, m: Matroid,
                     threads: int | None = None) -> tuple[LaurentPoly, LaurentPoly]:
    """(Q_M(f^v), (-1)^(rk M - 1) Q_M(f * omega_M)^v)."""
    lhs = q_matroid(f.dual(), m, threads=threads).result
    twisted = q_matroid(f * omega(m), m, threads=threads).result
    sign = -1 if (m.rk - 1) % 2 else 1
    return lhs, twisted.dual() * sign


@dataclass
class RecursionTerms:
    q: LaurentPoly
    q_slid: LaurentPoly
    q_restrict: LaurentPoly
    q_contract: LaurentPoly

    @property
    def holds(self) -> bool:
        return self.q == self.q_slid + self.q_restrict * self.q_contract


def recursion_terms(f: PiecewiseLaurent, m: Matroid, t: int, threads: int | None = None,
                    q: LaurentPoly | None = None) -> RecursionTerms:
    """Q_M(f), Q_M(f_T), Q_{M|T}(f|T) and Q_{M/T}(f/T), all in x_1..x_n."""
    n = m.n
    if q is None:
        q = q_matroid(f, m, threads=threads).result
    slid = q_matroid(family_slide(f, t), m, threads=threads).result
    parts = family_split(f, t)
    mr = m.restrict(t)
    mc = m.contract(t)
    qr = q_matroid(parts.restrict, mr.matroid, threads=threads).result.reindex(parts.t_labels, n)
    qc = q_matroid(parts.contract, mc.matroid, threads=threads).result.reindex(parts.c_labels, n)
    return RecursionTerms(q, slid, qr, qc)
