"""Command-line front end.

Inputs are JSON files (matroid, set function, piecewise family).  Every
input is validated before any computation.  Exit codes: 0 success, 1 a
check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Any

from . import brion, euler, polytope
from .laurent import LaurentPoly, ParseError
from .matroid import Matroid, NotAMatroid, elements_of, mask_of
from .perms import format_perm
from .plaur import GluingViolation, PiecewiseLaurent, family_split, from_delta, validate_family
from .polytope import SetFunction

COMMANDS = ("validate", "qm", "lattice", "brion-check", "recursion-check", "recip-check",
            "euler", "axiom-check", "hstar", "serre-check")


class ValidationError(ValueError):
    def __init__(self, message: str, location: str = "", witness: Any = None):
        super().__init__(message)
        self.location = location
        self.witness = witness


class InputParseError(ValueError):
    def __init__(self, message: str, location: str = ""):
        super().__init__(message)
        self.location = location


@dataclass
class Check:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    result: Any = None
    checks: list[Check] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, name: str, ok: bool, **detail) -> Check:
        c = Check(name, bool(ok), detail)
        self.checks.append(c)
        self.lines.append(f"{'OK' if ok else 'FAIL'}: {name}")
        for key, value in detail.items():
            self.lines.append(f"  {key} = {value}")
        return c


def format_output(report: Report, fmt: str = "text") -> str:
    if fmt == "json":
        payload = {
            "command": report.command,
            "inputs": report.inputs,
            "result": report.result,
            "checks": [{"name": c.name, "ok": c.ok, **c.detail} for c in report.checks],
        }
        return json.dumps(payload, sort_keys=True, indent=2)
    return "\n".join(report.lines) if report.lines else "OK"


# -- input handling ---------------------------------------------------------

def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputParseError(f"cannot read file: {exc.strerror}", path) from None
    except json.JSONDecodeError as exc:
        raise InputParseError(f"malformed JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from None
    if not isinstance(data, dict):
        raise InputParseError("top-level JSON value must be an object", path)
    return data


def load_matroid(path: str) -> Matroid:
    data = _load_json(path)
    try:
        return Matroid.from_json(data)
    except NotAMatroid as exc:
        raise ValidationError(str(exc), path, exc.witness) from None
    except (KeyError, TypeError, ValueError) as exc:
        raise InputParseError(f"bad matroid schema: {exc}", path) from None


def load_set_function(path: str, submodular: bool) -> SetFunction:
    data = _load_json(path)
    try:
        z = SetFunction.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputParseError(f"bad set-function schema: {exc}", path) from None
    if submodular:
        bad = polytope.is_submodular(z)
        if bad is not None:
            a, b = bad
            raise ValidationError("set function is not submodular", path,
                                  [list(elements_of(a)), list(elements_of(b))])
    return z


def load_family(path: str) -> PiecewiseLaurent:
    data = _load_json(path)
    try:
        f = PiecewiseLaurent.from_json(data)
    except ParseError as exc:
        raise InputParseError(f"bad polynomial text: {exc}", path) from None
    except (KeyError, TypeError, ValueError) as exc:
        raise InputParseError(f"bad family schema: {exc}", path) from None
    try:
        validate_family(f)
    except GluingViolation as exc:
        raise ValidationError(str(exc), path, [format_perm(exc.sigma), exc.i]) from None
    return f


def parse_subset(text: str, n: int) -> int:
    try:
        elems = [int(e) for e in text.split(",")]
    except ValueError:
        raise InputParseError(f"subset {text!r} must be comma-joined integers", "--subset") from None
    if len(set(elems)) != len(elems) or any(not 1 <= e <= n for e in elems):
        raise ValidationError(f"subset {text!r} is not a set of elements of [{n}]", "--subset")
    t = mask_of(elems)
    if t == (1 << n) - 1:
        raise ValidationError("subset must be proper", "--subset")
    return t


@dataclass
class Inputs:
    matroid: Matroid | None = None
    z: SetFunction | None = None  # from --polytope (submodular) or --delta
    family: PiecewiseLaurent | None = None
    source: str | None = None

    def record(self) -> dict:
        out = {}
        if self.matroid is not None:
            out["matroid"] = self.matroid.to_json()
        if self.source in ("polytope", "delta"):
            out[self.source] = self.z.to_json()
        if self.source == "family":
            out["family"] = self.family.to_json()
        return out


def parse_inputs(args) -> Inputs:
    inp = Inputs()
    if args.matroid:
        inp.matroid = load_matroid(args.matroid)
    given = [k for k in ("polytope", "delta", "family") if getattr(args, k)]
    if len(given) > 1:
        raise ValidationError("give at most one of --polytope, --delta, --family", "arguments")
    if given:
        inp.source = given[0]
        if inp.source == "family":
            inp.family = load_family(args.family)
        else:
            inp.z = load_set_function(getattr(args, inp.source), submodular=inp.source == "polytope")
            inp.family = from_delta(inp.z)
    if inp.matroid is not None and inp.family is not None and inp.matroid.n != inp.family.n:
        raise ValidationError(
            f"matroid has n={inp.matroid.n} but the family has n={inp.family.n}", "arguments")
    return inp


def _need(inp: Inputs, *what: str) -> None:
    for w in what:
        if w == "matroid" and inp.matroid is None:
            raise ValidationError("--matroid is required", "arguments")
        if w == "family" and inp.family is None:
            raise ValidationError("one of --polytope, --delta, --family is required", "arguments")
        if w == "z" and inp.z is None:
            raise ValidationError("one of --polytope, --delta is required", "arguments")
        if w == "polytope" and inp.source != "polytope":
            raise ValidationError("--polytope is required", "arguments")
        if w == "loopless" and inp.matroid.loops:
            raise ValidationError("matroid must be loopless", "--matroid",
                                  list(elements_of(inp.matroid.loops)))
        if w == "monomial" and not inp.family.is_monomial_family():
            raise ValidationError("family must be piecewise monomial", "--family")


# -- commands ---------------------------------------------------------------

def _poly(p: LaurentPoly) -> str:
    return p.to_text()


def _oracle_checks(rep: Report, f, m, result, args) -> None:
    if args.eval_points <= 0:
        return
    pts = brion.prime_points(m.n, args.eval_points, args.seed)
    bad = [list(pt) for pt in pts if brion.rational_sum_eval(f, m, pt) != result.eval(pt)]
    rep.check("recursion matches rational-function oracle", not bad,
              points=len(pts), mismatches=len(bad))


def cmd_validate(args, inp: Inputs, rep: Report) -> None:
    if inp.matroid is None and inp.family is None:
        raise ValidationError("nothing to validate", "arguments")
    if inp.matroid is not None:
        m = inp.matroid
        rep.check("matroid satisfies basis exchange", True, n=m.n, rank=m.rk,
                  loops=",".join(map(str, elements_of(m.loops))),
                  coloops=",".join(map(str, elements_of(m.coloops))))
    if inp.source == "polytope":
        rep.check("set function is submodular", True, n=inp.z.n)
    if inp.family is not None:
        rep.check("family satisfies gluing", True, n=inp.family.n)


def cmd_qm(args, inp: Inputs, rep: Report) -> None:
    _need(inp, "matroid", "family")
    qr = brion.q_matroid(inp.family, inp.matroid, trace=args.trace, threads=args.threads)
    rep.result = _poly(qr.result)
    rep.lines.append(rep.result)
    if args.trace:
        steps = []
        for level in qr.trace:
            for st in level:
                row = {"level": len(st.mu) + 1, "mu": format_perm(st.mu), "case": st.case,
                       "k": st.k, "h": _poly(st.h), "f": _poly(st.f_out)}
                steps.append(row)
                rep.lines.append(f"  n={row['level']} mu=({row['mu']}) case={st.case} "
                                 f"k={st.k} h={row['h']} f={row['f']}")
        rep.result = {"q": _poly(qr.result), "trace": steps}
    _oracle_checks(rep, inp.family, inp.matroid, qr.result, args)


def cmd_lattice(args, inp: Inputs, rep: Report) -> None:
    _need(inp, "polytope")
    q = polytope.enumerate_lattice_points(inp.z)
    res = {"count": len(q), "q": _poly(q)}
    rep.lines.append(_poly(q))
    rep.lines.append(f"points: {len(q)}")
    if args.kmax is not None:
        vals = polytope.ehrhart_values(inp.z, args.kmax)
        res["ehrhart"] = vals
        rep.lines.append("ehrhart: " + " ".join(map(str, vals)))
    rep.result = res


def cmd_brion_check(args, inp: Inputs, rep: Report) -> None:
    _need(inp, "polytope")
    n = inp.z.n
    m = Matroid.boolean(n)
    q = brion.q_matroid(inp.family, m, threads=args.threads).result
    e = polytope.enumerate_lattice_points(inp.z)
    rep.check("Q_Boolean(f_P) = q(P)", q == e, Q=_poly(q), q=_poly(e))
    _oracle_checks(rep, inp.family, m, q, args)


def cmd_recursion_check(args, inp: Inputs, rep: Report) -> None:
    _need(inp, "matroid", "family", "monomial")
    m, f = inp.matroid, inp.family
    if args.subset:
        subsets = [parse_subset(args.subset, m.n)]
    else:
        subsets = list(range(1, (1 << m.n) - 1))
    q = brion.q_matroid(f, m, threads=args.threads).result
    rows = []
    for t in subsets:
        r = brion.recursion_terms(f, m, t, threads=args.threads, q=q)
        label = ",".join(map(str, elements_of(t)))
        rows.append({"T": label, "ok": r.holds, "Q": _poly(r.q), "Q_T": _poly(r.q_slid),
                     "Q|T": _poly(r.q_restrict), "Q/T": _poly(r.q_contract)})
        rep.checks.append(Check(f"Q = Q_T + Q|T * Q/T for T={{{label}}}", r.holds, {
            "Q": _poly(r.q), "Q_T": _poly(r.q_slid), "Q|T": _poly(r.q_restrict),
            "Q/T": _poly(r.q_contract)}))
        rep.lines.append(f"{'OK' if r.holds else 'FAIL'}: Q = Q_T + Q|T * Q/T")
        rep.lines.append(f"  T = {{{label}}}")
        for key in ("Q", "Q_T", "Q|T", "Q/T"):
            rep.lines.append(f"  {key} = {rows[-1][key]}")
    rep.result = rows


def cmd_recip_check(args, inp: Inputs, rep: Report) -> None:
    _need(inp, "matroid", "family")
    lhs, rhs = brion.reciprocity_pair(inp.family, inp.matroid, threads=args.threads)
    rep.check("Q(f^v) = (-1)^(rk-1) Q(f*omega)^v", lhs == rhs, lhs=_poly(lhs), rhs=_poly(rhs))


def cmd_euler(args, inp: Inputs, rep: Report) -> None:
    _need(inp, "matroid", "z")
    v = euler.chi_star(inp.matroid, inp.z, threads=args.threads)
    rep.result = v
    rep.lines.append(str(v))


def cmd_axiom_check(args, inp: Inputs, rep: Report) -> None:
    _need(inp, "matroid", "z", "loopless")
    m, a = inp.matroid, inp.z
    for fc in euler.axiom_check(m, a, threads=args.threads):
        label = ",".join(map(str, fc.flat))
        rep.check(f"flat {{{label}}}", fc.ok, lhs=fc.lhs, slid=fc.slid,
                  restrict=fc.restrict, contract=fc.contract)
    nonflats = [t for t in range(1, 1 << m.n) if not m.is_flat(t)]
    rng = random.Random(args.seed)
    sample = sorted(rng.sample(nonflats, min(len(nonflats), args.samples)))
    for t, before, after in euler.nonflat_check(m, a, sample, threads=args.threads):
        label = ",".join(map(str, t))
        rep.check(f"non-flat {{{label}}}", before == after, before=before, after=after)


def cmd_hstar(args, inp: Inputs, rep: Report) -> None:
    _need(inp, "matroid", "polytope", "loopless")
    try:
        h = euler.hstar(inp.matroid, inp.z, kmax=args.kmax, threads=args.threads)
    except euler.NonPolynomialSequence as exc:
        rep.check("chi_k is polynomial in k", False, reason=str(exc))
        return
    rep.result = {"d": h.d, "hstar": h.entries, "chi": h.chi}
    rep.lines.append("h* = " + " ".join(map(str, h.entries)))
    rep.lines.append(f"d = {h.d}")
    rep.lines.append("chi = " + " ".join(map(str, h.chi)))
    rep.check("h*_0 = 1", h.entries[0] == 1)
    rep.check("h*_j >= 0", all(v >= 0 for v in h.entries))


def cmd_serre_check(args, inp: Inputs, rep: Report) -> None:
    _need(inp, "matroid", "z")
    lhs, rhs = euler.serre_check(inp.matroid, inp.z, threads=args.threads)
    rep.check("chi(f^v) = (-1)^(rk-1) chi(f*omega)", lhs == rhs, lhs=lhs, rhs=rhs)


HANDLERS = {
    "validate": cmd_validate, "qm": cmd_qm, "lattice": cmd_lattice,
    "brion-check": cmd_brion_check, "recursion-check": cmd_recursion_check,
    "recip-check": cmd_recip_check, "euler": cmd_euler, "axiom-check": cmd_axiom_check,
    "hstar": cmd_hstar, "serre-check": cmd_serre_check,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matbrion",
                                description="Matroid-twisted Brion sums and their checks.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--matroid", help="matroid JSON file")
    p.add_argument("--polytope", help="submodular set-function JSON file")
    p.add_argument("--delta", help="set-function JSON file of ray values (any integers)")
    p.add_argument("--family", help="piecewise-family JSON file")
    p.add_argument("--subset", help="comma-joined elements, e.g. 2,3")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--eval-points", type=int, default=0,
                   help="also compare with the rational-function oracle at this many points")
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: $BRION_THREADS or 1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=8,
                   help="non-flat subsets sampled by axiom-check")
    return p


def run(argv: list[str]) -> tuple[int, str, str]:
    """(exit code, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (2 if exc.code else 0), "", ""
    try:
        inp = parse_inputs(args)
        rep = Report(args.command, inp.record())
        HANDLERS[args.command](args, inp, rep)
    except InputParseError as exc:
        return 2, "", f"ParseError: {exc} [{exc.location}]\n"
    except ValidationError as exc:
        wit = f" witness={json.dumps(exc.witness)}" if exc.witness is not None else ""
        return 2, "", f"ValidationError: {exc} [{exc.location}]{wit}\n"
    return (0 if rep.ok else 1), format_output(rep, args.format) + "\n", ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
