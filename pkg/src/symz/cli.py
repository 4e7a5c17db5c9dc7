"""Command line entry point: ``symz <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .chebyshev import ChebKind, cheb_half
from .classical import base_poly, monomial_symmetric, schur, sp_o_jt
from .exactpoly import MultiPoly, format_rational
from .palintoeplitz import (
    ZRootData,
    adjugate_entry,
    det_factorized,
    det_from_sz,
    nullvector,
    toeplitz_det,
    toeplitz_minor,
)
from .partition import Partition, parse_partition
from .phi import PhiInput, phi
from .zfamilies import DetFamilyKind, ZFamilyKind, det_family, zbase


class UsageError(Exception):
    pass


def parse_rationals(text: str) -> list:
    text = (text or "").strip()
    if not text:
        return []
    try:
        return [Fraction(t.strip()) for t in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad rational list {text!r}") from exc


def parse_ints(text: str) -> list[int]:
    text = (text or "").strip()
    try:
        return [int(t) for t in text.split(",")] if text else []
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc


def _emit_poly(P: MultiPoly):
    print(P.dumps())


def _cmd_cheb(args):
    try:
        kind = ChebKind.parse(args.kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(cheb_half(kind, args.m))


def _product(kind, n, lam: Partition) -> MultiPoly:
    out = MultiPoly.constant(1, n)
    for part in lam:
        out = out * base_poly(kind, n, part)
    return out


def _cmd_classical(args):
    lam = parse_partition(args.lam)
    if args.kind in ("e", "h", "p"):
        P = _product(args.kind, args.n, lam)
    elif args.kind == "m":
        P = monomial_symmetric(args.n, lam)
    elif args.kind == "s":
        P = schur(args.n, lam)
    elif args.kind in ("sp", "o"):
        P = sp_o_jt(args.kind, args.n, lam)
    else:
        raise UsageError(f"unknown classical kind {args.kind!r}")
    _emit_poly(P)


def _cmd_phi(args):
    with open(args.input) as fh:
        P = MultiPoly.from_json(json.load(fh))
    PhiInput(P, args.n, args.odd)
    _emit_poly(phi(P, args.n, odd=args.odd, certify=args.certify))


def _cmd_family(args):
    kind = args.kind.lower()
    if kind in {k.value for k in ZFamilyKind}:
        if args.m is None:
            raise UsageError(f"{kind} needs --m")
        P = zbase(kind, args.n, args.m)
    elif kind in {k.value for k in DetFamilyKind}:
        if args.lam is None:
            raise UsageError(f"{kind} needs --lambda")
        mu = parse_partition(args.mu) if args.mu else Partition(())
        P = det_family(kind, args.n, parse_partition(args.lam), mu)
    else:
        raise UsageError(f"unknown family {args.kind!r}")
    if args.eval:
        point = parse_rationals(args.points)
        if len(point) != P.nvars:
            raise UsageError(f"need {P.nvars} points, got {len(point)}")
        print(format_rational(P.evaluate(point)))
    else:
        _emit_poly(P)


def _cmd_toeplitz(args):
    zr = ZRootData(tuple(parse_rationals(args.zroots)), Fraction(args.leading))
    m = args.m
    act = args.action
    if act == "det":
        out = toeplitz_det(zr.symbol(), m)
    elif act == "minor":
        out = toeplitz_minor(zr.symbol(), m, parse_ints(args.rows), parse_ints(args.cols))
    elif act == "adjugate":
        out = adjugate_entry(zr, m, args.p, args.q)
    elif act == "factor":
        if args.route == "trench":
            u = parse_rationals(args.u)
            if not u:
                raise UsageError("the trench route needs --u")
            zr = ZRootData(tuple(v * v - 2 for v in u), zr.leading)
            value = det_factorized(m=m, route="trench", u=u)
        else:
            value = det_factorized(list(zr.z), m)
        out = det_from_sz(zr, m, value)
    elif act == "nullvector":
        print(" ".join(format_rational(v) for v in nullvector(zr, m)))
        return
    else:
        raise UsageError(act)
    print(format_rational(out))


def _cmd_verify(args):
    from .harness import Bounds, UnknownCheck, reports_json, resolve, verify_catalog

    selection = "all" if args.suite in (None, "all") else [s for s in args.suite.split(",") if s]
    defaults = Bounds()
    bounds = Bounds(
        max_n=args.max_n if args.max_n is not None else defaults.max_n,
        max_deg=args.max_deg if args.max_deg is not None else defaults.max_deg,
    )
    try:
        resolve(selection)
    except UnknownCheck as exc:
        print(f"unknown check: {exc.args[0]}", file=sys.stderr)
        return 2
    reports, code = verify_catalog(selection, args.seed, bounds)
    if args.json:
        print(reports_json(reports))
    else:
        for r in reports:
            print(r.line())
        bad = sum(not r.ok for r in reports)
        print(f"{len(reports)} checks, {bad} unexpected")
    return code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symz", description="Symmetric polynomials in z = x + 1/x.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cheb", help="print a Chebyshev polynomial")
    p.add_argument("--kind", required=True, help="T, U, V, W, Tmonic or U1")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_cheb)

    p = sub.add_parser("classical", help="classical symmetric polynomial as JSON")
    p.add_argument("--kind", required=True, choices=["e", "h", "p", "m", "s", "sp", "o"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default="")
    p.set_defaults(func=_cmd_classical)

    p = sub.add_parser("phi", help="apply Phi_n to a JSON polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--odd", action="store_true")
    p.add_argument("--input", required=True)
    p.add_argument("--certify", action="store_true")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("family", help="a z-family member as JSON, or its value")
    p.add_argument("--kind", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mu")
    p.add_argument("--eval", action="store_true")
    p.add_argument("--points", default="")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("toeplitz", help="banded symmetric Toeplitz computations")
    p.add_argument("--zroots", default="")
    p.add_argument("--leading", default="1")
    p.add_argument("--m", type=int, required=True)
    acts = p.add_subparsers(dest="action", required=True)
    acts.add_parser("det")
    a = acts.add_parser("minor")
    a.add_argument("--rows", required=True)
    a.add_argument("--cols", required=True)
    a = acts.add_parser("adjugate")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--q", type=int, required=True)
    a = acts.add_parser("factor")
    a.add_argument("--route", choices=["elouafi", "trench"], default="elouafi")
    a.add_argument("--u", default="")
    acts.add_parser("nullvector")
    p.set_defaults(func=_cmd_toeplitz)

    p = sub.add_parser("verify", help="run the property catalog")
    p.add_argument("--suite", default="all")
    p.add_argument("--seed", type=int)
    p.add_argument("--max-n", dest="max_n", type=int)
    p.add_argument("--max-deg", dest="max_deg", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        code = args.func(args)
    except (UsageError, ValueError, ArithmeticError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
