"""Cauchy-type identities pairing sz with s or sz, checked coefficientwise.

Variables are ordered z_1..z_n, y_1..y_m.  Identities 1 and 4 are infinite
sums and are compared after truncating the y-degree at D; the other four
are finite and compared exactly.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from ..chebyshev import ChebKind, cheb_half
from ..classical import schur
from ..exactpoly import MultiPoly
from ..partition import conjugate, partitions_upto
from ..zfamilies import sz_skew
from .registry import CheckReport, register, render


@dataclass(frozen=True)
class CauchySetup:
    which: int
    n: int
    m: int
    D: int = 6

    def __post_init__(self):
        if self.which not in range(1, 7):
            raise ValueError("which must be in 1..6")
        if self.n < 1 or self.m < 1 or self.D < 0:
            raise ValueError("need n, m >= 1 and D >= 0")

    @property
    def odd(self) -> bool:
        return self.which >= 4

    @property
    def truncated(self) -> bool:
        return self.which in (1, 4)


def _y_degree(e, n):
    return sum(e[n:])


def _truncate(P: MultiPoly, n: int, D: int) -> MultiPoly:
    return MultiPoly(P.nvars, {e: c for e, c in P.terms.items() if _y_degree(e, n) <= D})


def _mul_trunc(a: MultiPoly, b: MultiPoly, n: int, D: int) -> MultiPoly:
    return _truncate(a * b, n, D)


def _zvars(P: MultiPoly, n: int, m: int) -> MultiPoly:
    return P.extend(n + m)


def _yvars(P: MultiPoly, n: int, m: int) -> MultiPoly:
    return P.extend(n + m, offset=n)


def cauchy_sides(setup: CauchySetup) -> tuple[MultiPoly, MultiPoly]:
    """(lhs, rhs) polynomials in z and y; truncated for the infinite identities."""
    w, n, m, D = setup.which, setup.n, setup.m, setup.D
    nv = n + m
    z = [MultiPoly.var(j, nv) for j in range(n)]
    y = [MultiPoly.var(n + k, nv) for k in range(m)]
    top = 2 * n + (1 if setup.odd else 0)
    one = MultiPoly.constant(1, nv)

    if setup.truncated:
        lams = partitions_upto(D, max_length=min(top, m))
        lhs = MultiPoly.zero(nv)
        for lam in lams:
            lhs = lhs + _zvars(sz_skew(n, lam, setup.odd, check=False), n, m) * _yvars(schur(m, lam), n, m)
        lhs = _truncate(lhs, n, D)
        rhs = one
        for j in range(n):
            for k in range(m):
                # 1 / (1 - z y + y^2) = sum_q U_q(z) y^q
                series = MultiPoly.zero(nv)
                for q in range(D + 1):
                    series = series + (MultiPoly.zero(nv) + cheb_half(ChebKind.U, q)(z[j])) * y[k] ** q
                rhs = _mul_trunc(rhs, series, n, D)
        if setup.odd:
            for k in range(m):
                geo = sum((y[k] ** q for q in range(D + 1)), MultiPoly.zero(nv))
                rhs = _mul_trunc(rhs, geo, n, D)
        return lhs, rhs

    if w in (2, 5):
        lams = partitions_upto(top * m, max_length=top, max_part=m)
        lhs = MultiPoly.zero(nv)
        for lam in lams:
            lhs = lhs + _zvars(sz_skew(n, lam, setup.odd, check=False), n, m) * _yvars(schur(m, conjugate(lam)), n, m)
        rhs = one
        for j in range(n):
            for k in range(m):
                rhs = rhs * (1 + z[j] * y[k] + y[k] * y[k])
        if setup.odd:
            for k in range(m):
                rhs = rhs * (1 + y[k])
        return lhs, rhs

    # identities 3 and 6: sz against sz of the conjugate
    wide = 2 * m + (1 if setup.odd else 0)
    lams = partitions_upto(top * wide, max_length=top, max_part=wide)
    lhs = MultiPoly.zero(nv)
    for lam in lams:
        left = sz_skew(n, lam, setup.odd, check=False)
        if not left:
            continue
        right = sz_skew(m, conjugate(lam), setup.odd, check=False)
        lhs = lhs + _zvars(left, n, m) * _yvars(right, n, m)
    rhs = one
    for j in range(n):
        for k in range(m):
            rhs = rhs * (z[j] + y[k]) ** 2
    if setup.odd:
        rhs = rhs * 2
        for j in range(n):
            rhs = rhs * (2 + z[j])
        for k in range(m):
            rhs = rhs * (2 + y[k])
    return lhs, rhs


def _first_difference(lhs: MultiPoly, rhs: MultiPoly):
    diff = lhs - rhs
    if not diff:
        return None
    e, _ = diff.sorted_terms()[-1]
    return e, lhs.coefficient(e), rhs.coefficient(e)


def cauchy_check(which: int, n: int, m: int, D: int = 6, seed: int = 0) -> CheckReport:
    setup = CauchySetup(which, n, m, D)
    start = time.perf_counter()
    lhs, rhs = cauchy_sides(setup)
    bad = _first_difference(lhs, rhs)
    cex = None
    if bad is not None:
        e, a, b = bad
        cex = {"inputs": {"which": which, "n": n, "m": m, "D": D}, "monomial": list(e), "lhs": render(a), "rhs": render(b)}
    params = {"which": which, "n": n, "m": m, "D": D, "seed": seed}
    elapsed = round(time.perf_counter() - start, 4)
    return CheckReport(f"cauchy_identity_{which}", params, "fail" if cex else "pass", False, 1, cex, elapsed)


def _register(which: int):
    label = "truncated" if which in (1, 4) else "finite"

    @register(f"cauchy_identity_{which}", f"Cauchy identity {which} ({label})")
    def _(ctx):
        top = min(ctx.bounds.max_n, 2)
        for n in range(1, top + 1):
            for m in range(1, top + 1):
                rep = cauchy_check(which, n, m, ctx.bounds.max_deg)
                ctx.cases += 1
                if rep.status == "fail":
                    from .registry import CheckFailure

                    raise CheckFailure(rep.counterexample)

    return _


for _w in range(1, 7):
    _register(_w)
