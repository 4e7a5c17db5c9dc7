"""Classical symmetric polynomials: e, h, p, monomial, Schur, sp and o.

The Jacobi-Trudi builders below take a sequence accessor ``seq(k)`` rather
than a variable count, so the same code produces classical polynomials,
their z-analogs, or scalar values at a point.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable

from .exactpoly import MultiPoly, det_exact
from .partition import SkewPartition, as_partition, as_skew, conjugate


class BasisKind(str, enum.Enum):
    E = "e"
    H = "h"
    P = "p"
    M = "m"
    S = "s"


@lru_cache(maxsize=None)
def _e(n: int, m: int) -> MultiPoly:
    if m == 0:
        return MultiPoly.constant(1, n)
    if m > n or m < 0:
        return MultiPoly.zero(n)
    # e_m(y_1..y_n) = e_m(y_1..y_{n-1}) + y_n e_{m-1}(y_1..y_{n-1})
    yn = MultiPoly.var(n - 1, n)
    return _e(n - 1, m).extend(n) + yn * _e(n - 1, m - 1).extend(n)


@lru_cache(maxsize=None)
def _h(n: int, m: int) -> MultiPoly:
    if m < 0:
        return MultiPoly.zero(n)
    if m == 0:
        return MultiPoly.constant(1, n)
    if n == 0:
        return MultiPoly.zero(0)
    # h_m(y_1..y_n) = h_m(y_1..y_{n-1}) + y_n h_{m-1}(y_1..y_n)
    yn = MultiPoly.var(n - 1, n)
    return _h(n - 1, m).extend(n) + yn * _h(n, m - 1)


@lru_cache(maxsize=None)
def _p(n: int, m: int) -> MultiPoly:
    if m == 0:
        return MultiPoly.constant(n, n)
    return MultiPoly(n, {tuple(m if j == i else 0 for j in range(n)): 1 for i in range(n)})


def base_poly(kind, n: int, m: int) -> MultiPoly:
    """e_m, h_m or p_m in n variables; negative degree gives 0, and p_0 = n."""
    kind = BasisKind(kind)
    if n < 0:
        raise ValueError("variable count must be nonnegative")
    if m < 0:
        return MultiPoly.zero(n)
    if kind is BasisKind.E:
        return _e(n, m)
    if kind is BasisKind.H:
        return _h(n, m)
    if kind is BasisKind.P:
        return _p(n, m)
    raise ValueError(f"base_poly does not build {kind.value!r}")


def monomial_symmetric(n: int, lam) -> MultiPoly:
    lam = as_partition(lam)
    if lam.length() > n:
        return MultiPoly.zero(n)
    exps = set(permutations(lam.padded(n)))
    return MultiPoly(n, {e: 1 for e in exps})


def m_coordinates(P: MultiPoly) -> dict:
    """Coefficients of P in the monomial symmetric basis (P must be symmetric)."""
    return {e: c for e, c in P.terms.items() if all(e[i] >= e[i + 1] for i in range(len(e) - 1))}


# Jacobi-Trudi builders -------------------------------------------------

Seq = Callable[[int], object]


def _half(value):
    if isinstance(value, MultiPoly):
        out = value.scale(Fraction(1, 2))
        return out
    return value * Fraction(1, 2) if not isinstance(value, int) or value % 2 else value // 2


def _det(rows, nvars):
    if not rows:
        return MultiPoly.constant(1, nvars) if nvars is not None else 1
    return det_exact(rows)


def jt_skew(seq: Seq, outer, inner, nvars=None):
    """det[seq(outer_j - inner_k - j + k)] of size len(outer)."""
    l = len(outer)
    rows = [[seq(outer[j] - inner[k] - j + k) for k in range(l)] for j in range(l)]
    return _det(rows, nvars)


def jt_plus(seq: Seq, lam, nvars=None):
    """half of det[seq(l_j - j + k) + seq(l_j - j - k + 2)]  (1-based j, k)."""
    l = len(lam)
    if l == 0:
        return _det([], nvars)
    rows = [[seq(lam[j] - j + k) + seq(lam[j] - j - k) for k in range(l)] for j in range(l)]
    return _half(_det(rows, nvars))


def jt_minus(seq: Seq, lam, nvars=None):
    """det[seq(l_j - j + k) - seq(l_j - j - k)]  (1-based j, k)."""
    l = len(lam)
    rows = [[seq(lam[j] - j + k) - seq(lam[j] - j - k - 2) for k in range(l)] for j in range(l)]
    return _det(rows, nvars)


def _assert_integral(P):
    if isinstance(P, MultiPoly):
        if not P.is_integral():
            raise ArithmeticError("expected integer coefficients")
    elif isinstance(P, Fraction) and P.denominator != 1:
        raise ArithmeticError("expected an integer value")


def skew_schur_jt(n: int, shape, check: bool = True) -> MultiPoly:
    """Skew Schur polynomial in n variables by both Jacobi-Trudi routes."""
    shape = as_skew(shape)
    lam, mu = shape.outer, shape.inner
    l = lam.length()
    by_h = jt_skew(lambda k: base_poly("h", n, k), lam.padded(l), mu.padded(l), n)
    if check:
        lc, mc = conjugate(lam), conjugate(mu)
        lt = lc.length()
        by_e = jt_skew(lambda k: base_poly("e", n, k), lc.padded(lt), mc.padded(lt), n)
        if by_h != by_e:
            raise ArithmeticError(f"Jacobi-Trudi routes disagree for {shape}")
    return by_h


def schur(n: int, lam) -> MultiPoly:
    return skew_schur_jt(n, SkewPartition(as_partition(lam)), check=False)


def sp_o_from_seq(kind: str, lam, hseq: Seq, eseq: Seq, nvars=None, check: bool = True):
    """sp or o from h- and e-sequences, both determinant forms."""
    lam = as_partition(lam)
    lc = conjugate(lam)
    if kind == "sp":
        primal = jt_plus(hseq, lam.parts, nvars)
        dual = jt_minus(eseq, lc.parts, nvars) if check else None
    elif kind == "o":
        primal = jt_minus(hseq, lam.parts, nvars)
        dual = jt_plus(eseq, lc.parts, nvars) if check else None
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if check and primal != dual:
        raise ArithmeticError(f"primal and dual {kind} determinants disagree for {lam}")
    return primal


def sp_o_jt(kind: str, N: int, lam, check: bool = True) -> MultiPoly:
    out = sp_o_from_seq(
        kind, lam, lambda k: base_poly("h", N, k), lambda k: base_poly("e", N, k), N, check
    )
    _assert_integral(out)
    return out
