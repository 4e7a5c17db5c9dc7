"""Palindromic symbols and banded symmetric Toeplitz matrices.

A symbol a(t) = a_0 + sum_k a_k (t^k + t^-k) of half-width n is built from
its z-roots, i.e. a(t) = a_n prod_j (t + 1/t - z_j).  Minors of T_m(a) are
then values of skew sz polynomials at those roots.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chebyshev import ChebKind, cheb_half
from .exactpoly import LaurentPoly, UniPoly, _norm, as_rational, det_exact
from .partition import IndexVector, Partition, SkewPartition, as_partition, id_vec, rect, rev, skew_contains
from .zfamilies import bialternant_eval, cheb_alternant, hz_values, omega_j, sz_at


@dataclass(frozen=True)
class PalindromicSymbol:
    """Coefficients a_0..a_n of a palindromic Laurent polynomial."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(as_rational(c) for c in self.coeffs)
        if not cs or cs[-1] == 0:
            raise ValueError("leading coefficient a_n must be nonzero")
        object.__setattr__(self, "coeffs", cs)

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def coefficient(self, k: int):
        k = abs(k)
        return self.coeffs[k] if k <= self.n else 0

    def laurent(self) -> LaurentPoly:
        return LaurentPoly(1, {(k,): self.coefficient(k) for k in range(-self.n, self.n + 1)})


@dataclass(frozen=True)
class ZRootData:
    z: tuple
    leading: object = 1

    def __post_init__(self):
        object.__setattr__(self, "z", tuple(as_rational(v) for v in self.z))
        object.__setattr__(self, "leading", as_rational(self.leading))
        if self.leading == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def n(self) -> int:
        return len(self.z)

    def symbol(self) -> PalindromicSymbol:
        return symbol_from_zroots(self.z, self.leading)


def symbol_from_zroots(z: Sequence, leading=1) -> PalindromicSymbol:
    leading = as_rational(leading)
    if leading == 0:
        raise ValueError("leading coefficient must be nonzero")
    prod = LaurentPoly.constant(leading, 1)
    for zj in z:
        prod = prod * LaurentPoly(1, {(1,): 1, (0,): -as_rational(zj), (-1,): 1})
    n = len(z)
    return PalindromicSymbol(tuple(prod.coefficient((k,)) for k in range(n + 1)))


def g_from_symbol(s: PalindromicSymbol, certify: bool = True) -> UniPoly:
    """g with a(t) = g(t + 1/t), i.e. g = sum_k a_k Tmonic_k."""
    g = UniPoly()
    for k, a in enumerate(s.coeffs):
        g = g + cheb_half(ChebKind.TMONIC, k) * a
    if certify:
        w = LaurentPoly(1, {(1,): 1, (-1,): 1})
        if g(w) != s.laurent():
            raise ArithmeticError("g(t + 1/t) does not reproduce the symbol")
    return g


def odd_split(f: UniPoly) -> UniPoly:
    """The palindromic g with f = (t + 1) g, for palindromic f of odd degree."""
    if not f or f.degree() % 2 == 0:
        raise ValueError("expected a polynomial of odd degree")
    if not f.is_palindromic():
        raise ValueError("polynomial is not palindromic")
    q, r = f.divmod(UniPoly((1, 1)))
    if r:
        raise ArithmeticError("nonzero remainder dividing by t + 1")
    if not q.is_palindromic():
        raise ArithmeticError("quotient is not palindromic")
    return q


def as_symbol(s) -> PalindromicSymbol:
    if isinstance(s, PalindromicSymbol):
        return s
    if isinstance(s, ZRootData):
        return s.symbol()
    return PalindromicSymbol(tuple(s))


def toeplitz_matrix(s, m: int) -> list[list]:
    s = as_symbol(s)
    return [[s.coefficient(j - k) for k in range(m)] for j in range(m)]


def _index(v, m: int) -> IndexVector:
    if isinstance(v, IndexVector):
        if v.bound != m:
            v = IndexVector(v.entries, m)
        return v
    return IndexVector(tuple(v), m)


def toeplitz_minor(s, m: int, rows, cols):
    rows, cols = _index(rows, m), _index(cols, m)
    if len(rows) != len(cols):
        raise ValueError("row and column selections differ in size")
    T = toeplitz_matrix(s, m)
    return det_exact([[T[i - 1][j - 1] for j in cols] for i in rows])


def toeplitz_det(s, m: int):
    return det_exact(toeplitz_matrix(s, m))


# minor <-> skew correspondence -------------------------------------------

@dataclass(frozen=True)
class MinorShape:
    sign: int
    power: int
    # None means the inner shape does not fit, so the sz value is 0
    shape1: SkewPartition | None
    shape2: SkewPartition | None
    xi: tuple = ()
    eta: tuple = ()


def _skew_or_none(outer, inner):
    outer, inner = as_partition(outer), as_partition(inner)
    return SkewPartition(outer, inner) if skew_contains(outer, inner) else None


def minor_to_skew(n: int, m: int, rho, sigma) -> MinorShape:
    rho, sigma = _index(rho, m), _index(sigma, m)
    r = len(rho)
    if len(sigma) != r:
        raise ValueError("row and column selections differ in size")
    d = m - r
    xi, eta = rho.complement().entries, sigma.complement().entries
    ids = id_vec(d)
    xi_m = tuple(a - b for a, b in zip(xi, ids))
    eta_m = tuple(a - b for a, b in zip(eta, ids))
    shape1 = _skew_or_none((r,) * n + rev(xi_m), rev(eta_m))
    shape2 = _skew_or_none((r,) * n + tuple(r - v for v in eta_m), tuple(r - v for v in xi_m))
    sign = -1 if (r * n + rho.total() + sigma.total()) % 2 else 1
    return MinorShape(sign, r, shape1, shape2, xi, eta)


def minor_via_skew(z: ZRootData, m: int, rho, sigma, which: int = 1):
    shape = minor_to_skew(z.n, m, rho, sigma)
    sk = shape.shape1 if which == 1 else shape.shape2
    if sk is None:
        return 0
    return _norm(Fraction(shape.sign) * Fraction(z.leading) ** shape.power * sz_at(z.z, sk))


@dataclass(frozen=True)
class SkewMinor:
    rho: IndexVector
    sigma: IndexVector
    sign: int
    power: int
    m: int
    required_m: int
    stated_bound_sufficient: bool = field(default=True)


def skew_to_minor(lam, mu, n: int, m: int | None = None) -> SkewMinor:
    """Index vectors whose minor is (+-) sz_{lam/mu} for the monic symbol.

    The rows removed are xi = (1..n, n + i + lam_{q+1-i}) and the columns
    removed are eta = (i + mu_{q+1-i}, m - n + i), q = len(lam).  This needs
    m >= n + q + lam_1.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not skew_contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    q = lam.length()
    required = n + q + lam[0]
    if m is None:
        m = required
    if m < required:
        raise ValueError(f"m = {m} too small; need m >= {required}")
    rl, rm = rev(lam.padded(q)), rev(mu.padded(q))
    xi = id_vec(n) + tuple(n + i + 1 + rl[i] for i in range(q))
    eta = tuple(i + 1 + rm[i] for i in range(q)) + tuple(m - n + i for i in range(1, n + 1))
    xi_v, eta_v = IndexVector(xi, m), IndexVector(eta, m)
    rho, sigma = xi_v.complement(), eta_v.complement()
    r = len(rho)
    sign = -1 if (r * n + rho.total() + sigma.total()) % 2 else 1
    return SkewMinor(rho, sigma, sign, r, m, required, stated_bound_sufficient=n + q + 1 >= required)


# determinant factorizations ----------------------------------------------

def _as_zroots(z) -> ZRootData:
    return z if isinstance(z, ZRootData) else ZRootData(tuple(z))


def sz_rectangle(z, m: int):
    """sz_{(m^n)}(z) through the hz Jacobi-Trudi determinant."""
    z = _as_zroots(z)
    return sz_at(z.z, rect(m, z.n))


def det_factorized(z=None, m: int = 1, route: str = "elouafi", u=None):
    """sz_{(m^n)}(z) from a product of two bialternants.

    The elouafi route splits on the parity of m; the trench route works in
    variables u with z_j = u_j^2 - 2 and takes ``u`` instead of ``z``.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if route == "trench":
        if u is None:
            raise ValueError("the trench route needs u-coordinates")
        us = [as_rational(v) for v in u]
        n = len(us)
        rng = range(1, n + 1)
        num = cheb_alternant(ChebKind.T, [m + 2 * j - 1 for j in rng], us) * cheb_alternant(
            ChebKind.U, [m + 2 * j - 2 for j in rng], us
        )
        den = cheb_alternant(ChebKind.T, [2 * j - 1 for j in rng], us) * cheb_alternant(
            ChebKind.U, [2 * j - 2 for j in rng], us
        )
        if den == 0:
            raise ZeroDivisionError("degenerate u-point")
        return _norm(Fraction(num) / den)
    if route != "elouafi":
        raise ValueError(f"unknown route {route!r}")
    z = _as_zroots(z)
    n = z.n
    if len(set(z.z)) != n:
        raise ZeroDivisionError("z-roots must be pairwise distinct")
    if m == 0:
        return 1
    if m % 2:
        p = (m + 1) // 2
        return _norm(
            Fraction(bialternant_eval("spz", n, rect(p - 1, n), z.z)) * bialternant_eval("oz", n, rect(p, n), z.z)
        )
    p = m // 2
    sign = -1 if (p * n) % 2 else 1
    neg = [-v for v in z.z]
    return _norm(
        sign
        * Fraction(bialternant_eval("ozodd", n, rect(p, n), z.z))
        * bialternant_eval("ozodd", n, rect(p, n), neg)
    )


def det_from_sz(z: ZRootData, m: int, sz_value):
    """(-1)^{nm} a_n^m sz: the Toeplitz determinant assembled from sz."""
    sign = -1 if (z.n * m) % 2 else 1
    return _norm(sign * Fraction(z.leading) ** m * sz_value)


def adjugate_entry(z, m: int, p: int, q: int):
    """(p, q) entry of adj(T_m(a)) from sz_{((m-1)^n, q-1)/(p-1)}."""
    z = _as_zroots(z)
    if not (1 <= p <= m and 1 <= q <= m):
        raise ValueError("adjugate index out of range")
    n = z.n
    shape = SkewPartition(Partition((m - 1,) * n + ((q - 1,) if q > 1 else ())), Partition((p - 1,) if p > 1 else ()))
    sign = -1 if (n * (m - 1)) % 2 else 1
    return _norm(sign * Fraction(z.leading) ** (m - 1) * sz_at(z.z, shape))


def adjugate_direct(s, m: int) -> list[list]:
    """Adjugate from cofactors: adj[p][q] = (-1)^(p+q) minor(without q, without p)."""
    T = toeplitz_matrix(s, m)
    out = []
    for p in range(m):
        row = []
        for q in range(m):
            sub = [[T[i][j] for j in range(m) if j != p] for i in range(m) if i != q]
            c = det_exact(sub)
            row.append(-c if (p + q) % 2 else c)
        out.append(row)
    return out


def nullvector(z, m: int) -> list:
    """v_q = sz_{((m-1)^(n-1), m-q)}(z); requires det T_m(a) = 0."""
    z = _as_zroots(z)
    if toeplitz_det(z.symbol(), m) != 0:
        raise ValueError("T_m(a) is nonsingular; no null vector")
    n = z.n
    return [sz_at(z.z, Partition((m - 1,) * (n - 1) + ((m - q,) if m > q else ()))) for q in range(1, m + 1)]


def mat_vec(T: list[list], v: Sequence) -> list:
    return [_norm(Fraction(sum(a * b for a, b in zip(row, v)))) for row in T]


# Elouafi expansions of hz -------------------------------------------------

def elouafi_expansion(kind: str, n: int, p: int, j: int, k: int, point) -> tuple:
    """(lhs, rhs) of the TU or VW expansion of one hz entry at a point."""
    pts = [as_rational(v) for v in point]
    if kind == "TU":
        idx = 2 * p + 1 - j + k
        a, b = (ChebKind.T, n + p + 1 - j), (ChebKind.U, p + k - 1)
    elif kind == "VW":
        if p < 1:
            raise ValueError("the VW expansion needs p >= 1")
        idx = 2 * p - j + k
        a, b = (ChebKind.W, n + p - j), (ChebKind.V, p + k - 1)
    else:
        raise ValueError(f"unknown expansion {kind!r}")
    h = hz_values(pts, max(idx, 0))
    lhs = h[idx] if idx >= 0 else 0
    fa, fb = cheb_half(*a), cheb_half(*b)
    rhs = sum((Fraction(fa(zs) * fb(zs)) / omega_j(pts, s) for s, zs in enumerate(pts)), Fraction(0))
    return lhs, _norm(rhs)
