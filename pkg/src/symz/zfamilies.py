"""The z-families: images of classical symmetric polynomials under Phi_n.

Polynomials live in n variables z_1..z_n, where z_j stands for x_j + 1/x_j.
Explicit coefficient formulas build ez, hz and pz; determinant families
(sz, spz, oz and their odd-alphabet versions) come from Jacobi-Trudi
determinants in those.  Bialternant quotients are evaluated at points.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .chebyshev import ChebKind, alpha, catalan, cheb_half, tau
from .classical import base_poly, jt_skew, m_coordinates, schur, sp_o_from_seq
from .exactpoly import MultiPoly, _norm, as_rational, det_exact
from .partition import Partition, as_partition, as_skew, conjugate, partitions_upto


class ZFamilyKind(str, enum.Enum):
    EZ = "ez"
    HZ = "hz"
    PZ = "pz"
    EZ_ODD = "ezodd"
    HZ_ODD = "hzodd"
    PZ_ODD = "pzodd"

    @classmethod
    def parse(cls, text) -> "ZFamilyKind":
        if isinstance(text, ZFamilyKind):
            return text
        key = str(text).lower().replace("_", "")
        for k in cls:
            if k.value == key:
                return k
        raise ValueError(f"unknown z-family {text!r}")


class DetFamilyKind(str, enum.Enum):
    SZ = "sz"
    SPZ = "spz"
    OZ = "oz"
    SZ_ODD = "szodd"
    SPZ_ODD = "spzodd"
    OZ_ODD = "ozodd"
    OZ_ODD_NEG = "ozoddneg"

    @classmethod
    def parse(cls, text) -> "DetFamilyKind":
        if isinstance(text, DetFamilyKind):
            return text
        key = str(text).lower().replace("_", "")
        for k in cls:
            if k.value == key:
                return k
        raise ValueError(f"unknown determinant family {text!r}")

    @property
    def odd(self) -> bool:
        return self in (DetFamilyKind.SZ_ODD, DetFamilyKind.SPZ_ODD, DetFamilyKind.OZ_ODD, DetFamilyKind.OZ_ODD_NEG)


BASIS_FAMILIES = (
    DetFamilyKind.SZ,
    DetFamilyKind.SPZ,
    DetFamilyKind.OZ,
    DetFamilyKind.SZ_ODD,
    DetFamilyKind.SPZ_ODD,
    DetFamilyKind.OZ_ODD,
)


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


# explicit formulas -------------------------------------------------------

def _pz_coeffs(m: int) -> list:
    """Coefficients c_j with pz_m = sum c_j p_{m-2j} (p_0 meaning the constant n)."""
    if m == 0:
        return [2]
    return [_norm(Fraction(m * (-1) ** j * comb(m - j, j), m - j)) for j in range(m // 2 + 1)]


@lru_cache(maxsize=None)
def zbase(kind, n: int, m: int) -> MultiPoly:
    """ez, hz, pz or an odd-alphabet variant of degree m in n variables."""
    kind = ZFamilyKind.parse(kind)
    if n < 1:
        raise ValueError("z-families need n >= 1")
    if kind is ZFamilyKind.EZ:
        if not 0 <= m <= 2 * n:
            raise ValueError(f"ez_m needs 0 <= m <= {2 * n}, got {m}")
        out = MultiPoly.zero(n)
        for k in range(max(0, m - n), m // 2 + 1):
            out = out + base_poly("e", n, m - 2 * k).scale(binom(n - m + 2 * k, k))
        return out
    if kind is ZFamilyKind.EZ_ODD:
        if not 0 <= m <= 2 * n + 1:
            raise ValueError(f"ezodd_m needs 0 <= m <= {2 * n + 1}, got {m}")
        out = MultiPoly.zero(n)
        for k in range(max(0, 2 * m - 2 * n - 1), m + 1):
            out = out + base_poly("e", n, m - k).scale(binom(n - m + k, k // 2))
        return out
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if kind is ZFamilyKind.HZ:
        out = MultiPoly.zero(n)
        for k in range(m // 2 + 1):
            out = out + base_poly("h", n, m - 2 * k).scale((-1) ** k * binom(n + m - k - 1, k))
        return out
    if kind is ZFamilyKind.HZ_ODD:
        out = MultiPoly.zero(n)
        for k in range(m + 1):
            out = out + zbase(ZFamilyKind.HZ, n, k)
        return out
    if kind is ZFamilyKind.PZ:
        if m == 0:
            return MultiPoly.constant(2 * n, n)
        out = MultiPoly.zero(n)
        for j, c in enumerate(_pz_coeffs(m)):
            out = out + base_poly("p", n, m - 2 * j).scale(c)
        return out
    if kind is ZFamilyKind.PZ_ODD:
        return zbase(ZFamilyKind.PZ, n, m) + 1
    raise AssertionError(kind)


def zseq(kind, n: int):
    """Index accessor for Jacobi-Trudi use: zero outside the natural range."""
    kind = ZFamilyKind.parse(kind)
    top = {ZFamilyKind.EZ: 2 * n, ZFamilyKind.EZ_ODD: 2 * n + 1}.get(kind)
    zero = MultiPoly.zero(n)

    def seq(k):
        if k < 0 or (top is not None and k > top):
            return zero
        return zbase(kind, n, k)

    return seq


# inverse expansions -------------------------------------------------------

INVERSE_KINDS = ("e_from_ez", "h_from_hz", "p_from_pz")


def inverse_expand(kind: str, n: int, m: int) -> list:
    """Coefficients c_k with classical_m = sum_k c_k * zfamily_{m-2k}."""
    if kind == "e_from_ez":
        if m > n:
            raise ValueError("e_from_ez needs m <= n")
        return [(-1) ** k * tau(n - m + 2 * k, k) for k in range(m // 2 + 1)]
    if kind == "h_from_hz":
        return [catalan(m + n - 1 - k, k) for k in range(m // 2 + 1)]
    if kind == "p_from_pz":
        return [alpha(m, k) for k in range(m // 2 + 1)]
    raise ValueError(f"unknown inverse expansion {kind!r}")


_INVERSE_TARGET = {"e_from_ez": ("e", "ez"), "h_from_hz": ("h", "hz"), "p_from_pz": ("p", "pz")}


def reassemble(kind: str, n: int, m: int) -> MultiPoly:
    """sum_k c_k zfamily_{m-2k}; should equal the classical polynomial."""
    _, zk = _INVERSE_TARGET[kind]
    out = MultiPoly.zero(n)
    for k, c in enumerate(inverse_expand(kind, n, m)):
        out = out + zbase(zk, n, m - 2 * k).scale(c)
    return out


def classical_target(kind: str, n: int, m: int) -> MultiPoly:
    return base_poly(_INVERSE_TARGET[kind][0], n, m)


# determinant families -------------------------------------------------

def sz_skew(n: int, shape, odd: bool = False, check: bool = True) -> MultiPoly:
    """sz (or szodd) of a skew shape, via hz- and ez-Jacobi-Trudi."""
    shape = as_skew(shape)
    lam, mu = shape.outer, shape.inner
    hk, ek = ("hzodd", "ezodd") if odd else ("hz", "ez")
    l = lam.length()
    by_h = jt_skew(zseq(hk, n), lam.padded(l), mu.padded(l), n)
    if check:
        lc, mc = conjugate(lam), conjugate(mu)
        lt = lc.length()
        by_e = jt_skew(zseq(ek, n), lc.padded(lt), mc.padded(lt), n)
        if by_h != by_e:
            raise ArithmeticError(f"sz Jacobi-Trudi routes disagree for {shape}")
    return by_h


def spz_oz_jt(kind, n: int, lam, check: bool = True) -> MultiPoly:
    """spz, oz, spzodd or ozodd of a partition by both determinant forms."""
    kind = DetFamilyKind.parse(kind)
    base = {
        DetFamilyKind.SPZ: ("sp", False),
        DetFamilyKind.OZ: ("o", False),
        DetFamilyKind.SPZ_ODD: ("sp", True),
        DetFamilyKind.OZ_ODD: ("o", True),
    }
    if kind not in base:
        raise ValueError(f"spz_oz_jt does not build {kind.value}")
    group, odd = base[kind]
    hk, ek = ("hzodd", "ezodd") if odd else ("hz", "ez")
    lam = as_partition(lam)
    out = sp_o_from_seq(group, lam, zseq(hk, n), zseq(ek, n), n, check)
    if lam.length() <= n and not out.is_integral():
        raise ArithmeticError(f"{kind.value}{lam} has non-integer coefficients")
    return out


def negate_argument(P: MultiPoly) -> MultiPoly:
    """P(-z)."""
    return MultiPoly._raw(P.nvars, {e: (-c if sum(e) % 2 else c) for e, c in P.terms.items()})


def det_family(kind, n: int, lam, mu=()) -> MultiPoly:
    kind = DetFamilyKind.parse(kind)
    if kind in (DetFamilyKind.SZ, DetFamilyKind.SZ_ODD):
        return sz_skew(n, (as_partition(lam), as_partition(mu)), odd=kind is DetFamilyKind.SZ_ODD)
    if as_partition(mu).parts:
        raise ValueError(f"{kind.value} takes no inner partition")
    if kind is DetFamilyKind.OZ_ODD_NEG:
        lam = as_partition(lam)
        P = negate_argument(spz_oz_jt(DetFamilyKind.OZ_ODD, n, lam))
        return -P if lam.weight() % 2 else P
    return spz_oz_jt(kind, n, lam)


# bialternants ------------------------------------------------------------

_BIALT_CHEB = {
    DetFamilyKind.SPZ: ChebKind.U,
    DetFamilyKind.OZ: ChebKind.TMONIC,
    DetFamilyKind.SPZ_ODD: ChebKind.U1,
    DetFamilyKind.OZ_ODD: ChebKind.W,
    DetFamilyKind.OZ_ODD_NEG: ChebKind.V,
}


def vandermonde(arg):
    """prod_{j<k} (z_j - z_k) for an int (symbolic) or a point (numeric)."""
    if isinstance(arg, int) and not isinstance(arg, bool):
        n = arg
        out = MultiPoly.constant(1, n)
        for j in range(n):
            for k in range(j + 1, n):
                out = out * (MultiPoly.var(j, n) - MultiPoly.var(k, n))
        return out
    pts = [as_rational(v) for v in arg]
    out = 1
    for j in range(len(pts)):
        for k in range(j + 1, len(pts)):
            out *= pts[j] - pts[k]
    return _norm(out) if isinstance(out, Fraction) else out


def omega_j(point: Sequence, j: int):
    """prod_{k != j} (z_j - z_k)."""
    out = 1
    for k, v in enumerate(point):
        if k != j:
            out *= point[j] - v
    return out


def cheb_alternant(cheb_kind, indices: Sequence[int], point: Sequence):
    """det[cheb(indices_j)(z_k)] at a numeric point."""
    polys = [cheb_half(cheb_kind, i) for i in indices]
    return det_exact([[p(z) for z in point] for p in polys])


def _check_point(n: int, point) -> list:
    pts = [as_rational(v) for v in point]
    if len(pts) != n:
        raise ValueError(f"need {n} coordinates, got {len(pts)}")
    if len(set(pts)) != n:
        raise ZeroDivisionError("point coordinates must be pairwise distinct")
    return pts


def bialternant_eval(kind, n: int, lam, point):
    """Chebyshev bialternant quotient at a point with distinct coordinates."""
    kind = DetFamilyKind.parse(kind)
    if kind not in _BIALT_CHEB:
        raise ValueError(f"no bialternant for {kind.value}")
    lam = as_partition(lam)
    if lam.length() > n:
        raise ValueError(f"{lam} has more than {n} parts")
    pts = _check_point(n, point)
    num = cheb_alternant(_BIALT_CHEB[kind], [lam[j] + n - 1 - j for j in range(n)], pts)
    return _norm(Fraction(num) / vandermonde(pts))


def bialternant_denominator(cheb_kind, n: int, point):
    """det[cheb(n-j)(z_k)]; equals the Vandermonde for every kind."""
    return cheb_alternant(cheb_kind, [n - 1 - j for j in range(n)], [as_rational(v) for v in point])


def bialternant_poly(kind, n: int, lam) -> MultiPoly:
    """Slow symbolic bialternant: polynomial numerator divided by each z_j - z_k."""
    kind = DetFamilyKind.parse(kind)
    lam = as_partition(lam)
    if lam.length() > n:
        raise ValueError(f"{lam} has more than {n} parts")
    zs = [MultiPoly.var(k, n) for k in range(n)]
    polys = [cheb_half(_BIALT_CHEB[kind], lam[j] + n - 1 - j) for j in range(n)]
    num = det_exact([[p(z) if p.degree() > 0 else MultiPoly.constant(p(0), n) for z in zs] for p in polys], n)
    if not isinstance(num, MultiPoly):
        num = MultiPoly.constant(num, n)
    for j in range(n):
        for k in range(j + 1, n):
            num = num.div_linear(j, k)
    return num


def duplication_quotient(kind, n: int, lam, u_point):
    """Duplicated-index Chebyshev quotient at a u-point; compare with z = u^2 - 2.

    The odd orthogonal case uses U_{2 l_j + 2n - 2j} in the numerator.
    """
    kind = DetFamilyKind.parse(kind)
    lam = as_partition(lam)
    us = [as_rational(u) for u in u_point]
    rng = range(1, n + 1)
    if kind is DetFamilyKind.SPZ:
        ck, num_idx, den_idx = ChebKind.U, [2 * lam[j - 1] + 2 * n - 2 * j + 1 for j in rng], [2 * n - 2 * j + 1 for j in rng]
    elif kind is DetFamilyKind.OZ:
        ck, num_idx, den_idx = ChebKind.TMONIC, [2 * lam[j - 1] + 2 * n - 2 * j for j in rng], [2 * n - 2 * j for j in rng]
    elif kind is DetFamilyKind.OZ_ODD:
        ck, num_idx, den_idx = ChebKind.U, [2 * lam[j - 1] + 2 * n - 2 * j for j in rng], [2 * n - 2 * j for j in rng]
    elif kind is DetFamilyKind.OZ_ODD_NEG:
        ck, num_idx, den_idx = ChebKind.T, [2 * lam[j - 1] + 2 * n - 2 * j + 1 for j in rng], [2 * n - 2 * j + 1 for j in rng]
    else:
        raise ValueError(f"no duplication formula for {kind.value}")
    num = cheb_alternant(ck, num_idx, us)
    den = cheb_alternant(ck, den_idx, us)
    if den == 0:
        raise ZeroDivisionError("degenerate u-point")
    return _norm(Fraction(num) / den)


def duplication_target(kind, n: int, lam, u_point):
    """The z-side value the duplication quotient should reproduce."""
    kind = DetFamilyKind.parse(kind)
    lam = as_partition(lam)
    z = [as_rational(u) ** 2 - 2 for u in u_point]
    if kind is DetFamilyKind.OZ_ODD_NEG:
        val = det_family(DetFamilyKind.OZ_ODD, n, lam).evaluate([-v for v in z])
        return -val if lam.weight() % 2 else val
    return det_family(kind, n, lam).evaluate(z)


# omega ------------------------------------------------------------------

def omega_pz(n: int, m: int) -> MultiPoly:
    """omega_n(pz_m) with omega(p_k) = (-1)^(k-1) p_k and constants fixed."""
    if m == 0:
        return zbase("pz", n, 0)
    out = MultiPoly.zero(n)
    for j, c in enumerate(_pz_coeffs(m)):
        k = m - 2 * j
        term = base_poly("p", n, k).scale(c)
        out = out + (term if k == 0 or k % 2 else -term)
    return out


def omega_pz_closed_form(n: int, m: int) -> MultiPoly:
    """The closed form with the half-binomial correction pz_0 term for even m."""
    out = zbase("pz", n, m).scale((-1) ** (m - 1))
    if m % 2 == 0:
        out = out + zbase("pz", n, 0).scale(Fraction((-1) ** (m // 2) * comb(m, m // 2), 2))
    return out


# basis expansion --------------------------------------------------------

def basis_index(n: int, degree_bound: int) -> list[Partition]:
    return partitions_upto(degree_bound, max_length=n)


def family_poly(family, n: int, lam) -> MultiPoly:
    family = "s" if family in ("s", "schur") else DetFamilyKind.parse(family)
    return _family_poly(family, n, as_partition(lam))


@lru_cache(maxsize=4096)
def _family_poly(family, n: int, lam: Partition) -> MultiPoly:
    if family == "s":
        return schur(n, lam)
    return det_family(family, n, lam)


def transition_matrix(family, n: int, degree_bound: int):
    """(index, rows): row lam lists m-coordinates of family_lam over the index."""
    family = "s" if family in ("s", "schur") else DetFamilyKind.parse(family)
    index, rows = _transition(family, n, degree_bound)
    return list(index), [list(r) for r in rows]


@lru_cache(maxsize=256)
def _transition(family, n: int, degree_bound: int):
    index = basis_index(n, degree_bound)
    rows = []
    for lam in index:
        coords = m_coordinates(family_poly(family, n, lam))
        row = [coords.get(lam2.padded(n), 0) for lam2 in index]
        extra = set(coords) - {mu.padded(n) for mu in index}
        if extra:
            raise ArithmeticError(f"family element {lam} exceeds the degree bound")
        rows.append(tuple(row))
    return tuple(index), tuple(rows)


def solve_exact(A: list[list], b: list) -> list:
    """Solve A x = b over the rationals by Gauss-Jordan elimination."""
    size = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for col in range(size):
        piv = next((r for r in range(col, size) if M[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular system")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(size):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [_norm(M[r][size]) for r in range(size)]


def expand_in_basis(target: MultiPoly, family, n: int, degree_bound: int | None = None) -> dict:
    """Coefficients c with target = sum c_lam * family_lam, checked exactly."""
    if not target.is_symmetric():
        raise ValueError("target must be symmetric")
    if degree_bound is None:
        degree_bound = max(target.degree(), 0)
    if target.degree() > degree_bound:
        raise ValueError("target degree exceeds the bound")
    index, rows = transition_matrix(family, n, degree_bound)
    coords = m_coordinates(target)
    b = [coords.get(lam.padded(n), 0) for lam in index]
    # rows are family elements, so solve rows^T c = b
    At = [list(col) for col in zip(*rows)]
    c = solve_exact(At, b)
    result = {lam: ci for lam, ci in zip(index, c) if ci != 0}
    residual = target - sum((family_poly(family, n, lam).scale(ci) for lam, ci in result.items()), MultiPoly.zero(n))
    if residual:
        raise ArithmeticError("basis expansion left a nonzero residual")
    return result


# numeric helpers --------------------------------------------------------

def ez_values(point, odd: bool = False) -> list:
    """[ez_0, ..., ez_2n] (or the odd list) at a point, from prod(1 + z t + t^2)."""
    coeffs = [1]
    for z in point:
        z = as_rational(z)
        nxt = [0] * (len(coeffs) + 2)
        for i, c in enumerate(coeffs):
            nxt[i] += c
            nxt[i + 1] += c * z
            nxt[i + 2] += c
        coeffs = nxt
    if odd:
        coeffs = [a + b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return [_norm(Fraction(c)) for c in coeffs]


def hz_values(point, degree: int, odd: bool = False) -> list:
    """[hz_0, ..., hz_degree] at a point via the reciprocal of E(-t)."""
    e = ez_values(point, odd)
    em = [c if i % 2 == 0 else -c for i, c in enumerate(e)]
    h = [Fraction(1)]
    for k in range(1, degree + 1):
        s = sum((em[i] * h[k - i] for i in range(1, min(k, len(em) - 1) + 1)), Fraction(0))
        h.append(-s)
    return [_norm(v) for v in h]


def sz_at(point, shape, odd: bool = False):
    """sz_{lam/mu} at a point through the hz-Jacobi-Trudi determinant."""
    shape = as_skew(shape)
    lam, mu = shape.outer, shape.inner
    l = lam.length()
    top = lam[0] + l if l else 0
    h = hz_values(point, top, odd)

    def seq(k):
        return h[k] if 0 <= k < len(h) else 0

    return jt_skew(seq, lam.padded(l), mu.padded(l))
