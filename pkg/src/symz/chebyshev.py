"""Chebyshev polynomials in the half-argument normalization.

Every polynomial returned here is written in a variable ``u`` that stands
for ``z`` in formulas that evaluate the classical polynomials at ``z/2``.
This keeps all coefficients integral.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exactpoly import UniPoly, as_rational


class ChebKind(str, enum.Enum):
    T = "T"
    U = "U"
    V = "V"
    W = "W"
    TMONIC = "Tmonic"
    U1 = "U1"

    @classmethod
    def parse(cls, text) -> "ChebKind":
        if isinstance(text, ChebKind):
            return text
        for k in cls:
            if k.value.lower() == str(text).lower():
                return k
        raise ValueError(f"unknown Chebyshev kind {text!r}")


# initial pair (q_0, q_1) for q_m = u q_{m-1} - q_{m-2}
_START = {
    ChebKind.T: ((2,), (0, 1)),
    ChebKind.U: ((1,), (0, 1)),
    ChebKind.V: ((1,), (-1, 1)),
    ChebKind.W: ((1,), (1, 1)),
}

_X = UniPoly.x()


@lru_cache(maxsize=None)
def _recur(kind: ChebKind, m: int) -> UniPoly:
    q0, q1 = _START[kind]
    if m == 0:
        return UniPoly(q0)
    if m == 1:
        return UniPoly(q1)
    return _X * _recur(kind, m - 1) - _recur(kind, m - 2)


@lru_cache(maxsize=None)
def cheb_half(kind, m: int) -> UniPoly:
    """The half-argument Chebyshev polynomial of the given kind and degree.

    T gives 2T_m(u/2) (so m=0 yields 2), Tmonic agrees with it except that
    m=0 yields 1, and U1 is the partial sum U_0 + ... + U_m at u/2.
    """
    kind = ChebKind.parse(kind)
    if m < 0:
        raise ValueError("Chebyshev degree must be nonnegative")
    if kind is ChebKind.TMONIC:
        return UniPoly((1,)) if m == 0 else _recur(ChebKind.T, m)
    if kind is ChebKind.U1:
        return _recur(ChebKind.U, 0) if m == 0 else cheb_half(ChebKind.U1, m - 1) + _recur(ChebKind.U, m)
    return _recur(kind, m)


def cheb_value(kind, m: int, z):
    """Value of ``cheb_half(kind, m)`` at an exact scalar; negative m gives 0."""
    if m < 0:
        return 0
    return cheb_half(kind, m)(as_rational(z))


# coefficient tables ----------------------------------------------------

def tau(s: int, k: int):
    if s == 0 and k == 0:
        return 1
    if s < 1 or k < 0 or 2 * k > s:
        raise ValueError(f"tau({s},{k}) out of range")
    return factorial(s - k - 1) * s // (factorial(k) * factorial(s - 2 * k))


def sigma(m: int, k: int):
    """Coefficient of t^k in U1_m(t/2), first closed form."""
    if not 0 <= k <= m:
        raise ValueError(f"sigma({m},{k}) out of range")
    return sum((-1) ** (j - k) * comb(j, k) for j in range(k, (m + k) // 2 + 1))


def sigma_alt(m: int, k: int):
    """Second closed form for the same coefficient."""
    if not 0 <= k <= m:
        raise ValueError(f"sigma({m},{k}) out of range")
    return sum((-1) ** j * comb(k + j, j) for j in range((m - k) // 2 + 1))


def catalan(m: int, k: int):
    if not 0 <= k <= m:
        raise ValueError(f"catalan({m},{k}) out of range")
    return factorial(m + k) * (m - k + 1) // (factorial(k) * factorial(m + 1))


def alpha(m: int, k: int):
    if k < 0 or 2 * k > m:
        raise ValueError(f"alpha({m},{k}) out of range")
    if 2 * k == m:
        return Fraction(comb(m, k), 2) if comb(m, k) % 2 else comb(m, k) // 2
    return comb(m, k)


_TABLES = {"tau": tau, "sigma": sigma, "catalan": catalan, "alpha": alpha}


def coeff_table(name: str, *args):
    try:
        fn = _TABLES[name]
    except KeyError:
        raise ValueError(f"unknown coefficient table {name!r}") from None
    return fn(*args)
