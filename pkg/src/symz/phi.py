"""The homomorphisms Phi_n and Phi_n^odd and the Laurent-expansion oracle.

Phi_n sends a symmetric P in 2n variables to the unique symmetric Q in n
variables with Q(x + 1/x) = P(x, 1/x).  The odd version first sets the
last of 2n+1 variables to 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classical import base_poly, m_coordinates
from .exactpoly import MultiPoly, substitute_symplectic, symplectic_pairing, zhukovsky_images
from .partition import Partition, conjugate
from .zfamilies import zbase


@dataclass(frozen=True)
class PhiInput:
    P: MultiPoly
    n: int
    odd: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        want = 2 * self.n + (1 if self.odd else 0)
        if self.P.nvars != want:
            raise ValueError(f"expected a polynomial in {want} variables, got {self.P.nvars}")
        if not self.P.is_symmetric():
            raise ValueError("input polynomial is not symmetric")


@lru_cache(maxsize=None)
def e_product(N: int, lam: Partition) -> MultiPoly:
    """e_{lam_1} e_{lam_2} ... in N variables."""
    if not lam.parts:
        return MultiPoly.constant(1, N)
    rest = Partition(lam.parts[1:])
    return e_product(N, rest) * base_poly("e", N, lam.parts[0])


def e_decompose(P: MultiPoly) -> dict[Partition, object]:
    """Write symmetric P as sum c_lam e_lam by lex leading-term elimination."""
    N = P.nvars
    coeffs: dict[Partition, object] = {}
    rest = m_coordinates(P)
    while rest:
        top = max(rest)
        c = rest[top]
        lam = conjugate(Partition(top))  # e_{lam} has leading monomial x^top
        if lam.length() and lam[0] > N:
            raise ArithmeticError("leading exponent outside the e-basis range")
        coeffs[lam] = coeffs.get(lam, 0) + c
        for e, v in m_coordinates(e_product(N, lam)).items():
            nv = rest.get(e, 0) - c * v
            if nv:
                rest[e] = nv
            else:
                rest.pop(e, None)
    return coeffs


@lru_cache(maxsize=None)
def ez_product(n: int, lam: Partition) -> MultiPoly:
    if not lam.parts:
        return MultiPoly.constant(1, n)
    return ez_product(n, Partition(lam.parts[1:])) * zbase("ez", n, lam.parts[0])


def laurent_check(P: MultiPoly, Q: MultiPoly, n: int, odd: bool = False) -> bool:
    """True iff P at the (odd) symplectic alphabet equals Q at z_j = x_j + 1/x_j."""
    if Q.nvars != n or P.nvars != 2 * n + (1 if odd else 0):
        return False
    lhs = substitute_symplectic(P, symplectic_pairing(n, odd), n)
    rhs = Q.compose(zhukovsky_images(n), n)
    return lhs == rhs


def phi(P: MultiPoly, n: int, odd: bool = False, certify: bool = False) -> MultiPoly:
    if odd:
        return phi_odd(P, n, certify=certify)
    PhiInput(P, n, False)
    Q = MultiPoly.zero(n)
    for lam, c in e_decompose(P).items():
        Q = Q + ez_product(n, lam).scale(c)
    if certify and not laurent_check(P, Q, n):
        raise ArithmeticError("Laurent oracle rejected the computed image")
    return Q


def phi_odd(P: MultiPoly, n: int, certify: bool = False) -> MultiPoly:
    PhiInput(P, n, True)
    Q = phi(P.specialize(2 * n, 1), n)
    if certify and not laurent_check(P, Q, n, odd=True):
        raise ArithmeticError("Laurent oracle rejected the computed image")
    return Q
