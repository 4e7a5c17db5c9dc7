"""Checks for partitions, exact polynomials, Chebyshev tables and classical families."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from ..chebyshev import ChebKind, alpha, catalan, cheb_half, sigma, sigma_alt, tau
from ..classical import base_poly, schur, sp_o_jt
from ..exactpoly import LaurentPoly, MultiPoly, UniPoly, det_cofactor, det_exact, substitute_symplectic, symplectic_pairing
from ..partition import conjugate, partitions_upto, rect
from .helpers import random_poly, symplectic_point
from .registry import register

U = UniPoly.x()


# partition --------------------------------------------------------------

@register("partition_conjugate_involution", "conjugate twice is the identity, weight <= 12")
def _(ctx):
    for lam in partitions_upto(12):
        ctx.expect(conjugate(conjugate(lam)), lam, lam=str(lam))


@register("partition_conjugate_length", "length of the conjugate is the first part")
def _(ctx):
    for lam in partitions_upto(12):
        if lam.length():
            ctx.expect(conjugate(lam).length(), lam[0], lam=str(lam))


@register("partition_rect", "rectangles: weight and conjugate")
def _(ctx):
    for m in range(7):
        for n in range(7):
            ctx.expect(rect(m, n).weight(), m * n, m=m, n=n)
            ctx.expect(conjugate(rect(m, n)), rect(n, m), m=m, n=n)


# exactpoly --------------------------------------------------------------

@register("exactpoly_ring_axioms", "associativity, commutativity, distributivity")
def _(ctx):
    for _ in range(4 * ctx.bounds.points):
        nv = ctx.rng.randint(0, 3)
        a, b, c = (random_poly(ctx.rng, nv, 3) for _ in range(3))
        ctx.expect((a * b) * c, a * (b * c), a=a, b=b, c=c)
        ctx.expect((a + b) + c, a + (b + c), a=a, b=b, c=c)
        ctx.expect(a * b, b * a, a=a, b=b)
        ctx.expect(a * (b + c), a * b + a * c, a=a, b=b, c=c)
        ctx.expect(a - a, MultiPoly.zero(nv), a=a)


@register("exactpoly_det_vs_cofactor", "scalar and polynomial determinants against cofactor expansion")
def _(ctx):
    rng = ctx.rng
    for size in range(0, 5):
        for _ in range(2 * ctx.bounds.points):
            M = [[rng.randint(-6, 6) for _ in range(size)] for _ in range(size)]
            ctx.expect(det_exact(M), det_cofactor(M), matrix=M)
            Q = [[Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(size)] for _ in range(size)]
            ctx.expect(det_exact(Q), det_cofactor(Q), matrix=Q)
    for size in range(1, 4):
        for _ in range(ctx.bounds.points):
            M = [[random_poly(rng, 2, 2, terms=2) for _ in range(size)] for _ in range(size)]
            ctx.expect(det_exact(M, 2), det_cofactor(M), matrix=M)


@register("exactpoly_symplectic_multiplicative", "substitution into the symplectic alphabet is multiplicative")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for odd in (False, True):
            N = 2 * n + odd
            pairing = symplectic_pairing(n, odd)
            for _ in range(ctx.bounds.points):
                P, Q = random_poly(ctx.rng, N, 3), random_poly(ctx.rng, N, 3)
                lhs = substitute_symplectic(P * Q, pairing, n)
                rhs = substitute_symplectic(P, pairing, n) * substitute_symplectic(Q, pairing, n)
                ctx.expect(lhs, rhs, n=n, odd=odd, P=P, Q=Q)


# chebyshev --------------------------------------------------------------

def _t():
    return LaurentPoly(1, {(1,): 1}), LaurentPoly(1, {(-1,): 1})


def _tpow(k):
    return LaurentPoly(1, {(k,): 1})


@register("cheb_recurrence", "q_m = u q_{m-1} - q_{m-2} for T, U, V, W")
def _(ctx):
    for kind in (ChebKind.T, ChebKind.U, ChebKind.V, ChebKind.W):
        for m in range(2, 13):
            ctx.expect(cheb_half(kind, m), U * cheb_half(kind, m - 1) - cheb_half(kind, m - 2), kind=kind.value, m=m)


@register("cheb_T_main_property", "T at t + 1/t gives t^m + t^-m")
def _(ctx):
    t, ti = _t()
    w = t + ti
    for m in range(13):
        ctx.expect(cheb_half(ChebKind.T, m)(w), _tpow(m) + _tpow(-m), m=m)
        if m:
            ctx.expect(cheb_half(ChebKind.TMONIC, m)(w), _tpow(m) + _tpow(-m), m=m, kind="Tmonic")


@register("cheb_U_main_property", "(t - 1/t) U_m(t + 1/t) = t^(m+1) - t^-(m+1)")
def _(ctx):
    t, ti = _t()
    for m in range(13):
        ctx.expect((t - ti) * cheb_half(ChebKind.U, m)(t + ti), _tpow(m + 1) - _tpow(-m - 1), m=m)


@register("cheb_VW_main_property", "V and W at t^2 + t^-2")
def _(ctx):
    t, ti = _t()
    w2 = _tpow(2) + _tpow(-2)
    for m in range(13):
        ctx.expect((t + ti) * cheb_half(ChebKind.V, m)(w2), _tpow(2 * m + 1) + _tpow(-2 * m - 1), m=m, kind="V")
        ctx.expect((t - ti) * cheb_half(ChebKind.W, m)(w2), _tpow(2 * m + 1) - _tpow(-2 * m - 1), m=m, kind="W")


def _truncate(P: MultiPoly, var: int, D: int) -> MultiPoly:
    return MultiPoly(P.nvars, {e: c for e, c in P.terms.items() if e[var] <= D})


@register("cheb_generating_functions", "(1 - t u + t^2) sum U_m t^m = 1 and the T analog")
def _(ctx):
    u, t = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    den = 1 - t * u + t * t
    for D in range(11):
        su = sum((cheb_half(ChebKind.U, m).to_multipoly(0, 2) * t ** m for m in range(D + 1)), MultiPoly.zero(2))
        st = sum((cheb_half(ChebKind.T, m).to_multipoly(0, 2) * t ** m for m in range(D + 1)), MultiPoly.zero(2))
        ctx.expect(_truncate(den * su, 1, D), MultiPoly.constant(1, 2), D=D, kind="U")
        ctx.expect(_truncate(den * st, 1, D), _truncate(2 - t * u, 1, D), D=D, kind="T")


@register("cheb_explicit_forms", "explicit coefficients of T, U and Tmonic")
def _(ctx):
    for m in range(13):
        coeffsU = [0] * (m + 1)
        for k in range(m // 2 + 1):
            coeffsU[m - 2 * k] = (-1) ** k * comb(m - k, k)
        ctx.expect(cheb_half(ChebKind.U, m), UniPoly(coeffsU), m=m, kind="U")
        coeffsM = [0] * (m + 1)
        for k in range(m // 2 + 1):
            coeffsM[m - 2 * k] = (-1) ** k * tau(m, k)
        ctx.expect(cheb_half(ChebKind.TMONIC, m), UniPoly(coeffsM), m=m, kind="Tmonic")
        if m:
            coeffsT = [0] * (m + 1)
            for k in range(m // 2 + 1):
                coeffsT[m - 2 * k] = Fraction(m * (-1) ** k * comb(m - k, k), m - k)
            ctx.expect(cheb_half(ChebKind.T, m), UniPoly(coeffsT), m=m, kind="T")


@register("cheb_monomial_expansions", "u^m in the T and U families")
def _(ctx):
    for m in range(11):
        um = UniPoly([0] * m + [1])
        viaT = sum((cheb_half(ChebKind.T, m - 2 * k) * alpha(m, k) for k in range(m // 2 + 1)), UniPoly())
        viaU = sum((cheb_half(ChebKind.U, m - 2 * k) * catalan(m - k, k) for k in range(m // 2 + 1)), UniPoly())
        ctx.expect(viaT, um, m=m, family="T")
        ctx.expect(viaU, um, m=m, family="U")


@register("cheb_duplication", "duplication formulas at t^2 - 2")
def _(ctx):
    d = U * U - 2
    for m in range(9):
        ctx.expect(cheb_half(ChebKind.T, 2 * m), cheb_half(ChebKind.T, m).compose(d), m=m, which="T")
        ctx.expect(cheb_half(ChebKind.U, 2 * m + 1), U * cheb_half(ChebKind.U, m).compose(d), m=m, which="U")
        ctx.expect(cheb_half(ChebKind.T, 2 * m + 1), U * cheb_half(ChebKind.V, m).compose(d), m=m, which="V")
        ctx.expect(cheb_half(ChebKind.U, 2 * m), cheb_half(ChebKind.W, m).compose(d), m=m, which="W")


@register("cheb_V_W_and_U1", "V(-t) = (-1)^m W(t); (t - 2) U1_m = V_{m+1} - 1")
def _(ctx):
    neg = UniPoly((0, -1))
    for m in range(13):
        sign = -1 if m % 2 else 1
        ctx.expect(cheb_half(ChebKind.V, m).compose(neg), cheb_half(ChebKind.W, m) * sign, m=m)
        ctx.expect((U - 2) * cheb_half(ChebKind.U1, m), cheb_half(ChebKind.V, m + 1) - 1, m=m)


@register("cheb_sigma_closed_forms", "both sigma sums equal the U1 coefficients")
def _(ctx):
    for m in range(13):
        poly = cheb_half(ChebKind.U1, m)
        for k in range(m + 1):
            ctx.expect(sigma(m, k), sigma_alt(m, k), m=m, k=k)
            ctx.expect(sigma(m, k), poly.coeffs[k] if k < len(poly.coeffs) else 0, m=m, k=k)


# classical --------------------------------------------------------------

@register("classical_EH_reciprocity", "E(-t) H(t) = 1 up to degree 10")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(1, 11):
            s = sum(
                (base_poly("e", n, k) * base_poly("h", n, m - k) * (-1) ** k for k in range(m + 1)),
                MultiPoly.zero(n),
            )
            ctx.expect(s, MultiPoly.zero(n), n=n, m=m)


@register("classical_newton_identities", "Newton identities for e and h against p")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 2):
        for m in range(1, ctx.bounds.max_deg + 3):
            se = sum(
                (base_poly("e", n, m - i) * base_poly("p", n, i) * (-1) ** (i - 1) for i in range(1, m + 1)),
                MultiPoly.zero(n),
            )
            sh = sum((base_poly("h", n, m - i) * base_poly("p", n, i) for i in range(1, m + 1)), MultiPoly.zero(n))
            ctx.expect(se, base_poly("e", n, m).scale(m), n=n, m=m, basis="e")
            ctx.expect(sh, base_poly("h", n, m).scale(m), n=n, m=m, basis="h")


@register("classical_adjoin_variable_recurrences", "e, h, p after adjoining one variable")
def _(ctx):
    for p in range(1, ctx.bounds.max_n + 1):
        y = MultiPoly.var(p, p + 1)
        for m in range(ctx.bounds.max_deg + 1):
            e1 = base_poly("e", p + 1, m + 1)
            ctx.expect(e1, base_poly("e", p, m + 1).extend(p + 1) + y * base_poly("e", p, m).extend(p + 1), p=p, m=m, kind="e")
            h1 = base_poly("h", p + 1, m + 1)
            ctx.expect(h1, base_poly("h", p, m + 1).extend(p + 1) + y * base_poly("h", p + 1, m), p=p, m=m, kind="h")
            if m:
                ctx.expect(base_poly("p", p + 1, m), base_poly("p", p, m).extend(p + 1) + y ** m, p=p, m=m, kind="p")


@register("classical_schur_bialternant", "Jacobi-Trudi Schur equals the alternant quotient")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for lam in partitions_upto(ctx.bounds.max_deg, max_length=n):
            P = schur(n, lam)
            for x in ctx.points(n):
                num = det_exact([[Fraction(xk) ** (lam[j] + n - 1 - j) for xk in x] for j in range(n)])
                den = det_exact([[Fraction(xk) ** (n - 1 - j) for xk in x] for j in range(n)])
                ctx.expect(P.evaluate(x), Fraction(num) / den, n=n, lam=str(lam), point=x)


def _zeta(m, x):
    return Fraction(x) ** m + Fraction(x) ** (-m) if m > 0 else Fraction(1)


def _odd_power(m, x):
    return Fraction(x) ** m - Fraction(x) ** (-m)


@register("classical_sp_o_bialternant", "sp and o at the symplectic alphabet versus alternant quotients")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        pairing = symplectic_pairing(n)
        for lam in partitions_upto(ctx.bounds.max_deg, max_length=n):
            sp = substitute_symplectic(sp_o_jt("sp", 2 * n, lam), pairing, n)
            o = substitute_symplectic(sp_o_jt("o", 2 * n, lam), pairing, n)
            for _ in range(ctx.bounds.points):
                x, _z = symplectic_point(ctx, n)
                num = det_exact([[_odd_power(lam[j] + n - j, xk) for xk in x] for j in range(n)])
                den = det_exact([[_odd_power(n - j, xk) for xk in x] for j in range(n)])
                ctx.expect(sp.evaluate(x), Fraction(num) / den, n=n, lam=str(lam), x=x, group="sp")
                num = det_exact([[_zeta(lam[j] + n - 1 - j, xk) for xk in x] for j in range(n)])
                den = det_exact([[_zeta(n - 1 - j, xk) for xk in x] for j in range(n)])
                ctx.expect(o.evaluate(x), Fraction(num) / den, n=n, lam=str(lam), x=x, group="o")
