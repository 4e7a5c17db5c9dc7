"""Checks for the z-families: oracle, explicit formulas, bialternants, bases."""
from __future__ import annotations

from fractions import Fraction

from ..chebyshev import ChebKind, cheb_half, sigma
from ..classical import base_poly, schur, skew_schur_jt, sp_o_jt
from ..exactpoly import MultiPoly, _norm, det_exact
from ..partition import Partition, SkewPartition, partitions_upto
from ..phi import laurent_check
from ..zfamilies import (
    BASIS_FAMILIES,
    INVERSE_KINDS,
    ZFamilyKind,
    bialternant_denominator,
    bialternant_eval,
    cheb_alternant,
    classical_target,
    det_family,
    duplication_quotient,
    duplication_target,
    expand_in_basis,
    omega_j,
    omega_pz,
    omega_pz_closed_form,
    reassemble,
    spz_oz_jt,
    sz_skew,
    transition_matrix,
    vandermonde,
    zbase,
    zseq,
)
from .helpers import classical_value, random_partition, random_symmetric, symplectic_alphabet, symplectic_point
from .registry import register

_CLASSICAL_LETTER = {
    ZFamilyKind.EZ: "e",
    ZFamilyKind.HZ: "h",
    ZFamilyKind.PZ: "p",
    ZFamilyKind.EZ_ODD: "e",
    ZFamilyKind.HZ_ODD: "h",
    ZFamilyKind.PZ_ODD: "p",
}
_ODD_KINDS = (ZFamilyKind.EZ_ODD, ZFamilyKind.HZ_ODD, ZFamilyKind.PZ_ODD)


def _sum(polys, n):
    return sum(polys, MultiPoly.zero(n))


def _cheb_at_var(kind, m, j, n) -> MultiPoly:
    return MultiPoly.zero(n) + cheb_half(kind, m)(MultiPoly.var(j, n))


# above this weight the classical side is evaluated at points instead of expanded
SYMBOLIC_WEIGHT = 6


def _expect_numeric(ctx, group, lam, Q, n, odd):
    for _ in range(ctx.bounds.points):
        x, z = symplectic_point(ctx, n)
        want = classical_value(group, lam, symplectic_alphabet(x, odd))
        ctx.expect(Q.evaluate(z), want, n=n, odd=odd, group=group, lam=str(lam), x=x)


@register("zfam_master_oracle", "every z-family agrees with the Laurent expansion of its classical source")
def _(ctx):
    D = ctx.bounds.max_deg
    for n in range(1, ctx.bounds.max_n + 1):
        for kind in ZFamilyKind:
            odd = kind in _ODD_KINDS
            N = 2 * n + odd
            top = {ZFamilyKind.EZ: 2 * n, ZFamilyKind.EZ_ODD: 2 * n + 1}.get(kind, D)
            for m in range(min(top, D) + 1):
                P = base_poly(_CLASSICAL_LETTER[kind], N, m)
                ctx.expect(laurent_check(P, zbase(kind, n, m), n, odd), True, n=n, kind=kind.value, m=m)
        for odd in (False, True):
            N = 2 * n + odd
            for lam in partitions_upto(D, max_length=N + 1):
                Q = sz_skew(n, lam, odd)
                if lam.weight() <= SYMBOLIC_WEIGHT:
                    ctx.expect(laurent_check(schur(N, lam), Q, n, odd), True, n=n, odd=odd, lam=str(lam))
                else:
                    _expect_numeric(ctx, "s", lam, Q, n, odd)
            for _ in range(ctx.bounds.points):
                lam = random_partition(ctx.rng, min(D, SYMBOLIC_WEIGHT), N, min_weight=1)
                mu = random_partition(ctx.rng, lam.weight(), lam.length())
                if not all(mu[i] <= lam[i] for i in range(mu.length())):
                    continue
                shape = SkewPartition(lam, mu)
                ctx.expect(
                    laurent_check(skew_schur_jt(N, shape), sz_skew(n, shape, odd), n, odd), True, n=n, odd=odd, shape=str(shape)
                )
            for lam in partitions_upto(D, max_length=n):
                for group in ("sp", "o"):
                    zkind = group + "z" + ("odd" if odd else "")
                    Q = spz_oz_jt(zkind, n, lam)
                    if lam.weight() <= SYMBOLIC_WEIGHT:
                        P = sp_o_jt(group, N, lam, check=False)
                        ctx.expect(laurent_check(P, Q, n, odd), True, n=n, kind=zkind, lam=str(lam))
                    else:
                        _expect_numeric(ctx, group, lam, Q, n, odd)


@register("zfam_ez_symmetry", "ez_{2n-m} = ez_m")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 2):
        for m in range(2 * n + 1):
            ctx.expect(zbase("ez", n, 2 * n - m), zbase("ez", n, m), n=n, m=m)


@register("zfam_generating_functions", "E~ is prod(1 + z t + t^2) and E~(-t) H~(t) = 1")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        t = MultiPoly.var(n, n + 1)
        prod_ = MultiPoly.constant(1, n + 1)
        for j in range(n):
            prod_ = prod_ * (1 + MultiPoly.var(j, n + 1) * t + t * t)
        series = _sum([zbase("ez", n, k).extend(n + 1) * t ** k for k in range(2 * n + 1)], n + 1)
        ctx.expect(series, prod_, n=n)
        for m in range(1, 11):
            ez, hz = zseq("ez", n), zseq("hz", n)
            s = _sum([ez(k) * hz(m - k) * (-1) ** k for k in range(m + 1)], n)
            ctx.expect(s, MultiPoly.zero(n), n=n, m=m)


def _compositions(m, n):
    if n == 1:
        yield (m,)
        return
    for a in range(m + 1):
        for rest in _compositions(m - a, n - 1):
            yield (a,) + rest


@register("zfam_hz_compositions_of_U", "hz_m as a sum over compositions of products of U")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(ctx.bounds.max_deg + 1):
            total = MultiPoly.zero(n)
            for alpha in _compositions(m, n):
                term = MultiPoly.constant(1, n)
                for j, a in enumerate(alpha):
                    term = term * _cheb_at_var(ChebKind.U, a, j, n)
                total = total + term
            ctx.expect(total, zbase("hz", n, m), n=n, m=m)


def _omega_sum(kind, s, z):
    return _norm(sum((Fraction(cheb_half(kind, s)(zj)) / omega_j(z, j) for j, zj in enumerate(z)), Fraction(0)))


def _u_quotient(top, z):
    n = len(z)
    return Fraction(cheb_alternant(ChebKind.U, [top] + [n - 1 - j for j in range(1, n)], z)) / vandermonde(z)


@register("zfam_hz_sum_U_over_omega", "hz_m = sum_j U_{m+n-1}(z_j) / Omega_j and the matching determinant form")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(ctx.bounds.max_deg + 1):
            P = zbase("hz", n, m)
            for z in ctx.points(n):
                ctx.expect(_omega_sum(ChebKind.U, m + n - 1, z), P.evaluate(z), n=n, m=m, z=z)
                ctx.expect(_norm(_u_quotient(m + n - 1, z)), P.evaluate(z), n=n, m=m, z=z, form="det")


@register("zfam_low_degree_omega_sums", "power and U sums over Omega_j vanish in low degree")
def _(ctx):
    for n in range(2, 6):
        for s in range(n - 1):
            for z in ctx.points(n):
                ctx.expect(_norm(sum((Fraction(zj) ** s / omega_j(z, j) for j, zj in enumerate(z)), Fraction(0))), 0, n=n, s=s, z=z)
                ctx.expect(_omega_sum(ChebKind.U, s, z), 0, n=n, s=s, z=z, family="U")


@register("zfam_ez_hz_as_det", "ez and hz as Chebyshev determinants over the Vandermonde")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(n + 1):
            idx = [i for i in range(n, -1, -1) if i != n - m]
            P = zbase("ez", n, m)
            for z in ctx.points(n):
                val = Fraction(cheb_alternant(ChebKind.TMONIC, idx, z)) / vandermonde(z)
                ctx.expect(_norm(val), P.evaluate(z), n=n, m=m, z=z, family="ez")
        for m in range(ctx.bounds.max_deg + 1):
            P = zbase("hz", n, m)
            for z in ctx.points(n):
                ctx.expect(_norm(_u_quotient(m + n - 1, z)), P.evaluate(z), n=n, m=m, z=z, family="hz")


@register("zfam_jt_special_shapes", "ez and hz through one-row and one-column spz and oz")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        ez = zseq("ez", n)
        for m in range(n + 1):
            col = Partition((1,) * m)
            ctx.expect(spz_oz_jt("oz", n, col), ez(m), n=n, m=m, form="oz column")
            ctx.expect(spz_oz_jt("spz", n, col), ez(m) - ez(m - 2), n=n, m=m, form="spz column")
            s = _sum([spz_oz_jt("spz", n, Partition((1,) * (m - 2 * k))) for k in range(m // 2 + 1)], n)
            ctx.expect(s, ez(m), n=n, m=m, form="spz column sum")
        for m in range(ctx.bounds.max_deg + 1):
            hz = zbase("hz", n, m)
            ctx.expect(spz_oz_jt("spz", n, Partition((m,))), hz, n=n, m=m, form="spz row")
            s = _sum([spz_oz_jt("oz", n, Partition((m - 2 * k,))) for k in range(m // 2 + 1)], n)
            ctx.expect(s, hz, n=n, m=m, form="oz row sum")


@register("zfam_ez_hz_adjoin_recurrences", "ez and hz after adjoining one or two variables")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        N = n + 2
        a, b = MultiPoly.var(n, N), MultiPoly.var(n + 1, N)
        swap = list(range(n)) + [n + 1, n]

        def lift(kind, size, m, other=False):
            if m < 0:
                return MultiPoly.zero(N)
            top = 2 * size if kind == "ez" else None
            if top is not None and m > top:
                return MultiPoly.zero(N)
            P = zbase(kind, size, m).extend(N)
            return P.permute(swap) if other else P

        for m in range(ctx.bounds.max_deg + 1):
            ctx.expect(
                lift("ez", n + 1, m + 2), lift("ez", n, m + 2) + a * lift("ez", n, m + 1) + lift("ez", n, m), n=n, m=m, rule="ez sum"
            )
            ctx.expect(
                lift("ez", n + 1, m + 1) - lift("ez", n + 1, m + 1, True), (a - b) * lift("ez", n, m), n=n, m=m, rule="ez dif"
            )
            ctx.expect(
                lift("hz", n + 1, m + 2), lift("hz", n, m + 2) + a * lift("hz", n + 1, m + 1) - lift("hz", n + 1, m), n=n, m=m, rule="hz lower"
            )
            ctx.expect(
                lift("hz", n + 1, m + 1) - lift("hz", n + 1, m + 1, True), (a - b) * zbase("hz", N, m), n=n, m=m, rule="hz subs"
            )


@register("zfam_odd_even_links", "odd-alphabet families from the even ones")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        ez, ezo = zseq("ez", n), zseq("ezodd", n)
        for m in range(2 * n + 1):
            ctx.expect(ezo(m + 1), ez(m + 1) + ez(m), n=n, m=m, kind="ez")
        for m in range(ctx.bounds.max_deg + 1):
            ctx.expect(zbase("hzodd", n, m + 1), zbase("hz", n, m + 1) + zbase("hzodd", n, m), n=n, m=m, kind="hz")
            ctx.expect(zbase("pzodd", n, m), zbase("pz", n, m) + 1, n=n, m=m, kind="pz")


@register("zfam_hz_odd_forms", "hzodd through spz rows, U1 quotients and sigma-weighted h")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(ctx.bounds.max_deg + 1):
            target = zbase("hzodd", n, m)
            ctx.expect(_sum([spz_oz_jt("spz", n, Partition((k,))) for k in range(m + 1)], n), target, n=n, m=m, form="spz")
            viah = _sum([base_poly("h", n, k).scale(sigma(m + n - 1, k + n - 1)) for k in range(m + 1)], n)
            ctx.expect(viah, target, n=n, m=m, form="sigma")
            for z in ctx.points(n):
                ctx.expect(_omega_sum(ChebKind.U1, m + n - 1, z), target.evaluate(z), n=n, m=m, z=z, form="U1")


@register("zfam_pz_forms", "pz and pzodd as sums of T over the variables")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(ctx.bounds.max_deg + 1):
            viaT = _sum([_cheb_at_var(ChebKind.T, m, j, n) for j in range(n)], n)
            ctx.expect(zbase("pz", n, m), viaT, n=n, m=m)
            ctx.expect(zbase("pzodd", n, m), viaT + 1, n=n, m=m, odd=True)


@register("zfam_bialternant_vs_jt", "Chebyshev bialternants, Jacobi-Trudi and the classical side agree")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for lam in partitions_upto(ctx.bounds.max_deg, max_length=n):
            polys = {k: det_family(k, n, lam) for k in ("spz", "oz", "spzodd", "ozodd", "ozoddneg")}
            sign = -1 if lam.weight() % 2 else 1
            for _ in range(ctx.bounds.points):
                x, z = symplectic_point(ctx, n)
                even, odd = symplectic_alphabet(x), symplectic_alphabet(x, True)
                neg = symplectic_alphabet([-v for v in x], True)
                classical = {
                    "spz": classical_value("sp", lam, even),
                    "oz": classical_value("o", lam, even),
                    "spzodd": classical_value("sp", lam, odd),
                    "ozodd": classical_value("o", lam, odd),
                    "ozoddneg": sign * classical_value("o", lam, neg),
                }
                for kind, P in polys.items():
                    q = bialternant_eval(kind, n, lam, z)
                    ctx.expect(q, P.evaluate(z), n=n, kind=kind, lam=str(lam), z=z, side="jt")
                    ctx.expect(q, classical[kind], n=n, kind=kind, lam=str(lam), x=x, side="classical")


@register("zfam_zero_partition_denominators", "all five empty-partition alternants equal the Vandermonde")
def _(ctx):
    for n in range(1, 6):
        for z in ctx.points(n):
            van = vandermonde(z)
            for kind in (ChebKind.TMONIC, ChebKind.U, ChebKind.V, ChebKind.W, ChebKind.U1):
                ctx.expect(bialternant_denominator(kind, n, z), van, n=n, kind=kind.value, z=z)


def _u_point(ctx, n):
    while True:
        u = ctx.rationals(n, True, 9, avoid=(0,))
        if len({v * v for v in u}) == n:
            return u


@register("zfam_duplication", "duplicated-index quotients reproduce the z-side at u^2 - 2")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for lam in partitions_upto(ctx.bounds.max_deg, max_length=n):
            for kind in ("spz", "oz", "ozodd", "ozoddneg"):
                for _ in range(ctx.bounds.points):
                    for _attempt in range(20):
                        u = _u_point(ctx, n)
                        try:
                            q = duplication_quotient(kind, n, lam, u)
                            break
                        except ZeroDivisionError:
                            continue
                    ctx.expect(q, duplication_target(kind, n, lam, u), n=n, kind=kind, lam=str(lam), u=u)


@register("zfam_sz_symmetry", "sz of an (n+k)-row shape equals sz of its folded shape")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for k in range(1, n + 1):
            for lam in partitions_upto(ctx.bounds.max_deg, max_length=n + k):
                if not lam.length() or lam[0] > 3:
                    continue
                l1 = lam[0]
                mu = Partition((l1,) * (n - k) + tuple(l1 - lam[i] for i in range(n + k - 1, 0, -1)))
                ctx.expect(sz_skew(n, lam), sz_skew(n, mu), n=n, k=k, lam=str(lam), mu=str(mu))


def _lr(lam, mu):
    N = lam.weight() + mu.weight()
    return expand_in_basis(schur(N, lam) * schur(N, mu), "s", N, N)


@register("zfam_lr_product_rule", "sz products follow the classical Littlewood-Richardson rule")
def _(ctx):
    w = min(ctx.bounds.max_deg, 6)
    parts = [p for p in partitions_upto(w) if p.length()]
    for lam in parts:
        for mu in parts:
            if mu > lam or lam.weight() + mu.weight() > w:
                continue
            lr = _lr(lam, mu)
            ctx.expect_true(all(isinstance(c, int) and c > 0 for c in lr.values()), "LR coefficients not positive integers", lam=str(lam), mu=str(mu))
            for n in range(1, ctx.bounds.max_n + 1):
                prod_ = sz_skew(n, lam) * sz_skew(n, mu)
                rhs = _sum([sz_skew(n, nu).scale(c) for nu, c in lr.items()], n)
                ctx.expect(prod_, rhs, n=n, lam=str(lam), mu=str(mu))
                if all(nu.length() <= n for nu in lr):
                    ctx.expect(expand_in_basis(prod_, "sz", n), lr, n=n, lam=str(lam), mu=str(mu), form="basis")


@register("zfam_littlewood_expansion", "sz in the spz and oz bases: nonnegative and stable in n")
def _(ctx):
    w = min(ctx.bounds.max_deg, 4)
    for lam in partitions_upto(w):
        if not lam.length():
            continue
        for family in ("spz", "oz"):
            ref = None
            for n in range(lam.length(), lam.length() + 3):
                coeffs = expand_in_basis(sz_skew(n, lam), family, n)
                ctx.expect_true(
                    all(isinstance(c, int) and c > 0 for c in coeffs.values()),
                    "expansion coefficient not a positive integer",
                    lam=str(lam), family=family, n=n, coeffs=coeffs,
                )
                if ref is None:
                    ref = coeffs
                ctx.expect(coeffs, ref, lam=str(lam), family=family, n=n)


@register("zfam_sz21_example", "sz_(2,1) in two variables: explicit form and the special quotient")
def _(ctx):
    z1, z2 = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    P = sz_skew(2, Partition((2, 1)))
    ctx.expect(P, z1 * z1 * z2 + z1 * z2 * z2 + z1 + z2)
    for _ in range(ctx.bounds.points):
        a, b = ctx.rationals(2)
        if a * b == 1:
            continue
        num = det_exact([[a ** 4 + 1, b ** 4 + 1], [a * a, b * b]])
        den = det_exact([[a * a + 1, b * b + 1], [a, b]])
        ctx.expect(_norm(Fraction(num) / den), P.evaluate([a, b]), z=[a, b])


@register("zfam_generating_set_roundtrip", "e, h, p rebuilt from ez, hz, pz through the inverse tables")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 2):
        for kind in INVERSE_KINDS:
            top = n if kind == "e_from_ez" else ctx.bounds.max_deg
            for m in range(top + 1):
                ctx.expect(reassemble(kind, n, m), classical_target(kind, n, m), n=n, kind=kind, m=m)


@register("omega_pz_p_basis", "omega applied through the p-basis: odd fixed points and the m = 2 value")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(ctx.bounds.max_deg + 1):
            if m % 2:
                ctx.expect(omega_pz(n, m), zbase("pz", n, m), n=n, m=m)
        ctx.expect(omega_pz(n, 2), -zbase("pz", n, 2) - zbase("pz", n, 0).scale(2), n=n, m=2)
        ctx.expect(omega_pz(n, 0), zbase("pz", n, 0), n=n, m=0)


@register("omega_palpowersum_closed_form", "published closed form for omega(pz_m); known to disagree", expected_fail=True)
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(1, ctx.bounds.max_deg + 1):
            ctx.expect(omega_pz_closed_form(n, m), omega_pz(n, m), n=n, m=m)


@register("zfam_basis_transition", "each family's transition matrix to monomials is square and invertible")
def _(ctx):
    w = min(ctx.bounds.max_deg, 5)
    for n in range(1, ctx.bounds.max_n + 1):
        for family in BASIS_FAMILIES:
            index, rows = transition_matrix(family, n, w)
            ctx.expect_true(len(rows) == len(index) and all(len(r) == len(index) for r in rows), "not square", n=n, family=family.value)
            for _ in range(2 * ctx.bounds.points):
                target = random_symmetric(ctx.rng, n, w, terms=3)
                coeffs = expand_in_basis(target, family, n, w)
                back = _sum([det_family(family, n, lam).scale(c) for lam, c in coeffs.items()], n)
                ctx.expect(back, target, n=n, family=family.value, target=target)
