"""Checks for palindromic symbols and banded symmetric Toeplitz matrices."""
from __future__ import annotations

import itertools
from fractions import Fraction

from ..exactpoly import LaurentPoly, UniPoly
from ..palintoeplitz import (
    ZRootData,
    adjugate_direct,
    adjugate_entry,
    det_factorized,
    det_from_sz,
    elouafi_expansion,
    g_from_symbol,
    mat_vec,
    minor_to_skew,
    minor_via_skew,
    nullvector,
    skew_to_minor,
    symbol_from_zroots,
    sz_rectangle,
    toeplitz_det,
    toeplitz_matrix,
    toeplitz_minor,
)
from ..partition import Partition, skew_contains
from ..zfamilies import sz_at
from .helpers import random_partition
from .registry import register


def _zroots(ctx, n, leading=True):
    a = ctx.rationals(1, True, 6, avoid=(0,))[0] if leading else 1
    return ZRootData(tuple(ctx.rationals(n, True, 9)), a)


@register("toep_symbol_roundtrip", "z-roots to symbol to g and back, and f(t) = t^n g(t + 1/t)")
def _(ctx):
    t = LaurentPoly(1, {(1,): 1})
    w = LaurentPoly(1, {(1,): 1, (-1,): 1})
    for n in range(1, ctx.bounds.max_n + 2):
        for _ in range(ctx.bounds.points):
            zr = _zroots(ctx, n)
            s = symbol_from_zroots(zr.z, zr.leading)
            g = g_from_symbol(s)
            ctx.expect(g, UniPoly.from_roots(zr.z, zr.leading), n=n, z=list(zr.z), leading=zr.leading)
            f = LaurentPoly.constant(zr.leading, 1)
            for zj in zr.z:
                # (t - x)(t - 1/x) = t^2 - z t + 1
                f = f * LaurentPoly(1, {(2,): 1, (1,): -zj, (0,): 1})
            ctx.expect(f, t ** n * g(w), n=n, z=list(zr.z))
            ctx.expect((t ** n * g(w)).terms, {(k + n,): c for (k,), c in s.laurent().terms.items()}, n=n, z=list(zr.z), form="symbol")


@register("toep_det_master", "det T_m(a) = (-1)^(nm) a_n^m sz_(m^n)(z)")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(0, ctx.bounds.max_deg + 3):
            for _ in range(ctx.bounds.points):
                zr = _zroots(ctx, n)
                ctx.expect(toeplitz_det(zr.symbol(), m), det_from_sz(zr, m, sz_rectangle(zr, m)), n=n, m=m, z=list(zr.z), leading=zr.leading)


def _random_index(rng, m, r):
    return tuple(sorted(rng.sample(range(1, m + 1), r)))


@register("toep_minor_shapes", "minors equal signed sz at both skew shapes")
def _(ctx):
    rng = ctx.rng
    for n in range(1, min(ctx.bounds.max_n, 2) + 1):
        for m in range(1, ctx.bounds.max_deg + 1):
            for _ in range(6 * ctx.bounds.points):
                r = rng.randint(0, m)
                rho, sigma = _random_index(rng, m, r), _random_index(rng, m, r)
                zr = _zroots(ctx, n)
                direct = toeplitz_minor(zr.symbol(), m, rho, sigma)
                for which in (1, 2):
                    ctx.expect(minor_via_skew(zr, m, rho, sigma, which), direct, n=n, m=m, rho=rho, sigma=sigma, shape=which, z=list(zr.z))


@register("toep_skew_to_minor_roundtrip", "any skew sz is a signed minor of the monic symbol's matrix")
def _(ctx):
    rng = ctx.rng
    for n in range(1, ctx.bounds.max_n + 1):
        for _ in range(2 * ctx.bounds.points):
            lam = random_partition(rng, 5)
            mu = random_partition(rng, lam.weight(), max(lam.length(), 0) or None)
            if not skew_contains(lam, mu):
                mu = Partition(())
            sk = skew_to_minor(lam, mu, n, None if rng.random() < 0.5 else n + lam.length() + lam[0] + rng.randint(0, 2))
            z = ctx.rationals(n, True, 9)
            zr = ZRootData(tuple(z), 1)
            minor = toeplitz_minor(zr.symbol(), sk.m, sk.rho, sk.sigma)
            ctx.expect(minor, sk.sign * sz_at(z, (lam, mu)), n=n, lam=str(lam), mu=str(mu), m=sk.m, z=z)
            shape = minor_to_skew(n, sk.m, sk.rho, sk.sigma)
            ctx.expect(sz_at(z, shape.shape1) if shape.shape1 else 0, sz_at(z, (lam, mu)), n=n, lam=str(lam), mu=str(mu), form="shape")


@register("toep_factorizations", "Elouafi and Trench products equal the rectangular sz")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(0, ctx.bounds.max_deg + 3):
            for _ in range(ctx.bounds.points):
                z = ctx.rationals(n, True, 9)
                ctx.expect(det_factorized(z, m), sz_rectangle(z, m), n=n, m=m, z=z, route="elouafi")
                while True:
                    u = ctx.rationals(n, True, 9, avoid=(0,))
                    if len({v * v for v in u}) == n:
                        break
                zu = [v * v - 2 for v in u]
                ctx.expect(det_factorized(m=m, route="trench", u=u), sz_rectangle(zu, m), n=n, m=m, u=u, route="trench")


@register("toep_elouafi_expansions", "hz entries expanded over Omega_j with T U and W V products")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for p in range(0, 4):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    for z in ctx.points(n, 2):
                        lhs, rhs = elouafi_expansion("TU", n, p, j, k, z)
                        ctx.expect(lhs, rhs, n=n, p=p, j=j, k=k, z=z, kind="TU")
                        if p >= 1:
                            lhs, rhs = elouafi_expansion("VW", n, p, j, k, z)
                            ctx.expect(lhs, rhs, n=n, p=p, j=j, k=k, z=z, kind="VW")


@register("toep_adjugate", "adjugate entries from skew sz satisfy T adj(T) = det(T) I")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(1, 6):
            zr = _zroots(ctx, n)
            s = zr.symbol()
            adj = [[adjugate_entry(zr, m, p, q) for q in range(1, m + 1)] for p in range(1, m + 1)]
            ctx.expect(adj, adjugate_direct(s, m), n=n, m=m, z=list(zr.z))
            T = toeplitz_matrix(s, m)
            det = toeplitz_det(s, m)
            prod_ = [[sum(T[i][l] * adj[l][j] for l in range(m)) for j in range(m)] for i in range(m)]
            ident = [[det if i == j else 0 for j in range(m)] for i in range(m)]
            ctx.expect(prod_, ident, n=n, m=m, z=list(zr.z))


# singular symbols with rational z-roots, found by direct search
SINGULAR_CASES = (
    ((0,), 1),
    ((1,), 2),
    ((-1,), 2),
    ((0,), 3),
    ((1,), 5),
    ((-1,), 5),
    ((0,), 5),
    ((1, -2), 1),
)


def _singular_cases(max_m):
    """Rational z-root tuples with a singular T_m, small n first."""
    found = list(SINGULAR_CASES)
    vals = [Fraction(a, b) for a in range(-3, 4) for b in (1, 2)]
    for n in (1, 2):
        for z in itertools.combinations(sorted(set(vals)), n):
            for m in range(1, max_m + 1):
                if (z, m) not in found and toeplitz_det(ZRootData(z).symbol(), m) == 0:
                    found.append((z, m))
    return found


@register("toep_nullvector", "the sz vector lies in the kernel of a singular T_m")
def _(ctx):
    for z, m in _singular_cases(5):
        zr = ZRootData(tuple(z), 1)
        v = nullvector(zr, m)
        ctx.expect(mat_vec(toeplitz_matrix(zr.symbol(), m), v), [0] * m, z=list(z), m=m)


# z = (-1, 1) gives v = 0 at m = 4 and m = 5, the latter with a one-dimensional kernel
@register("toep_nullvector_nonzero", "the sz kernel vector is never zero", expected_fail=True)
def _(ctx):
    for z, m in _singular_cases(5):
        v = nullvector(ZRootData(tuple(z), 1), m)
        ctx.expect_true(any(v), "null vector is zero", z=list(z), m=m)
