"""Checks for Phi_n: oracle agreement, algebra structure, worked examples."""
from __future__ import annotations

from ..chebyshev import tau
from ..classical import base_poly, monomial_symmetric
from ..exactpoly import MultiPoly
from ..phi import laurent_check, phi, phi_odd
from .helpers import random_symmetric
from .registry import register


@register("phi_laurent_oracle", "phi output equals the Laurent expansion and is the only candidate")
def _(ctx):
    rng = ctx.rng
    for n in range(1, ctx.bounds.max_n + 1):
        N = 2 * n
        inputs = [(f"{k}{m}", base_poly(k, N, m)) for k in "ehp" for m in range(ctx.bounds.max_deg + 1)]
        inputs += [(f"random{i}", random_symmetric(rng, N, 5)) for i in range(4 * ctx.bounds.points)]
        for label, P in inputs:
            Q = phi(P, n)
            ctx.expect(laurent_check(P, Q, n), True, n=n, input=label, P=P, Q=Q)
            # any other candidate must be rejected
            bump = random_symmetric(rng, n, 3, terms=1)
            if bump:
                ctx.expect(laurent_check(P, Q + bump, n), False, n=n, input=label, bump=bump)
        for label, P in [("e1", base_poly("e", N + 1, 1)), ("random", random_symmetric(rng, N + 1, 4))]:
            Q = phi_odd(P, n)
            ctx.expect(laurent_check(P, Q, n, odd=True), True, n=n, input=label, odd=True)


@register("phi_homomorphism", "phi respects sums and products")
def _(ctx):
    rng = ctx.rng
    for n in range(1, ctx.bounds.max_n + 1):
        for _ in range(4 * ctx.bounds.points):
            P, Q = random_symmetric(rng, 2 * n, 5), random_symmetric(rng, 2 * n, 5)
            ctx.expect(phi(P * Q, n), phi(P, n) * phi(Q, n), n=n, P=P, Q=Q, op="mul")
            ctx.expect(phi(P + Q, n), phi(P, n) + phi(Q, n), n=n, P=P, Q=Q, op="add")


@register("phi_surjectivity_witness", "the preimage built from the inverse e-expansion maps to e_m")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        for m in range(n + 1):
            pre = MultiPoly.zero(2 * n)
            for k in range(m // 2 + 1):
                pre = pre + base_poly("e", 2 * n, m - 2 * k).scale((-1) ** k * tau(n - m + 2 * k, k))
            ctx.expect(phi(pre, n), base_poly("e", n, m), n=n, m=m)


@register("phi_non_injective", "e_2n and 1 have the same image, and likewise on the odd alphabet")
def _(ctx):
    for n in range(1, ctx.bounds.max_n + 1):
        ctx.expect(phi(base_poly("e", 2 * n, 2 * n), n), phi(MultiPoly.constant(1, 2 * n), n), n=n)
        ctx.expect(phi_odd(base_poly("e", 2 * n + 1, 2 * n + 1), n), phi_odd(MultiPoly.constant(1, 2 * n + 1), n), n=n, odd=True)


@register("phi_worked_examples", "a homogeneous input with an inhomogeneous image")
def _(ctx):
    P = monomial_symmetric(4, (2,)) + monomial_symmetric(4, (1, 1)).scale(5)
    z1, z2 = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    ctx.expect(phi(P, 2), z1 * z1 + z2 * z2 + z1 * z2 * 5 + 6, P=P)
    ctx.expect(str(phi(P, 2)), "z1^2 + 5*z1*z2 + z2^2 + 6", P=P, form="text")
