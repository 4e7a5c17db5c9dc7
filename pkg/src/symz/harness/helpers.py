"""Shared generators and numeric oracles used by the check catalog."""
from __future__ import annotations

from fractions import Fraction

from ..classical import jt_minus, jt_plus, jt_skew, monomial_symmetric
from ..exactpoly import MultiPoly, _norm
from ..partition import Partition, partitions_upto


def random_partition(rng, max_weight: int, max_length: int | None = None, min_weight: int = 0) -> Partition:
    pool = [p for p in partitions_upto(max_weight, max_length=max_length) if p.weight() >= min_weight]
    return rng.choice(pool)


def random_symmetric(rng, N: int, max_deg: int, terms: int = 3, coeff: int = 5) -> MultiPoly:
    """A random symmetric polynomial in N variables as a sum of monomial symmetric terms."""
    pool = partitions_upto(max_deg, max_length=N)
    out = MultiPoly.zero(N)
    for _ in range(terms):
        c = rng.randint(-coeff, coeff) or 1
        out = out + monomial_symmetric(N, rng.choice(pool)).scale(c)
    return out


def random_poly(rng, nvars: int, max_deg: int, terms: int = 4, coeff: int = 5) -> MultiPoly:
    out = {}
    for _ in range(terms):
        budget = rng.randint(0, max_deg) if nvars else 0
        e = [0] * nvars
        for _ in range(budget):
            e[rng.randrange(nvars)] += 1
        out[tuple(e)] = rng.randint(-coeff, coeff)
    return MultiPoly(nvars, out)


def alphabet_h(alphabet, degree: int) -> list:
    """h_0..h_degree of a list of exact numbers, from 1 / prod(1 - a t)."""
    e = [Fraction(1)]
    for a in alphabet:
        e = [x + Fraction(a) * y for x, y in zip(e + [0], [0] + e)]
    h = [Fraction(1)]
    for k in range(1, degree + 1):
        s = sum(((-1) ** (i - 1) * e[i] * h[k - i] for i in range(1, min(k, len(e) - 1) + 1)), Fraction(0))
        h.append(s)
    return h


def classical_value(group: str, lam, alphabet):
    """s, sp or o of a partition at a numeric alphabet, through h-Jacobi-Trudi."""
    lam = Partition(tuple(lam))
    l = lam.length()
    h = alphabet_h(alphabet, (lam[0] if l else 0) + l + 2)

    def seq(k):
        return h[k] if 0 <= k < len(h) else 0

    if group == "s":
        out = jt_skew(seq, lam.padded(l), (0,) * l)
    elif group == "sp":
        out = jt_plus(seq, lam.parts)
    elif group == "o":
        out = jt_minus(seq, lam.parts)
    else:
        raise ValueError(group)
    return _norm(Fraction(out))


def symplectic_point(ctx, n: int, bound: int = 9):
    """Rational x with distinct nonzero z_j = x_j + 1/x_j, avoiding x = +-1."""
    while True:
        x = ctx.rationals(n, True, bound, avoid=(0, 1, -1))
        z = [_norm(Fraction(v) + 1 / Fraction(v)) for v in x]
        if len(set(z)) == n and 0 not in z:
            return x, z


def symplectic_alphabet(x, odd: bool = False) -> list:
    out = [Fraction(v) for v in x] + [1 / Fraction(v) for v in x]
    return out + [Fraction(1)] if odd else out
