"""Seeded random rationals for property checks."""
from __future__ import annotations

import hashlib
import random
from fractions import Fraction
from functools import lru_cache

from ..exactpoly import _norm


def derive_seed(seed: int, *labels) -> int:
    """Stable 64-bit seed for a (seed, label...) combination."""
    text = ":".join([str(seed), *map(str, labels)])
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


@lru_cache(maxsize=None)
def _space_size(bound: int) -> int:
    return len({Fraction(a, b) for a in range(-bound, bound + 1) for b in range(1, bound + 1)})


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def rand_rational(rng: random.Random, bound: int):
    return _norm(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))


def rand_rationals(count: int, seed, constraint: str = "any", bound: int = 10, avoid=()) -> list:
    """``count`` rationals with |num|, den <= bound; pairwise distinct if asked."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    if bound < 1:
        raise ValueError("bound must be positive")
    if constraint not in ("any", "distinct"):
        raise ValueError(f"unknown constraint {constraint!r}")
    rng = _rng(seed)
    if constraint == "any":
        return [rand_rational(rng, bound) for _ in range(count)]
    avoid = {Fraction(a) for a in avoid}
    inside = sum(1 for a in avoid if abs(a.numerator) <= bound and a.denominator <= bound)
    room = (_space_size(bound) if bound <= 60 else float("inf")) - inside
    if count > room:
        raise ValueError(f"cannot draw {count} distinct rationals with bound {bound}")
    out: list = []
    seen = set(avoid)
    while len(out) < count:
        v = rand_rational(rng, bound)
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def rand_ints(count: int, seed, lo: int, hi: int) -> list[int]:
    rng = _rng(seed)
    return [rng.randint(lo, hi) for _ in range(count)]
