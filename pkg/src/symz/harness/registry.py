"""Named identity checks, their reports, and the catalog runner."""
from __future__ import annotations

import json
import os
import random
import time
from dataclasses import asdict, dataclass
from typing import Callable, Iterable

from ..exactpoly import MultiPoly, format_rational, is_scalar
from .randoms import derive_seed, rand_rationals

DEFAULT_SEED = 20240601


def default_seed() -> int:
    env = os.environ.get("SYMZ_SEED")
    return int(env) if env else DEFAULT_SEED


@dataclass(frozen=True)
class Bounds:
    max_n: int = 3
    max_deg: int = 6
    points: int = 5


@dataclass(frozen=True)
class CheckSpec:
    name: str
    anchor: str
    fn: Callable
    expected_fail: bool = False


@dataclass
class CheckReport:
    name: str
    params: dict
    status: str
    expected_fail: bool = False
    cases: int = 0
    counterexample: dict | None = None
    wall_time: float = 0.0

    def __post_init__(self):
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    @property
    def ok(self) -> bool:
        """True when the outcome matches expectations."""
        return (self.status == "fail") if self.expected_fail else (self.status == "pass")

    def to_json(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("wall_time")
        return d

    def line(self) -> str:
        tag = self.status.upper()
        if self.expected_fail:
            tag = "XFAIL" if self.status == "fail" else "XPASS"
        return f"{tag:5s} {self.name} ({self.cases} cases, {self.wall_time:.2f}s)"


class CheckFailure(Exception):
    def __init__(self, counterexample: dict):
        super().__init__(counterexample.get("message", "identity failed"))
        self.counterexample = counterexample


class UnknownCheck(KeyError):
    pass


def render(value):
    """JSON-friendly rendering of exact values for counterexamples."""
    if isinstance(value, MultiPoly):
        return str(value)
    if isinstance(value, (bool, int)):
        return value
    if is_scalar(value):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    return str(value)


class Context:
    """What a check function receives: seeded randomness, bounds, assertions."""

    def __init__(self, name: str, seed: int, bounds: Bounds):
        self.name = name
        self.seed = seed
        self.bounds = bounds
        self.rng = random.Random(derive_seed(seed, name))
        self.cases = 0

    def expect(self, lhs, rhs, **inputs):
        self.cases += 1
        if lhs != rhs:
            raise CheckFailure({"inputs": render(inputs), "lhs": render(lhs), "rhs": render(rhs)})

    def expect_true(self, cond: bool, message: str = "condition failed", **inputs):
        self.cases += 1
        if not cond:
            raise CheckFailure({"inputs": render(inputs), "message": message})

    def rationals(self, count: int, distinct: bool = True, bound: int = 12, avoid=()) -> list:
        return rand_rationals(count, self.rng, "distinct" if distinct else "any", bound, avoid)

    def points(self, n: int, count: int | None = None, bound: int = 12, avoid=()) -> list[list]:
        """``count`` random points with n pairwise distinct coordinates."""
        count = self.bounds.points if count is None else count
        return [self.rationals(n, True, bound, avoid) for _ in range(count)]


REGISTRY: dict[str, CheckSpec] = {}


def register(name: str, anchor: str, expected_fail: bool = False):
    def deco(fn):
        if name in REGISTRY:
            raise ValueError(f"check {name!r} registered twice")
        REGISTRY[name] = CheckSpec(name, anchor, fn, expected_fail)
        return fn

    return deco


def run_check(name: str, seed: int | None = None, bounds: Bounds | None = None) -> CheckReport:
    if name not in REGISTRY:
        raise UnknownCheck(name)
    entry = REGISTRY[name]
    seed = default_seed() if seed is None else seed
    bounds = bounds or Bounds()
    ctx = Context(name, seed, bounds)
    params = {**asdict(bounds), "seed": seed}
    start = time.perf_counter()
    try:
        entry.fn(ctx)
        status, cex = "pass", None
    except CheckFailure as exc:
        status, cex = "fail", exc.counterexample
    except (ArithmeticError, ValueError) as exc:
        status, cex = "fail", {"error": f"{type(exc).__name__}: {exc}"}
    elapsed = time.perf_counter() - start
    return CheckReport(name, params, status, entry.expected_fail, ctx.cases, cex, round(elapsed, 4))


def resolve(selection) -> list[str]:
    if selection is None or selection == "all" or selection == ["all"]:
        return sorted(REGISTRY)
    if isinstance(selection, str):
        selection = [s for s in selection.split(",") if s]
    unknown = [s for s in selection if s not in REGISTRY]
    if unknown:
        raise UnknownCheck(", ".join(unknown))
    return sorted(set(selection))


def verify_catalog(selection="all", seed: int | None = None, bounds: Bounds | None = None) -> tuple[list[CheckReport], int]:
    """Run the selected checks; exit status 0 iff every outcome is as expected, 2 on bad names."""
    try:
        names = resolve(selection)
    except UnknownCheck:
        return [], 2
    reports = [run_check(n, seed, bounds) for n in names]
    return reports, 0 if all(r.ok for r in reports) else 1


def reports_json(reports: Iterable[CheckReport], timing: bool = True) -> str:
    return json.dumps([r.to_json(timing) for r in reports], indent=2, sort_keys=True)
