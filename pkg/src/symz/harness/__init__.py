"""Registered property checks with seeded inputs and JSON reports."""
from . import cauchy, checks_core, checks_phi, checks_toeplitz, checks_zfam  # noqa: F401  (registration)
from .cauchy import CauchySetup, cauchy_check, cauchy_sides
from .manifest import MANIFEST
from .randoms import derive_seed, rand_ints, rand_rational, rand_rationals
from .registry import (
    DEFAULT_SEED,
    REGISTRY,
    Bounds,
    CheckFailure,
    CheckReport,
    Context,
    UnknownCheck,
    default_seed,
    register,
    reports_json,
    resolve,
    run_check,
    verify_catalog,
)

__all__ = [
    "Bounds", "CauchySetup", "CheckFailure", "CheckReport", "Context", "DEFAULT_SEED", "MANIFEST",
    "REGISTRY", "UnknownCheck", "cauchy_check", "cauchy_sides", "default_seed", "derive_seed",
    "rand_ints", "rand_rational", "rand_rationals", "register", "reports_json", "resolve",
    "run_check", "verify_catalog",
]
