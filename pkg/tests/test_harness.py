import random
from fractions import Fraction

import pytest

from symz.exactpoly import MultiPoly
from symz.harness import (
    REGISTRY,
    Bounds,
    CauchySetup,
    CheckFailure,
    CheckReport,
    Context,
    UnknownCheck,
    cauchy_check,
    cauchy_sides,
    derive_seed,
    rand_rationals,
    register,
    resolve,
    run_check,
    verify_catalog,
)


def test_rand_rationals_contract():
    assert rand_rationals(0, 5, "any", 3) == []
    a = rand_rationals(3, 42, "distinct", 100)
    assert a == rand_rationals(3, 42, "distinct", 100)
    assert len(set(a)) == 3
    assert all(abs(Fraction(v).numerator) <= 100 and Fraction(v).denominator <= 100 for v in a)
    # bound 1 leaves only -1, 0, 1
    assert sorted(rand_rationals(3, 7, "distinct", 1)) == [-1, 0, 1]
    with pytest.raises(ValueError):
        rand_rationals(4, 7, "distinct", 1)
    with pytest.raises(ValueError):
        rand_rationals(2, 7, "distinct", 1, avoid=(0, 1))
    with pytest.raises(ValueError):
        rand_rationals(-1, 7)
    with pytest.raises(ValueError):
        rand_rationals(1, 7, "sorted")


def test_rand_rationals_accepts_rng_and_avoid():
    rng = random.Random(3)
    vals = rand_rationals(20, rng, "distinct", 4, avoid=(0, 1, -1))
    assert not {0, 1, -1} & set(vals)


def test_derive_seed_is_stable_and_label_sensitive():
    assert derive_seed(1, "a") == derive_seed(1, "a")
    assert derive_seed(1, "a") != derive_seed(1, "b")
    assert derive_seed(1, "a") != derive_seed(2, "a")


def test_report_invariants():
    with pytest.raises(ValueError):
        CheckReport("x", {}, "fail")
    r = CheckReport("x", {}, "fail", expected_fail=True, counterexample={"lhs": "1"})
    assert r.ok and r.line().startswith("XFAIL")
    assert not CheckReport("x", {}, "pass", expected_fail=True).ok
    assert "wall_time" not in CheckReport("x", {}, "pass").to_json(timing=False)


def test_context_expect_records_counterexample():
    ctx = Context("t", 1, Bounds())
    ctx.expect(1, 1)
    with pytest.raises(CheckFailure) as info:
        ctx.expect(MultiPoly.var(0, 1), 2, z=Fraction(1, 2), n=3)
    cex = info.value.counterexample
    assert cex == {"inputs": {"z": "1/2", "n": 3}, "lhs": "z1", "rhs": 2}
    assert ctx.cases == 2


def test_register_rejects_duplicates_and_run_catches_failures():
    name = "_scratch_failing_check"
    if name not in REGISTRY:
        @register(name, "always wrong")
        def _(ctx):
            ctx.expect(1, 2, why="demo")

    with pytest.raises(ValueError):
        register(name, "again")(lambda ctx: None)
    rep = run_check(name, seed=1)
    assert rep.status == "fail" and rep.counterexample["inputs"] == {"why": "demo"}
    del REGISTRY[name]


def test_selection_and_exit_codes():
    assert resolve("all") == sorted(REGISTRY)
    assert resolve("partition_rect,cheb_recurrence") == ["cheb_recurrence", "partition_rect"]
    with pytest.raises(UnknownCheck):
        resolve(["unknown_name"])
    assert verify_catalog(["unknown_name"])[1] == 2
    reps, code = verify_catalog(["omega_palpowersum_closed_form"], seed=1)
    assert code == 0 and reps[0].status == "fail"
    assert reps[0].counterexample["inputs"] == {"n": 1, "m": 2}


def test_cauchy_small_examples():
    lhs, rhs = cauchy_sides(CauchySetup(1, 1, 1, 2))
    z, y = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    y2 = {e[0]: c for e, c in lhs.terms.items() if e[1] == 2}
    assert y2 == {2: 1, 0: -1}
    assert lhs == rhs
    lhs, rhs = cauchy_sides(CauchySetup(3, 1, 1))
    assert lhs == rhs == (z + y) ** 2
    lhs, rhs = cauchy_sides(CauchySetup(1, 2, 1, 0))
    assert lhs == rhs == 1


@pytest.mark.parametrize("which", range(1, 7))
def test_cauchy_identities(which):
    assert cauchy_check(which, 1, 2, 5).status == "pass"
    assert cauchy_check(which, 2, 1, 5).status == "pass"


def test_cauchy_setup_validation():
    with pytest.raises(ValueError):
        CauchySetup(7, 1, 1)
    with pytest.raises(ValueError):
        CauchySetup(1, 0, 1)
    with pytest.raises(ValueError):
        CauchySetup(1, 1, 1, -1)
