import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symz.classical import base_poly, monomial_symmetric
from symz.exactpoly import MultiPoly
from symz.phi import PhiInput, e_decompose, laurent_check, phi, phi_odd
from symz.partition import partitions_upto

z1, z2 = MultiPoly.var(0, 2), MultiPoly.var(1, 2)


def test_inhomogeneous_image():
    P = monomial_symmetric(4, (2,)) + monomial_symmetric(4, (1, 1)).scale(5)
    Q = phi(P, 2, certify=True)
    assert Q == z1 * z1 + z2 * z2 + 5 * z1 * z2 + 6
    assert laurent_check(P, Q, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_top_elementary_maps_to_one(n):
    assert phi(base_poly("e", 2 * n, 2 * n), n) == 1
    assert phi_odd(base_poly("e", 2 * n + 1, 2 * n + 1), n) == 1


def test_small_images():
    assert phi(base_poly("e", 2, 1), 1) == MultiPoly.var(0, 1)
    assert phi_odd(base_poly("e", 3, 1), 1) == MultiPoly.var(0, 1) + 1
    assert phi_odd(MultiPoly.constant(1, 3), 1) == 1


def test_laurent_check_examples():
    assert laurent_check(base_poly("e", 4, 2), z1 * z2 + 2, 2)
    assert not laurent_check(base_poly("e", 2, 1), MultiPoly.var(0, 1) ** 2, 1)
    assert not laurent_check(base_poly("e", 2, 1), z1, 1)  # wrong ring


def test_input_validation():
    with pytest.raises(ValueError):
        PhiInput(base_poly("e", 3, 1), 1)
    with pytest.raises(ValueError):
        phi(MultiPoly.var(0, 2), 1)
    with pytest.raises(ValueError):
        phi(base_poly("e", 2, 1), 0)


def test_e_decompose_reconstructs():
    P = monomial_symmetric(4, (2, 1)) - monomial_symmetric(4, (3,)).scale(2)
    total = MultiPoly.zero(4)
    for lam, c in e_decompose(P).items():
        term = MultiPoly.constant(c, 4)
        for part in lam:
            term = term * base_poly("e", 4, part)
        total = total + term
    assert total == P


sym4 = st.lists(st.tuples(st.sampled_from(partitions_upto(4, max_length=4)), st.integers(-4, 4)), min_size=1, max_size=3).map(
    lambda ts: sum((monomial_symmetric(4, lam).scale(c) for lam, c in ts), MultiPoly.zero(4))
)


@settings(max_examples=30)
@given(sym4, sym4)
def test_homomorphism(P, R):
    assert phi(P * R, 2) == phi(P, 2) * phi(R, 2)
    assert phi(P + R, 2) == phi(P, 2) + phi(R, 2)
    assert laurent_check(P, phi(P, 2), 2)
