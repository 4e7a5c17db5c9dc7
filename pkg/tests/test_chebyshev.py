from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symz.chebyshev import ChebKind, cheb_half, cheb_value, coeff_table, sigma, sigma_alt
from symz.exactpoly import LaurentPoly, UniPoly

u = UniPoly.x()


def test_examples():
    assert cheb_half("Tmonic", 2) == u * u - 2
    assert cheb_half("W", 1) == u + 1
    assert cheb_half("U1", 2) == u * u + u
    assert cheb_half("T", 0) == UniPoly((2,))
    assert cheb_half("Tmonic", 0) == UniPoly((1,))


def test_coefficient_tables():
    assert coeff_table("tau", 3, 1) == 3
    assert coeff_table("alpha", 2, 1) == 1
    assert coeff_table("catalan", 2, 1) == 2
    with pytest.raises(ValueError):
        coeff_table("nope", 1)
    with pytest.raises(ValueError):
        coeff_table("tau", 2, 2)


def test_kind_parsing():
    assert ChebKind.parse("tmonic") is ChebKind.TMONIC
    with pytest.raises(ValueError):
        ChebKind.parse("X")
    with pytest.raises(ValueError):
        cheb_half("U", -1)
    assert cheb_value("U", -1, 3) == 0


@pytest.mark.parametrize("m", range(10))
def test_T_at_zhukovsky_point(m):
    t = LaurentPoly(1, {(1,): 1})
    w = t + LaurentPoly(1, {(-1,): 1})
    want = t ** m + LaurentPoly(1, {(-m,): 1})
    assert cheb_half("T", m)(w) == want


@pytest.mark.parametrize("m", range(10))
def test_U_at_zhukovsky_point(m):
    t = LaurentPoly(1, {(1,): 1})
    ti = LaurentPoly(1, {(-1,): 1})
    assert (t - ti) * cheb_half("U", m)(t + ti) == t ** (m + 1) - ti ** (m + 1)


@given(st.integers(0, 14), st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)))
def test_three_term_recurrence(m, z):
    for kind in ("T", "U", "V", "W"):
        assert cheb_value(kind, m + 2, z) == z * cheb_value(kind, m + 1, z) - cheb_value(kind, m, z)


@given(st.integers(0, 14))
def test_sigma_closed_forms_agree(m):
    coeffs = cheb_half("U1", m).coeffs
    for k in range(m + 1):
        assert sigma(m, k) == sigma_alt(m, k) == coeffs[k]
