import pytest
from hypothesis import given
from hypothesis import strategies as st

from symz.classical import base_poly, jt_skew, m_coordinates, monomial_symmetric, schur, skew_schur_jt, sp_o_jt
from symz.exactpoly import MultiPoly
from symz.partition import Partition, SkewPartition, conjugate, partitions_upto

z1, z2, z3 = (MultiPoly.var(i, 3) for i in range(3))
y1, y2 = MultiPoly.var(0, 2), MultiPoly.var(1, 2)


def test_base_examples():
    assert base_poly("e", 2, 2) == y1 * y2
    assert base_poly("h", 1, 2) == MultiPoly.var(0, 1) ** 2
    assert base_poly("p", 3, 0) == 3
    assert base_poly("e", 2, 3) == 0
    with pytest.raises(ValueError):
        base_poly("q", 2, 1)


def test_skew_schur_examples():
    assert skew_schur_jt(2, SkewPartition(Partition((2, 1)), Partition(()))) == y1 * y1 * y2 + y1 * y2 * y2
    assert schur(3, (1,)) == z1 + z2 + z3
    assert schur(2, (1, 1, 1)) == 0


def test_sp_o_examples():
    assert sp_o_jt("sp", 2, (1,)) == y1 + y2
    assert sp_o_jt("o", 2, (1,)) == y1 + y2
    assert sp_o_jt("sp", 2, (1, 1)) == y1 * y2 - 1


def test_monomial_coordinates_roundtrip():
    P = monomial_symmetric(3, (2, 1)).scale(3) - monomial_symmetric(3, (1, 1, 1))
    assert m_coordinates(P) == {(2, 1, 0): 3, (1, 1, 1): -1}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_e_h_reciprocity(n):
    for m in range(1, 7):
        total = sum(((-1) ** k * base_poly("e", n, k) * base_poly("h", n, m - k) for k in range(m + 1)), MultiPoly.zero(n))
        assert not total


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_newton(n):
    for m in range(1, 7):
        lhs = base_poly("e", n, m).scale(m)
        rhs = sum(((-1) ** (k - 1) * base_poly("e", n, m - k) * base_poly("p", n, k) for k in range(1, m + 1)), MultiPoly.zero(n))
        assert lhs == rhs


@given(st.sampled_from(partitions_upto(5, max_length=3)))
def test_schur_is_symmetric_with_unit_leading_coefficient(lam):
    s = schur(3, lam)
    assert s.is_symmetric()
    if lam.length() <= 3:
        assert s.coefficient(lam.padded(3)) == 1


def test_h_and_e_jacobi_trudi_agree():
    def e(k):
        return base_poly("e", 3, k) if k >= 0 else MultiPoly.zero(3)

    for lam in partitions_upto(6, max_length=3):
        lc = conjugate(lam)
        assert jt_skew(e, lc.parts, (0,) * lc.length(), 3) == schur(3, lam)
