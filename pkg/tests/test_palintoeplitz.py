from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symz.exactpoly import UniPoly
from symz.partition import Partition, SkewPartition
from symz.palintoeplitz import (
    PalindromicSymbol,
    ZRootData,
    adjugate_direct,
    adjugate_entry,
    det_factorized,
    det_from_sz,
    g_from_symbol,
    minor_to_skew,
    minor_via_skew,
    nullvector,
    odd_split,
    skew_to_minor,
    symbol_from_zroots,
    sz_rectangle,
    toeplitz_det,
    toeplitz_minor,
)
from symz.zfamilies import sz_at

u = UniPoly.x()
small = st.builds(Fraction, st.integers(-7, 7), st.integers(1, 3))


def test_symbols_from_roots():
    assert symbol_from_zroots([4]).coeffs == (-4, 1)
    # (t - 1 + 1/t)(t + 1 + 1/t) = t^2 + 1 + t^-2
    assert symbol_from_zroots([1, -1]).coeffs == (1, 0, 1)
    assert symbol_from_zroots([0], 3).coeffs == (0, 3)
    with pytest.raises(ValueError):
        symbol_from_zroots([1], 0)


def test_g_from_symbol():
    assert g_from_symbol(PalindromicSymbol((-4, 1))) == u - 4
    assert g_from_symbol(PalindromicSymbol((-2, 0, 1))) == u * u - 4
    assert g_from_symbol(PalindromicSymbol((0, 3))) == 3 * u
    assert g_from_symbol(symbol_from_zroots([1, -1])) == u * u - 1


def test_odd_split():
    assert odd_split(UniPoly((1, 1))) == UniPoly((1,))
    assert odd_split(UniPoly((1, 0, 0, 1))) == UniPoly((1, -1, 1))
    assert odd_split(UniPoly((1, 1, 1, 1))) == UniPoly((1, 0, 1))
    with pytest.raises(ValueError):
        odd_split(UniPoly((1, 2, 1)))


def test_minor_examples():
    s = symbol_from_zroots([5])
    assert toeplitz_minor(s, 2, (1, 2), (1, 2)) == 24
    assert toeplitz_minor(s, 3, (), ()) == 1
    assert toeplitz_minor(s, 1, (1,), (1,)) == -5


def test_minor_to_skew_examples():
    full = minor_to_skew(2, 3, (1, 2, 3), (1, 2, 3))
    assert full.sign == 1 and full.power == 3 and full.shape1 == SkewPartition(Partition((3, 3)), Partition(()))
    sh = minor_to_skew(1, 5, (2, 4), (4, 5))
    assert (sh.sign, sh.power, sh.xi, sh.eta) == (-1, 2, (1, 3, 5), (1, 2, 3))
    assert sh.shape1 == SkewPartition(Partition((2, 2, 1)), Partition(()))
    zr = ZRootData((3,))
    assert toeplitz_minor(zr.symbol(), 5, (2, 4), (4, 5)) == minor_via_skew(zr, 5, (2, 4), (4, 5)) == 0
    # rows omit 3 and columns omit 2: the omitted row index lands in the outer shape
    cof = minor_to_skew(1, 4, (1, 2, 4), (1, 3, 4))
    assert cof.shape1 == SkewPartition(Partition((3, 2)), Partition((1,)))
    assert toeplitz_minor(zr.symbol(), 4, (1, 2, 4), (1, 3, 4)) == cof.sign * sz_at([3], cof.shape1)


def test_skew_to_minor_examples():
    sk = skew_to_minor((2, 1), (), 1, 5)
    assert tuple(sk.rho) == (2, 4) and tuple(sk.sigma) == (3, 4)
    assert not sk.stated_bound_sufficient
    sk = skew_to_minor((1,), (), 1, 4)
    assert tuple(sk.rho) == (2, 4) and tuple(sk.sigma) == (2, 3)
    zr = ZRootData((3,))
    assert toeplitz_minor(zr.symbol(), 4, sk.rho, sk.sigma) == sk.sign * 3
    empty = skew_to_minor((), (), 2)
    assert toeplitz_minor(ZRootData((3, 4)).symbol(), empty.m, empty.rho, empty.sigma) == empty.sign
    with pytest.raises(ValueError):
        skew_to_minor((2, 1), (), 1, 4)


def test_factorization_examples():
    assert det_factorized([7], 2) == 48
    assert det_factorized([7], 1) == 7
    assert det_factorized([5], 3) == 115
    assert det_factorized(m=3, route="trench", u=[3]) == sz_rectangle([7], 3)


def test_adjugate_examples():
    zr = ZRootData((5,))
    assert adjugate_entry(zr, 2, 1, 1) == -5
    assert adjugate_entry(zr, 2, 1, 2) == -1
    assert adjugate_entry(zr, 1, 1, 1) == 1
    assert [[adjugate_entry(zr, 3, p, q) for q in (1, 2, 3)] for p in (1, 2, 3)] == adjugate_direct(zr.symbol(), 3)


def test_nullvector_examples():
    assert nullvector(ZRootData((1,)), 2) == [1, 1]
    assert nullvector(ZRootData((-1,)), 2) == [-1, 1]
    with pytest.raises(ValueError):
        nullvector(ZRootData((3,)), 2)


def test_degenerate_nullvector_is_zero():
    # z = (-1, 1): the sz vector vanishes while T_5 is singular
    zr = ZRootData((-1, 1))
    assert toeplitz_det(zr.symbol(), 5) == 0
    assert not any(nullvector(zr, 5))


@settings(max_examples=40)
@given(st.lists(small, min_size=1, max_size=3, unique=True), st.integers(0, 6), st.sampled_from([1, 2, Fraction(-1, 3)]))
def test_det_is_signed_rectangle(z, m, lead):
    zr = ZRootData(tuple(z), lead)
    assert toeplitz_det(zr.symbol(), m) == det_from_sz(zr, m, sz_rectangle(zr, m))
    assert det_factorized(z, m) == sz_rectangle(z, m)
