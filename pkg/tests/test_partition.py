import pytest
from hypothesis import given
from hypothesis import strategies as st

from symz.partition import (
    IndexVector,
    Partition,
    SkewPartition,
    as_skew,
    conjugate,
    parse_partition,
    partitions,
    partitions_in_box,
    partitions_upto,
    rect,
    skew_contains,
)

parts = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


@pytest.mark.parametrize("lam, want", [((2, 1), (2, 1)), ((1, 1, 1), (3,)), ((3, 1), (2, 1, 1)), ((), ())])
def test_conjugate_examples(lam, want):
    assert conjugate(lam) == Partition(want)


def test_rect():
    assert rect(3, 2) == Partition((3, 3))
    assert rect(0, 4) == Partition(())
    assert rect(2, 1) == Partition((2,))


def test_skew_contains():
    assert skew_contains((2, 2, 1), (2,))
    assert not skew_contains((2, 1), (3,))
    assert skew_contains((2, 1), (1, 1))


def test_trailing_zeros_trimmed_and_order_enforced():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_parse_partition():
    assert parse_partition("3,1,1") == Partition((3, 1, 1))
    assert parse_partition("") == Partition(())
    with pytest.raises(ValueError):
        parse_partition("1,3")


def test_skew_needs_containment():
    with pytest.raises(ValueError):
        SkewPartition(Partition((1,)), Partition((2,)))
    assert as_skew(((2, 1), (1,))).weight() == 2


def test_enumeration_counts():
    # p(5) = 7, and the 2x3 box holds binom(5, 2) partitions
    assert len(list(partitions(5))) == 7
    assert len(partitions_in_box(2, 3)) == 10
    assert all(p.length() <= 2 and p.weight() <= 4 for p in partitions_upto(4, max_length=2))


def test_index_vector():
    v = IndexVector((2, 4), 5)
    assert v.total() == 6
    assert tuple(v.complement()) == (1, 3, 5)
    with pytest.raises(ValueError):
        IndexVector((3, 2), 5)


@given(parts)
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).weight() == lam.weight()
    assert conjugate(lam).length() == (lam[0] if lam.length() else 0)
