from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from tomokron.errors import CapExceeded
from tomokron.partitions import (Majorization, Partition, add, conjugate, depth, dominates,
                                 format_rational, majorize_cmp, parse_partition, partitions_of,
                                 pi_sort, scale, to_exact)

from oracles import partition_count

partition_st = st.lists(st.integers(0, 9), max_size=8).map(lambda v: Partition(sorted(v, reverse=True)))


def test_partition_canonical_form():
    assert Partition((2, 1, 0, 0)) == (2, 1)
    assert Partition(()).size == 0 and Partition(()).length == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_conjugate_examples():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((3,) * 5) == (5,) * 3


def test_add_scale_depth():
    assert add((3, 1), (2, 2, 1)) == (5, 3, 1)
    assert scale(2, (4, 4)) == (8, 8)
    assert depth((4, 2, 1)) == 3
    assert depth(()) == 0


def test_pi_sort():
    assert pi_sort((1, 4, 0, 3)) == (4, 3, 1, 0)
    assert pi_sort((4, 3, 2, 3, 1, 0, 1, 1, 0)) == (4, 3, 3, 2, 1, 1, 1, 0, 0)
    assert pi_sort((2, 2, 2)) == (2, 2, 2)


def test_majorize_examples():
    assert majorize_cmp((2, 1, 1), (3, 1)) is Majorization.LESS_STRICT
    assert majorize_cmp((3, 1), (3, 1)) is Majorization.EQUAL
    assert majorize_cmp((3, 1), (2, 1, 1)) is Majorization.GREATER_STRICT
    assert majorize_cmp((3, 3), (4, 1, 1)) is Majorization.INCOMPARABLE
    assert majorize_cmp((3, 1), (3, 2)) is Majorization.DIFFERENT_SUM
    a = (10,) * 5 + (9,) * 2 + (7,) * 2 + (6,) * 2 + (5,) * 2 + (3,) * 2 + (2,) * 4 + (1,) * 2
    b = (10,) * 6 + (8,) * 2 + (6,) * 4 + (4,) * 2 + (2,) * 6
    assert majorize_cmp(a, b) is Majorization.LESS_STRICT


def test_majorize_rationals():
    assert majorize_cmp((Fraction(3, 2), Fraction(1, 2)), (2, 0)) is Majorization.LESS_STRICT


def test_partitions_of_small():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(0)) == [()]


@pytest.mark.parametrize("n", range(16))
def test_partition_count_matches_euler(n):
    assert sum(1 for _ in partitions_of(n)) == partition_count(n)


def test_partition_count_ten():
    assert sum(1 for _ in partitions_of(10)) == 42


def test_partitions_cap():
    with pytest.raises(CapExceeded):
        list(partitions_of(41))
    assert sum(1 for _ in partitions_of(12, cap=12)) == 77


def test_conjugate_involution_exhaustive():
    for n in range(13):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam


def test_dominance_reverses_under_conjugation():
    for n in range(11):
        parts = list(partitions_of(n))
        for lam in parts:
            for mu in parts:
                assert dominates(lam, mu) == dominates(conjugate(mu), conjugate(lam))


def test_majorization_is_partial_order_on_partitions():
    parts = list(partitions_of(7))
    le = {(a, b): majorize_cmp(a, b) in (Majorization.LESS_STRICT, Majorization.EQUAL)
          for a in parts for b in parts}
    for a in parts:
        assert majorize_cmp(a, a) is Majorization.EQUAL
        for b in parts:
            if le[a, b] and le[b, a]:
                assert a == b
            for c in parts:
                if le[a, b] and le[b, c]:
                    assert le[a, c]


@given(st.lists(st.integers(-5, 5), max_size=7))
def test_pi_sort_idempotent_and_permutation_invariant(v):
    s = pi_sort(v)
    assert pi_sort(s) == s
    assert pi_sort(reversed(v)) == s


@given(partition_st, partition_st)
def test_majorize_antisymmetry(a, b):
    ab, ba = majorize_cmp(a, b), majorize_cmp(b, a)
    flip = {Majorization.LESS_STRICT: Majorization.GREATER_STRICT,
            Majorization.GREATER_STRICT: Majorization.LESS_STRICT}
    assert ba is flip.get(ab, ab)


@given(partition_st)
def test_conjugate_preserves_size(lam):
    assert conjugate(lam).size == lam.size
    assert conjugate(conjugate(lam)) == lam


def test_parse_partition():
    assert parse_partition("4,2^3,1") == (4, 2, 2, 2, 1)
    assert parse_partition("") == ()
    assert parse_partition("(3, 1)") == (3, 1)
    with pytest.raises(ValueError):
        parse_partition("1,3")


def test_exact_numbers():
    assert to_exact("6/4") == Fraction(3, 2)
    assert to_exact("4/2") == 2
    with pytest.raises(TypeError):
        to_exact(0.5)
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(5) == "5"


def test_permutations_of_small_vector_share_pi():
    for p in permutations((3, 1, 1, 0)):
        assert majorize_cmp(p, (3, 1, 1)) is Majorization.EQUAL
