import pytest

from tomokron.errors import CapExceeded, NotInPolytope, SizeMismatch
from tomokron.kostka import (GTPattern, canonical_pattern, enumerate_gt, gt_to_ssyt, in_polytope,
                             kostka, kostka_sequence, shift, ssyt_to_gt, surjectivity_onset,
                             unshift, violated_condition)
from tomokron.partitions import dominates, partitions_of

from oracles import brute_ssyt_count


def test_small_kostka():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((1, 1, 1), (3,)) == 0
    assert kostka((), ()) == 1
    with pytest.raises(SizeMismatch):
        kostka((2,), (1,))


def test_kostka_matches_tableau_count():
    for n in range(1, 7):
        parts = list(partitions_of(n))
        for s in parts:
            for g in parts:
                assert kostka(s, g) == brute_ssyt_count(s, g)


def test_unsorted_content():
    # Kostka numbers do not depend on the order of the content
    assert kostka((3, 2), (1, 2, 2)) == kostka((3, 2), (2, 2, 1)) == brute_ssyt_count((3, 2), (1, 2, 2))
    assert kostka((2, 2), (0, 2, 2)) == 1


def test_enumeration_invariants():
    for n in range(1, 8):
        parts = list(partitions_of(n))
        for s in parts:
            for g in parts:
                pats = list(enumerate_gt(s, g))
                assert len(pats) == kostka(s, g)
                assert len(set(pats)) == len(pats)
                assert all(in_polytope(x, s, g) for x in pats)
                assert (len(pats) > 0) == dominates(s, g)


def test_tableau_round_trip():
    for x in enumerate_gt((3, 2, 1), (2, 2, 1, 1)):
        t = gt_to_ssyt(x)
        assert ssyt_to_gt(t, x.length) == x
        assert [len(r) for r in t] == [3, 2, 1]


def test_violations_named():
    x = GTPattern(((2, 1), (0,)))
    assert in_polytope(x, (3,), (2, 1))
    assert violated_condition(GTPattern(((2, -1), (2,))), (1, 2), (2, 1)) == ("Po", (0, 1))
    # second row longer than the first allows
    assert violated_condition(GTPattern(((0, 1), (1,))), (1, 1), (0, 2))[0] == "CS"
    assert violated_condition(GTPattern(((2, 0), (0,))), (1, 1), (2, 0))[0] == "Sh"
    assert violated_condition(GTPattern(((1, 1), (0,))), (2,), (2, 0))[0] == "Co"


def test_shift_and_unshift():
    gamma = (2, 1)
    for x in enumerate_gt((3, 1), (2, 1, 1)):
        y = shift(x, gamma)
        assert in_polytope(y, (5, 2, 0), (4, 2, 1))
        assert unshift(y, gamma, (5, 2), (4, 2, 1)) == x
    c = canonical_pattern((4, 4))
    with pytest.raises(NotInPolytope):
        unshift(c, (4, 4, 1), (4, 4, 1), (4, 4, 1))


def test_canonical_pattern():
    c = canonical_pattern((3, 1), 3)
    assert c.shape == (3, 1, 0) and c.content == (3, 1, 0)
    assert kostka((3, 1), (3, 1)) == 1


def test_scaled_kostka_is_one():
    for n in range(1, 5):
        assert kostka((4 * n, 4 * n), (4 * n, 3 * n, n)) == 1


def test_kostka_sequences_monotone():
    seq = kostka_sequence((2, 1), (1, 1, 1), (4, 4), 6)
    assert seq == [2] * 7
    seq = kostka_sequence((2, 2), (2, 1, 1), (2, 1, 1), 6)
    assert all(a <= b for a, b in zip(seq, seq[1:]))
    assert surjectivity_onset((2, 1), (1, 1, 1), (4, 4), 4) == 0


def test_gt_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_gt((3, 2, 1), (1,) * 6, cap=5))
