from collections import Counter

import pytest

from tomokron.errors import CapExceeded, SizeMismatch
from tomokron.partitions import Majorization, conjugate, majorize_cmp, partitions_of
from tomokron.tables import (S3, BinaryTensor3, IntMatrix, complement, count_binary3,
                             count_tables, enumerate_binary3, enumerate_tables, format_tensor,
                             graph, graph_marginals_expected, is_matrix_of_uniqueness,
                             is_plane_partition, marginals3, matrix_to_json, parse_inline_matrix,
                             parse_matrix, parse_tensor, pi_counts, s3_act, t_orbit,
                             tensor_to_json)

from oracles import brute_binary3, brute_tables

C = IntMatrix(((4, 3, 2), (3, 1, 0), (1, 1, 0)))


def test_intmatrix_basics():
    assert C.shape == (3, 3)
    assert C.row_sums == (9, 4, 2) and C.col_sums == (8, 5, 2)
    assert C.pi == (4, 3, 3, 2, 1, 1, 1)
    assert C.transpose().transpose() == C
    assert C.scaled(2)[0, 0] == 8
    with pytest.raises(ValueError):
        IntMatrix(((1, -1),))
    with pytest.raises(ValueError):
        IntMatrix(((1, 2), (1,)))


def test_two_small_tables():
    tabs = set(enumerate_tables((2, 1), (2, 1)))
    assert tabs == {IntMatrix(((2, 0), (0, 1))), IntMatrix(((1, 1), (1, 0)))}
    with pytest.raises(SizeMismatch):
        list(enumerate_tables((2,), (1,)))


def test_enumeration_matches_brute_force():
    for n in range(1, 6):
        parts = list(partitions_of(n))
        for a in parts:
            for b in parts:
                if len(a) * len(b) > 9:
                    continue
                got = sorted(m.rows for m in enumerate_tables(a, b))
                assert got == sorted(brute_tables(a, b))


def test_filters_match_post_filtering():
    for a, b in [((4, 2, 1), (3, 3, 1)), ((3, 3), (2, 2, 2)), ((5, 2), (4, 2, 1))]:
        every = list(enumerate_tables(a, b))
        counts = Counter(m.pi for m in every)
        assert pi_counts(a, b) == dict(counts)
        for g in counts:
            assert sorted(enumerate_tables(a, b, pi=g), key=str) == sorted(
                (m for m in every if m.pi == g), key=str)
            dom = {m for m in every if majorize_cmp(m.pi, g) in (Majorization.LESS_STRICT, Majorization.EQUAL)}
            assert set(enumerate_tables(a, b, dominated_by=g)) == dom


def test_two_by_two_family():
    for n in range(1, 5):
        want = {IntMatrix(((4 * n + t, 3 * n - t), (n - t, t))) for t in range(n + 1)}
        assert set(enumerate_tables((7 * n, n), (5 * n, 3 * n))) == want
    assert list(enumerate_tables((7, 1), (5, 3), pi=(4, 4))) == []


def test_table_cap():
    with pytest.raises(CapExceeded):
        count_tables((3, 3, 3), (3, 3, 3), cap=10)


def test_plane_partition():
    assert is_plane_partition(C)
    assert not is_plane_partition(((1, 2), (0, 0)))


def test_graph_marginals():
    t = graph(C)
    assert marginals3(t) == ((9, 4, 2), (8, 5, 2), (7, 4, 3, 1))
    assert marginals3(t) == graph_marginals_expected(C)
    assert t.heights() == C
    box = graph(IntMatrix(((2, 2, 2), (2, 2, 2))))
    assert len(box.ones()) == 12


def test_binary3_brute_force():
    cases = [((2, 2), (2, 2), (2, 2)), ((2, 1, 1), (2, 2), (3, 1)), ((3, 1), (2, 1, 1), (2, 2)),
             ((2, 1), (2, 1), (2, 1)), ((3, 2), (3, 2), (3, 1, 1))]
    for a, b, g in cases:
        want = brute_binary3(a, b, g)
        assert count_binary3(a, b, g) == want
        assert sum(1 for _ in enumerate_binary3(a, b, g)) == want
    assert count_binary3((2, 2), (2, 2), (2, 2)) == 8


def test_binary3_enumeration_agrees_with_count():
    for n in range(1, 6):
        parts = list(partitions_of(n))
        for a in parts:
            for b in parts:
                for g in parts:
                    assert count_binary3(a, b, g) == sum(1 for _ in enumerate_binary3(a, b, g))


def test_graph_of_additive_is_unique():
    t = graph(C)
    assert count_binary3((9, 4, 2), (8, 5, 2), (7, 4, 3, 1)) == 1
    assert is_matrix_of_uniqueness(t)


def test_axis_cycle_and_complement():
    assert s3_act("(123)", C) == IntMatrix(((3, 2, 2), (3, 1, 0), (2, 1, 0), (1, 0, 0)))
    assert complement(C, (3, 3, 4)) == IntMatrix(((4, 3, 3), (4, 3, 1), (2, 1, 0)))
    assert s3_act("id", C) == C
    assert s3_act("(12)", C) == C.transpose()


def test_group_relations():
    # (123) has order 3 once the box is carried along; complement is an involution
    x, box = C, (3, 3, 4)
    perm = S3["(123)"]
    for _ in range(3):
        x = s3_act(perm, x, box)
        moved = [0, 0, 0]
        for a in range(3):
            moved[perm[a]] = box[a]
        box = tuple(moved)
    assert box == (3, 3, 4)
    assert x == C
    assert complement(complement(C, (3, 3, 4)), (3, 3, 4)) == C
    assert len({name for name in S3}) == 6
    orbit = t_orbit(C)
    assert len(orbit) == 12
    for _, m in orbit:
        assert is_plane_partition(m)


def test_s3_margins_follow_conjugation():
    m = s3_act("(13)", C)
    t = marginals3(graph(C))
    got = (tuple(sorted(m.row_sums, reverse=True)), tuple(sorted(m.col_sums, reverse=True)))
    assert got == (tuple(conjugate(C.pi)), (8, 5, 2))
    assert t[0] == (9, 4, 2)


def test_formats_round_trip():
    assert parse_matrix("4 3 2\n3 1 0\n1 1 0\n") == C
    assert parse_matrix('{"rows": [[4,3,2],[3,1,0],[1,1,0]]}') == C
    assert parse_inline_matrix("4 3 2; 3 1 0; 1 1 0") == C
    assert parse_matrix(str(matrix_to_json(C)).replace("'", '"')) == C
    t = graph(C)
    assert parse_tensor(format_tensor(t)) == t
    import json
    assert parse_tensor(json.dumps(tensor_to_json(t))) == t
    assert BinaryTensor3.from_ones(t.dims, t.ones()) == t
