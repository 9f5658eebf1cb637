import math
from itertools import permutations

import pytest

from tomokron.characters import (InnerMethod, character, character_row, character_table,
                                 class_size, clear_caches, hook_length_dimension, kron,
                                 kron_symmetry_check, kron_uncached, load_character_table,
                                 manivel_monotone_check, perm_inner, permutation_character,
                                 save_character_table, young_rule_character)
from tomokron.errors import CapExceeded, HypothesisNotMet, SizeMismatch
from tomokron.partitions import partitions_of

from oracles import frobenius_character, hook_dimension


def test_small_values():
    assert character((1, 1), (2,)) == -1
    assert character((2, 1), (1, 1, 1)) == 2
    assert all(character((5,), rho) == 1 for rho in partitions_of(5))
    with pytest.raises(SizeMismatch):
        character((2, 1), (2,))


def test_s3_table_brute_force():
    # chi^lam(sigma) recomputed from scratch: trivial, sign, and standard = fix - 1
    def sign(p):
        return -1 if sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j]) % 2 else 1

    def cycle_type(p):
        seen, out = set(), []
        for s in range(3):
            if s in seen:
                continue
            l, x = 0, s
            while x not in seen:
                seen.add(x)
                x = p[x]
                l += 1
            out.append(l)
        return tuple(sorted(out, reverse=True))

    for p in permutations(range(3)):
        rho = cycle_type(p)
        fix = sum(1 for i in range(3) if p[i] == i)
        assert character((3,), rho) == 1
        assert character((1, 1, 1), rho) == sign(p)
        assert character((2, 1), rho) == fix - 1


@pytest.mark.parametrize("n", range(1, 7))
def test_characters_match_frobenius_formula(n):
    for lam in partitions_of(n):
        for rho in partitions_of(n):
            assert character(lam, rho) == frobenius_character(lam, rho)


def test_rows_match_pointwise_values():
    for n in range(1, 9):
        for lam in partitions_of(n):
            row = character_row(lam)
            for rho in partitions_of(n):
                assert row.get(rho, 0) == character(lam, rho)


def test_hook_length():
    for n in range(1, 11):
        for lam in partitions_of(n):
            d = hook_dimension(lam)
            assert hook_length_dimension(lam) == d
            assert character(lam, (1,) * n) == d


def test_class_sizes():
    assert class_size((2, 1)) == 3
    for n in range(9):
        assert sum(class_size(rho) for rho in partitions_of(n)) == math.factorial(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_orthogonality(n):
    table = character_table(n)
    parts = list(partitions_of(n))
    fact = math.factorial(n)
    for a in parts:
        for b in parts:
            s = sum(class_size(r) * table[a, r] * table[b, r] for r in parts)
            assert s == (fact if a == b else 0)
    # columns: sum over lam of chi(rho)^2 = z_rho
    for r in parts:
        assert sum(table[a, r] ** 2 for a in parts) * class_size(r) == fact


def test_kron_small():
    assert kron((2, 1), (2, 1), (2, 1)) == 1
    assert kron((2, 1), (2, 1), (3,)) == 1
    assert kron((2, 1), (2, 1), (1, 1, 1)) == 1
    assert kron((3,), (2, 1), (2, 1)) == 1
    assert kron((3,), (2, 1), (3,)) == 0
    # tensoring with the sign character conjugates
    assert kron((1, 1, 1, 1), (3, 1), (2, 1, 1)) == 1


def test_kron_cap_and_sizes():
    with pytest.raises(CapExceeded):
        kron((19,), (19,), (19,))
    assert kron((19,), (19,), (19,), max_degree=19) == 1
    with pytest.raises(SizeMismatch):
        kron((2,), (2,), (1,))


def test_kron_symmetry_exhaustive():
    for n in range(1, 6):
        parts = list(partitions_of(n))
        for a in parts:
            for b in parts:
                for c in parts:
                    assert kron_symmetry_check(a, b, c)


def test_kron_cached_equals_uncached():
    for triple in [((4, 2), (3, 3), (3, 2, 1)), ((5, 2, 1), (4, 4), (3, 3, 2)), ((6, 3), (5, 4), (7, 2))]:
        assert kron(*triple) == kron_uncached(*triple)


def test_kron_graph_of_additive_3x3():
    assert kron((9, 4, 2), (8, 5, 2), (4, 3, 3, 2, 1, 1, 1)) == 1


def test_permutation_character_two_routes():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for rho in partitions_of(n):
                assert permutation_character(lam, rho) == young_rule_character(lam, rho)


def test_perm_inner_methods_agree_small():
    for n in range(1, 6):
        parts = list(partitions_of(n))
        for a in parts:
            for b in parts:
                for c in parts:
                    assert perm_inner(a, b, c) == perm_inner(a, b, c, InnerMethod.KOSTKA_SUM)


def test_manivel_monotone():
    assert manivel_monotone_check((1,), (1,), (1,), (2, 1), (2, 1), (2, 1))
    assert manivel_monotone_check((2, 1), (2, 1), (1, 1, 1), (2, 2), (2, 2), (2, 2))
    with pytest.raises(HypothesisNotMet):
        manivel_monotone_check((1,), (1,), (1,), (3,), (2, 1), (3,))


def test_character_table_round_trip(tmp_path):
    path = tmp_path / "s5.jsonl"
    save_character_table(path, 5)
    assert load_character_table(path) == character_table(5)
    clear_caches()
    assert character((3, 2), (2, 2, 1)) == frobenius_character((3, 2), (2, 2, 1))
