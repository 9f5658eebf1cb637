"""Worked matrices and the checks that reproduce their stated properties.

``worked_examples()`` is what ``tomokron paper-examples`` runs.
"""
from __future__ import annotations

from fractions import Fraction

from .characters import InnerMethod, perm_inner
from .kostka import kostka
from .partitions import Majorization, Partition, majorize_cmp, pi_sort, scale
from .tables import (IntMatrix, complement, enumerate_tables, graph, is_plane_partition,
                     marginals3, s3_act, S3)
from .tomography import (AdditiveTriple, additivity_system, check_perturbation, derive_triples,
                         is_additive, is_additive3, is_minimal, is_pi_unique, single_row,
                         staircase, tripod, verify_additive_witness, young_binary)
from .exactlp import feasible

# 3x3 plane partitions sharing margins: minimal but not pi-unique, pi-unique
# but not minimal, and additive
PLANE_MINIMAL_NOT_UNIQUE = IntMatrix(((3, 3, 1), (2, 1, 1), (2, 0, 0)))
PLANE_UNIQUE_NOT_MINIMAL = IntMatrix(((4, 4, 1), (2, 1, 1), (2, 0, 0)))
PLANE_ADDITIVE = IntMatrix(((4, 3, 2), (3, 1, 0), (1, 1, 0)))
PLANE_ADDITIVE_WITNESS = ((7, 2, 0), (6, 3, 0))

# images of PLANE_ADDITIVE under the axis cycle and under complementation in
# the 3x3x4 box
PLANE_ADDITIVE_CYCLED = IntMatrix(((3, 2, 2), (3, 1, 0), (2, 1, 0), (1, 0, 0)))
PLANE_ADDITIVE_COMPLEMENT = IntMatrix(((4, 3, 3), (4, 3, 1), (2, 1, 0)))

# minimal and pi-unique, yet not additive; the perturbation below has zero
# margins and lowers the pi-sequence of 2*UNIQUE_NOT_ADDITIVE
UNIQUE_NOT_ADDITIVE = IntMatrix((
    (5, 5, 5, 4, 4),
    (5, 5, 5, 3, 3),
    (3, 3, 1, 1, 0),
    (2, 1, 1, 1, 0),
    (2, 1, 0, 0, 0),
))
OBSTRUCTION_PERTURBATION = (
    (0, 0, 0, -1, 1),
    (0, 0, 1, -1, 0),
    (0, 1, 0, 0, -1),
    (-1, -1, 0, 2, 0),
    (1, 0, -1, 0, 0),
)
PI_DOUBLED_PERTURBED = (10,) * 5 + (9,) * 2 + (7,) * 2 + (6,) * 2 + (5,) * 2 + (3,) * 2 + (2,) * 4 + (1,) * 2
PI_DOUBLED = (10,) * 6 + (8,) * 2 + (6,) * 4 + (4,) * 2 + (2,) * 6

# all inner products are 1 along this direction, but no table has pi = (4,4)
NO_ADDITIVE_DIRECTION = (Partition((7, 1)), Partition((5, 3)), Partition((4, 4)))


def two_by_two_family(n: int) -> list:
    """The n+1 tables with margins (7n, n), (5n, 3n)."""
    return [IntMatrix(((4 * n + t, 3 * n - t), (n - t, t))) for t in range(n + 1)]


def _check_trio():
    a, b, c = PLANE_MINIMAL_NOT_UNIQUE, PLANE_UNIQUE_NOT_MINIMAL, PLANE_ADDITIVE
    return (is_minimal(a) and not is_pi_unique(a)
            and is_pi_unique(b) and not is_minimal(b)
            and majorize_cmp(c.pi, b.pi) is Majorization.LESS_STRICT
            and c.row_sums == b.row_sums and c.col_sums == b.col_sums)


def _check_witness():
    x, y = PLANE_ADDITIVE_WITNESS
    sat = feasible(additivity_system(PLANE_ADDITIVE))
    return bool(sat) and verify_additive_witness(PLANE_ADDITIVE, x, y)


def _check_obstruction():
    e, x = UNIQUE_NOT_ADDITIVE, OBSTRUCTION_PERTURBATION
    half = check_perturbation(e, x, Fraction(1, 2))
    full = check_perturbation(e.scaled(2), x, 1)
    return (is_additive(e) is None and bool(half) and bool(full)
            and Partition(full.pi_after) == PI_DOUBLED_PERTURBED
            and Partition(full.pi_before) == PI_DOUBLED)


def _check_two_by_two():
    for n in range(1, 5):
        got = set(enumerate_tables((7 * n, n), (5 * n, 3 * n)))
        if got != set(two_by_two_family(n)):
            return False
    alpha, beta, gamma = NO_ADDITIVE_DIRECTION
    return not list(enumerate_tables(alpha, beta, pi=gamma))


def _check_stembridge():
    from .stability import stembridge_condition

    alpha, beta, gamma = NO_ADDITIVE_DIRECTION
    kos = all(kostka(scale(n, gamma), scale(n, (4, 3, 1))) == 1 for n in range(1, 5))
    inner = all(perm_inner(scale(n, alpha), scale(n, beta), scale(n, gamma),
                           InnerMethod.KOSTKA_SUM) == 1 for n in range(1, 5))
    res = stembridge_condition(alpha, beta, gamma, 4)
    return kos and inner and res.all_ones and not res.class_nonempty


def _check_kostka_bound():
    from .stability import kostka_upper_bound

    return all(kostka_upper_bound((), (), (), *NO_ADDITIVE_DIRECTION, k) == (1, 1) for k in (1, 2))


def _check_symmetries():
    c = PLANE_ADDITIVE
    return (s3_act(S3["(123)"], c) == PLANE_ADDITIVE_CYCLED
            and complement(c, (3, 3, 4)) == PLANE_ADDITIVE_COMPLEMENT)


def _check_graphs():
    box = IntMatrix(((2, 2, 2), (2, 2, 2)))
    g = graph(box)
    full = all(g[i, j, k] for i in range(2) for j in range(3) for k in range(2))
    return full and g.dims == (2, 3, 2) and is_additive3(graph(PLANE_ADDITIVE)) is not None


def _check_families():
    t = tripod(2, 1, 3)
    tri = (t.row_sums == (5, 1, 1) and t.col_sums == (6, 1) and t.pi == (4, 1, 1, 1)
           and marginals3(graph(t)) == ((5, 1, 1), (6, 1), (4, 1, 1, 1)))
    young = young_binary((4, 2, 1)) == IntMatrix(((1, 1, 1, 1), (1, 1, 0, 0), (1, 0, 0, 0)))
    s = staircase(3)
    stair = s.row_sums == (6, 3, 1) and s.pi == (3, 2, 2, 1, 1, 1)
    triples = {t.as_tuple() for t in derive_triples(AdditiveTriple.from_matrix(single_row((3, 1))))}
    row = (Partition((3, 1)), Partition((2, 1, 1)), Partition((1, 1, 1, 1))) in triples
    return tri and young and stair and row


def _check_lattice_empty():
    from .stability import lattice_sequence

    res = lattice_sequence((2,), (2,), (1, 1), (1,), (1,), (1,), [[1]], 3)
    return res.counts == [0, 0, 0, 0]


def worked_examples() -> list:
    """``[(name, check), ...]``; each check returns a bool."""
    return [
        ("pi-sequence of the additive 3x3", lambda: tuple(pi_sort(PLANE_ADDITIVE.entries()))
         == (4, 3, 3, 2, 1, 1, 1, 0, 0)),
        ("3x3 trio are plane partitions", lambda: all(map(is_plane_partition, (
            PLANE_MINIMAL_NOT_UNIQUE, PLANE_UNIQUE_NOT_MINIMAL, PLANE_ADDITIVE)))),
        ("minimal / pi-unique trio", _check_trio),
        ("additivity witness (7,2,0),(6,3,0)", _check_witness),
        ("5x5 not additive, perturbation certificates", _check_obstruction),
        ("2x2 tables with margins (7n,n),(5n,3n)", _check_two_by_two),
        ("inner products equal 1 without additive matrix", _check_stembridge),
        ("Kostka bound along (7,1),(5,3),(4,4)", _check_kostka_bound),
        ("axis cycle and complement images", _check_symmetries),
        ("graphs: box and (0,1)-additivity", _check_graphs),
        ("tripod, Young binary, staircase, single row", _check_families),
        ("lattice sets empty when nu is too long", _check_lattice_empty),
    ]
