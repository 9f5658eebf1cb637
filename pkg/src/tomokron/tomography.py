"""Additivity, minimality and pi-uniqueness of integer matrices.

Additivity is decided exactly: the strict system
``x_i + y_j > x_k + y_l whenever a[i][j] > a[k][l]`` is homogeneous, so any
solution can be scaled until every slack is at least 1, and the exact LP
solver is handed the closed system with right-hand side 1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import CapExceeded
from .exactlp import LinearSystem, feasible
from .partitions import (Majorization, Partition, conjugate, format_rational,
                         majorize_cmp, partitions_of, pi_sort, to_exact)
from .tables import (TABLE_CAP, BinaryTensor3, IntMatrix, S3, as_matrix, count_binary3,
                     enumerate_tables, graph, is_plane_partition, pi_counts, s3_act)


@dataclass(frozen=True)
class AdditivityWitness:
    x: tuple
    y: tuple
    z: tuple | None = None

    def to_json(self) -> dict:
        out = {"x": [format_rational(v) for v in self.x], "y": [format_rational(v) for v in self.y]}
        if self.z is not None:
            out["z"] = [format_rational(v) for v in self.z]
        return out

    @classmethod
    def from_json(cls, data) -> "AdditivityWitness":
        z = data.get("z")
        return cls(tuple(to_exact(v) for v in data["x"]), tuple(to_exact(v) for v in data["y"]),
                   None if z is None else tuple(to_exact(v) for v in z))


def _entries(a):
    rows = a.rows if isinstance(a, IntMatrix) else tuple(tuple(r) for r in a)
    return rows


def verify_additive_witness(a, x: Sequence, y: Sequence) -> bool:
    """Check ``a[i][j] > a[k][l]  =>  x_i + y_j > x_k + y_l`` over all pairs."""
    rows = _entries(a)
    cells = [(i, j, v) for i, r in enumerate(rows) for j, v in enumerate(r)]
    for i, j, v in cells:
        s = x[i] + y[j]
        for k, l, w in cells:
            if v > w and not s > x[k] + y[l]:
                return False
    return True


def _order_conflict(rows) -> bool:
    # two rows (or columns) that each beat the other somewhere force x_i > x_k > x_i
    for r1, r2 in combinations(rows, 2):
        if any(a > b for a, b in zip(r1, r2)) and any(a < b for a, b in zip(r1, r2)):
            return True
    return False


def additivity_system(a) -> LinearSystem:
    """The closed system over (x_1..x_p, y_1..y_q), one row per needed pair.

    Only consecutive distinct entry values are compared; the others follow by
    transitivity.  Identical coefficient rows are merged.
    """
    rows = _entries(a)
    p = len(rows)
    q = len(rows[0]) if p else 0
    levels = {}
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            levels.setdefault(v, []).append((i, j))
    values = sorted(levels, reverse=True)
    system = LinearSystem(p + q)
    seen = set()
    for hi, lo in zip(values, values[1:]):
        for i, j in levels[hi]:
            for k, l in levels[lo]:
                coeffs = [0] * (p + q)
                coeffs[i] += 1
                coeffs[p + j] += 1
                coeffs[k] -= 1
                coeffs[p + l] -= 1
                key = tuple(coeffs)
                if key in seen:
                    continue
                seen.add(key)
                system.ge(coeffs, 1)
    return system


def _normalize(v):
    m = min(v, default=0)
    return tuple(to_exact(Fraction(t) - m) for t in v)


def is_additive(a, prefilter: bool = True) -> AdditivityWitness | None:
    """Witness ``(x, y)`` if ``a`` is additive, else ``None``.

    With ``prefilter`` a pair of rows or columns that each exceed the other
    somewhere is reported at once (its two constraints sum to ``0 > 0``);
    otherwise the LP decides.
    """
    rows = _entries(a)
    p = len(rows)
    q = len(rows[0]) if p else 0
    if prefilter and (_order_conflict(rows) or _order_conflict(list(zip(*rows)))):
        return None
    result = feasible(additivity_system(rows))
    if not result:
        return None
    x = _normalize(result.witness[:p])
    y = _normalize(result.witness[p:p + q])
    if not verify_additive_witness(rows, x, y):
        raise AssertionError("additivity witness failed verification")
    return AdditivityWitness(x, y)


def verify_additive3_witness(t: BinaryTensor3, x, y, z) -> bool:
    p, q, r = t.dims
    for i in range(p):
        for j in range(q):
            for k in range(r):
                if bool(t[i, j, k]) != (x[i] + y[j] + z[k] >= 0):
                    return False
    return True


def _slice_conflict(t: BinaryTensor3) -> bool:
    p, q, r = t.dims
    xs = [tuple(t.lines[i]) for i in range(p)]
    ys = [tuple(t.lines[i][j] for i in range(p)) for j in range(q)]
    zs = [tuple((t.lines[i][j] >> k) & 1 for i in range(p) for j in range(q)) for k in range(r)]
    for slices in (xs, ys, zs):
        for s1, s2 in combinations(slices, 2):
            # masks per line: subset test in both directions
            one_not_two = any(a & ~b for a, b in zip(s1, s2))
            two_not_one = any(b & ~a for a, b in zip(s1, s2))
            if one_not_two and two_not_one:
                return True
    return False


def is_additive3(t: BinaryTensor3, prefilter: bool = True) -> AdditivityWitness | None:
    """(0,1)-additivity: ``t[i,j,k] = 1  iff  x_i + y_j + z_k >= 0``."""
    p, q, r = t.dims
    if prefilter and _slice_conflict(t):
        return None
    system = LinearSystem(p + q + r)
    for i in range(p):
        for j in range(q):
            for k in range(r):
                coeffs = [0] * (p + q + r)
                coeffs[i] = coeffs[p + j] = coeffs[p + q + k] = 1
                if t[i, j, k]:
                    system.ge(coeffs, 0)
                else:
                    system.le(coeffs, -1)
    result = feasible(system)
    if not result:
        return None
    w = result.witness
    x, y, z = w[:p], w[p:p + q], w[p + q:]
    if not verify_additive3_witness(t, x, y, z):
        raise AssertionError("(0,1)-additivity witness failed verification")
    return AdditivityWitness(tuple(x), tuple(y), tuple(z))


# -- minimality and pi-uniqueness by enumeration --------------------------

def _sorted_margins(a: IntMatrix):
    return Partition(sorted(a.row_sums, reverse=True)), Partition(sorted(a.col_sums, reverse=True))


def minimal_pis(alpha, beta, cap: int = TABLE_CAP) -> set:
    """pi-sequences of the minimal matrices in M(alpha, beta)."""
    pis = list(pi_counts(alpha, beta, cap=cap))
    return {g for g in pis
            if not any(majorize_cmp(h, g) is Majorization.LESS_STRICT for h in pis)}


def is_minimal(a, cap: int = TABLE_CAP) -> bool:
    a = as_matrix(a)
    alpha, beta = _sorted_margins(a)
    pis = pi_counts(alpha, beta, cap=cap)
    g = a.pi
    return not any(majorize_cmp(h, g) is Majorization.LESS_STRICT for h in pis)


def is_pi_unique(a, cap: int = TABLE_CAP) -> bool:
    a = as_matrix(a)
    alpha, beta = _sorted_margins(a)
    return pi_counts(alpha, beta, cap=cap).get(a.pi, 0) == 1


def majorizing_witness(a, cap: int = TABLE_CAP) -> IntMatrix | None:
    """Some B with the margins of ``a`` and pi(B) strictly majorized by pi(a)."""
    a = as_matrix(a)
    alpha, beta = _sorted_margins(a)
    for b in enumerate_tables(alpha, beta, dominated_by=a.pi, cap=cap):
        if majorize_cmp(b.pi, a.pi) is Majorization.LESS_STRICT:
            return b
    return None


# -- perturbation certificates -------------------------------------------

@dataclass(frozen=True)
class CertificateCheck:
    valid: bool
    reason: str
    pi_before: tuple = ()
    pi_after: tuple = ()

    def __bool__(self):
        return self.valid


def check_perturbation(a, x, t=1) -> CertificateCheck:
    """Does ``a - t*x`` witness that ``a`` is not real-minimal?

    Valid iff ``x`` has zero row and column sums, ``t > 0``, ``a - t*x`` is
    entrywise nonnegative, and pi(a - t*x) is strictly majorized by pi(a).
    ``a`` may have rational entries.
    """
    a_rows = [[to_exact(v) for v in r] for r in _entries(a)]
    x_rows = [[to_exact(v) for v in r] for r in _entries(x)]
    t = to_exact(t)
    pi_a = pi_sort(v for r in a_rows for v in r)
    if t <= 0:
        return CertificateCheck(False, "step must be positive", pi_a)
    if len(a_rows) != len(x_rows) or any(len(r) != len(s) for r, s in zip(a_rows, x_rows)):
        return CertificateCheck(False, "shape mismatch", pi_a)
    if any(sum(r) != 0 for r in x_rows) or any(sum(c) != 0 for c in zip(*x_rows)):
        return CertificateCheck(False, "perturbation has nonzero margins", pi_a)
    b = [[u - t * v for u, v in zip(r, s)] for r, s in zip(a_rows, x_rows)]
    pi_b = tuple(to_exact(v) for v in pi_sort(v for r in b for v in r))
    if any(v < 0 for v in pi_b):
        return CertificateCheck(False, "perturbed matrix has a negative entry", pi_a, pi_b)
    cmp = majorize_cmp(pi_b, pi_a)
    if cmp is not Majorization.LESS_STRICT:
        return CertificateCheck(False, f"pi-sequences compare as {cmp.name}", pi_a, pi_b)
    return CertificateCheck(True, "strictly majorized", pi_a, pi_b)


def certificate_to_json(x, t) -> dict:
    return {"X": [list(r) for r in _entries(x)], "t": format_rational(to_exact(t))}


# -- families of additive matrices ---------------------------------------

def box(p: int, q: int, r: int) -> IntMatrix:
    return IntMatrix(tuple((r,) * q for _ in range(p)))


def tripod(a: int, b: int, c: int) -> IntMatrix:
    """(a+1) x (b+1) matrix with c+1 in the corner, ones along the first row
    and column, zeros elsewhere."""
    rows = [[0] * (b + 1) for _ in range(a + 1)]
    rows[0] = [c + 1] + [1] * b
    for i in range(1, a + 1):
        rows[i][0] = 1
    return IntMatrix(tuple(tuple(r) for r in rows))


def staircase(k: int) -> IntMatrix:
    """k x k matrix with entry ``max(k - i - j, 0)`` (0-based)."""
    return IntMatrix(tuple(tuple(max(k - i - j, 0) for j in range(k)) for i in range(k)))


def staircase_witness(k: int) -> tuple:
    w = tuple(range(k - 1, -1, -1))
    return w, w


def young_binary(alpha) -> IntMatrix:
    """The only 0/1 matrix in M(alpha, alpha')."""
    alpha = Partition(alpha)
    q = alpha[0] if alpha else 0
    return IntMatrix(tuple(tuple(1 if j < part else 0 for j in range(q)) for part in alpha))


def young_binary_witness(alpha) -> tuple:
    alpha = Partition(alpha)
    return tuple(alpha), tuple(conjugate(alpha))


def single_row(beta) -> IntMatrix:
    return IntMatrix((tuple(Partition(beta)),))


FAMILIES = {
    "box": box,
    "tripod": tripod,
    "staircase": staircase,
    "young": young_binary,
    "row": single_row,
}


def family(kind: str, *args) -> IntMatrix:
    """``family("tripod", 1, 1, 1)``, ``family("young", (4, 2, 1))`` and so on."""
    try:
        make = FAMILIES[kind.lower()]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}") from None
    return make(*args)


# -- additive triples ----------------------------------------------------

@dataclass(frozen=True)
class AdditiveTriple:
    alpha: Partition
    beta: Partition
    gamma: Partition
    witness: IntMatrix = field(compare=False)

    @classmethod
    def from_matrix(cls, a) -> "AdditiveTriple":
        a = as_matrix(a)
        if is_additive(a) is None:
            raise ValueError("matrix is not additive")
        alpha, beta = _sorted_margins(a)
        return cls(alpha, beta, a.pi, a)

    def as_tuple(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)


def triple_images(alpha, beta, gamma) -> dict:
    """Margin triples predicted for each axis permutation."""
    a, b, g = Partition(alpha), Partition(beta), Partition(gamma)
    ac, bc, gc = conjugate(a), conjugate(b), conjugate(g)
    return {
        "id": (a, b, g),
        "(12)": (b, a, g),
        "(123)": (gc, a, bc),
        "(132)": (b, gc, ac),
        "(23)": (a, gc, bc),
        "(13)": (gc, b, ac),
    }


def derive_triples(t: AdditiveTriple) -> list:
    """The six triples obtained from the S3 action on the graph of the witness.

    Each output carries the transformed witness matrix, which is re-checked for
    additivity, and its margins are checked against :func:`triple_images`.
    """
    predicted = triple_images(t.alpha, t.beta, t.gamma)
    out = []
    for name, perm in S3.items():
        m = s3_act(perm, t.witness)
        alpha, beta = _sorted_margins(m)
        got = (alpha, beta, m.pi)
        if got != predicted[name]:
            raise AssertionError(f"{name}: margins {got} differ from {predicted[name]}")
        if is_additive(m) is None:
            raise AssertionError(f"{name}: image is not additive")
        out.append(AdditiveTriple(alpha, beta, m.pi, m))
    return out


# -- theorem-level cross-checks ------------------------------------------

def uniqueness_equivalence_check(alpha, beta, gamma, cap: int = TABLE_CAP) -> bool:
    """``m*(alpha, beta, gamma') == 1`` iff some A in M(alpha, beta)_gamma is
    minimal and pi-unique; such an A must also be a plane partition.

    The left side counts binary tensors, the right side enumerates tables and
    applies the two predicates.
    """
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    unique3 = count_binary3(alpha, beta, conjugate(gamma), cap=cap) == 1
    counts = pi_counts(alpha, beta, cap=cap)
    right = False
    if counts.get(gamma) == 1:
        right = not any(majorize_cmp(h, gamma) is Majorization.LESS_STRICT for h in counts)
    if right:
        (a,) = list(enumerate_tables(alpha, beta, pi=gamma, cap=cap))
        if not is_plane_partition(a):
            return False
    return unique3 == right


def additivity_profile(a) -> dict:
    """All predicates for one matrix, for reports and the CLI."""
    a = as_matrix(a)
    w = is_additive(a)
    return {
        "plane_partition": is_plane_partition(a),
        "additive": w is not None,
        "witness": None if w is None else w.to_json(),
        "minimal": is_minimal(a),
        "pi_unique": is_pi_unique(a),
    }


def witness_json(w: AdditivityWitness | None) -> str:
    return json.dumps({"additive": w is not None, "witness": None if w is None else w.to_json()})


def plane_partitions(n: int):
    """Plane partitions of ``n`` as matrices without zero rows or columns."""

    def rows_below(prev, rest):
        # partitions fitting under ``prev`` entrywise, of size 1..rest
        q = len(prev)

        def rec(j, left, acc):
            if acc:
                yield tuple(acc) + (0,) * (q - len(acc))
            if j == q or left == 0:
                return
            upper = min(prev[j], left, acc[-1] if acc else left)
            for v in range(upper, 0, -1):
                acc.append(v)
                yield from rec(j + 1, left - v, acc)
                acc.pop()

        yield from rec(0, rest, [])

    def rec(rows, rest):
        if rest == 0:
            yield IntMatrix(tuple(rows))
            return
        for row in rows_below(rows[-1], rest):
            yield from rec(rows + [row], rest - sum(row))

    if n == 0:
        yield IntMatrix(())
        return
    for m in range(n, 0, -1):
        for first in partitions_of(m):
            yield from rec([tuple(first)], n - m)
