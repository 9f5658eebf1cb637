"""Integer matrices with prescribed margins and 3-dimensional binary matrices.

Conventions: margins are partitions (weakly decreasing, zeros stripped), a
matrix in M(alpha, beta) has ``len(alpha)`` rows and ``len(beta)`` columns, and
a binary tensor stores each line along the third axis as an ``int`` bitmask
(bit ``k`` set iff the entry ``(i, j, k)`` is 1).
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .errors import CapExceeded, SizeMismatch
from .partitions import Partition, conjugate, pi_partition

TABLE_CAP = 10**7


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        if any(v < 0 for r in rows for v in r):
            raise ValueError("entries must be nonnegative")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zeros(cls, p: int, q: int) -> "IntMatrix":
        return cls(tuple((0,) * q for _ in range(p)))

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def row_sums(self) -> tuple:
        return tuple(sum(r) for r in self.rows)

    @property
    def col_sums(self) -> tuple:
        return tuple(sum(c) for c in zip(*self.rows))

    @property
    def total(self) -> int:
        return sum(map(sum, self.rows))

    @property
    def pi(self) -> Partition:
        return pi_partition(self.entries())

    def entries(self) -> tuple:
        """Row-major flattening (the map Phi)."""
        return tuple(v for r in self.rows for v in r)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def scaled(self, n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(n * v for v in r) for r in self.rows))

    def padded(self, p: int, q: int) -> "IntMatrix":
        P, Q = self.shape
        if p < P or q < Q:
            raise ValueError("cannot pad to a smaller shape")
        rows = [tuple(r) + (0,) * (q - Q) for r in self.rows]
        rows += [(0,) * q] * (p - P)
        return IntMatrix(tuple(rows))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        p = max(self.shape[0], other.shape[0])
        q = max(self.shape[1], other.shape[1])
        a, b = self.padded(p, q), other.padded(p, q)
        return IntMatrix(tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows)))

    def __str__(self):
        return format_matrix(self.rows)


def as_matrix(a) -> IntMatrix:
    return a if isinstance(a, IntMatrix) else IntMatrix(tuple(tuple(r) for r in a))


def is_plane_partition(a) -> bool:
    """Rows and columns weakly decreasing, entries nonnegative integers."""
    rows = as_matrix(a).rows
    for r in rows:
        if any(x < y for x, y in zip(r, r[1:])):
            return False
    for r1, r2 in zip(rows, rows[1:]):
        if any(x < y for x, y in zip(r1, r2)):
            return False
    return True


def _margins(alpha, beta):
    alpha, beta = Partition(alpha), Partition(beta)
    if alpha.size != beta.size:
        raise SizeMismatch(f"|alpha| = {alpha.size} != |beta| = {beta.size}")
    return alpha, beta


def _prefix_bound(gamma, length):
    g = list(gamma) + [0] * max(0, length - len(gamma))
    out, s = [], 0
    for v in g[:length]:
        s += v
        out.append(s)
    return out


def enumerate_tables(alpha, beta, pi=None, dominated_by=None, cap: int = TABLE_CAP) -> Iterator[IntMatrix]:
    """Every matrix in M(alpha, beta), row-major backtracking order.

    ``pi`` restricts to matrices whose pi-sequence equals it; ``dominated_by``
    restricts to matrices whose pi-sequence is majorized by it (the integer
    points of the permutohedron meet the transportation polytope).  Both
    filters prune on partial assignments: the top-k sums of the entries placed
    so far can only grow.
    """
    alpha, beta = _margins(alpha, beta)
    p, q = len(alpha), len(beta)
    if p == 0:
        yield IntMatrix(())
        return
    target = None
    bound = None
    if pi is not None:
        pi = Partition(pi)
        if pi.size != alpha.size or len(pi) > p * q:
            return
        target = Counter(pi)
        target[0] += p * q - len(pi)
    if dominated_by is not None:
        dom = Partition(dominated_by)
        if dom.size != alpha.size or len(dom) > p * q:
            return
        bound = _prefix_bound(dom, p * q)

    col_res = list(beta)
    rows = []
    placed = []  # sorted descending, only used with dominated_by
    count = 0

    def ok_dom():
        s = 0
        for k, v in enumerate(placed):
            s += v
            if s > bound[k]:
                return False
        return True

    def place(v):
        if target is not None:
            if target[v] <= 0:
                return False
            target[v] -= 1
        if bound is not None:
            lo, hi = 0, len(placed)
            while lo < hi:
                mid = (lo + hi) // 2
                if placed[mid] >= v:
                    lo = mid + 1
                else:
                    hi = mid
            placed.insert(lo, v)
            if not ok_dom():
                unplace(v)
                return False
        return True

    def unplace(v):
        if target is not None:
            target[v] += 1
        if bound is not None:
            placed.remove(v)

    def fill_row(i, j, left, row):
        nonlocal count
        if j == q - 1:
            v = left
            if v > col_res[j]:
                return
            if not place(v):
                return
            col_res[j] -= v
            row.append(v)
            rows.append(tuple(row))
            yield from next_row(i + 1)
            rows.pop()
            row.pop()
            col_res[j] += v
            unplace(v)
            return
        rest_cap = sum(col_res[j + 1:])
        hi = min(left, col_res[j])
        lo = max(0, left - rest_cap)
        for v in range(hi, lo - 1, -1):
            if not place(v):
                continue
            col_res[j] -= v
            row.append(v)
            yield from fill_row(i, j + 1, left - v, row)
            row.pop()
            col_res[j] += v
            unplace(v)

    def next_row(i):
        nonlocal count
        if i == p - 1:
            last = tuple(col_res)
            ok = []
            for v in last:
                if place(v):
                    ok.append(v)
                else:
                    break
            if len(ok) == q:
                count += 1
                if count > cap:
                    raise CapExceeded("tables", cap)
                yield IntMatrix(tuple(rows) + (last,))
            for v in ok:
                unplace(v)
            return
        yield from fill_row(i, 0, alpha[i], [])

    yield from next_row(0)


def count_tables(alpha, beta, cap: int = TABLE_CAP) -> int:
    return sum(1 for _ in enumerate_tables(alpha, beta, cap=cap))


@lru_cache(maxsize=4096)
def _pi_counts(alpha, beta, cap):
    return dict(Counter(m.pi for m in enumerate_tables(alpha, beta, cap=cap)))


def pi_counts(alpha, beta, cap: int = TABLE_CAP) -> dict:
    """``{pi: |M(alpha, beta)_pi|}`` over all pi-sequences that occur."""
    alpha, beta = _margins(alpha, beta)
    return dict(_pi_counts(alpha, beta, cap))


# -- 3-dimensional binary matrices ---------------------------------------

@dataclass(frozen=True)
class BinaryTensor3:
    dims: tuple  # (p, q, r)
    lines: tuple  # lines[i][j] is a bitmask over k

    @classmethod
    def from_ones(cls, dims, ones) -> "BinaryTensor3":
        p, q, r = dims
        lines = [[0] * q for _ in range(p)]
        for i, j, k in ones:
            if not (0 <= i < p and 0 <= j < q and 0 <= k < r):
                raise ValueError(f"cell {(i, j, k)} outside box {dims}")
            lines[i][j] |= 1 << k
        return cls(tuple(dims), tuple(tuple(r_) for r_ in lines))

    @classmethod
    def from_slices(cls, slices) -> "BinaryTensor3":
        """Build from k-slices, each a p x q 0/1 matrix."""
        r = len(slices)
        p = len(slices[0]) if r else 0
        q = len(slices[0][0]) if p else 0
        ones = [(i, j, k) for k, s in enumerate(slices) for i in range(p) for j in range(q) if s[i][j]]
        return cls.from_ones((p, q, r), ones)

    def __getitem__(self, ijk) -> int:
        i, j, k = ijk
        return (self.lines[i][j] >> k) & 1

    def ones(self) -> list:
        p, q, r = self.dims
        return [(i, j, k) for i in range(p) for j in range(q) for k in range(r) if (self.lines[i][j] >> k) & 1]

    def slices(self) -> list:
        p, q, r = self.dims
        return [[[self[i, j, k] for j in range(q)] for i in range(p)] for k in range(r)]

    @property
    def marginals(self) -> tuple:
        return marginals3(self)

    def permute_axes(self, perm) -> "BinaryTensor3":
        """Old axis ``a`` becomes new axis ``perm[a]``."""
        dims = [0, 0, 0]
        for a in range(3):
            dims[perm[a]] = self.dims[a]
        ones = []
        for c in self.ones():
            new = [0, 0, 0]
            for a in range(3):
                new[perm[a]] = c[a]
            ones.append(tuple(new))
        return BinaryTensor3.from_ones(tuple(dims), ones)

    def heights(self) -> IntMatrix:
        """Number of ones on each line along the third axis."""
        return IntMatrix(tuple(tuple(bin(m).count("1") for m in row) for row in self.lines))


def marginals3(x: BinaryTensor3) -> tuple:
    """The 1-marginals (alpha, beta, gamma), recomputed from the entries."""
    p, q, r = x.dims
    a, b, c = [0] * p, [0] * q, [0] * r
    for i, j, k in x.ones():
        a[i] += 1
        b[j] += 1
        c[k] += 1
    return tuple(a), tuple(b), tuple(c)


def graph(a, depth: int | None = None) -> BinaryTensor3:
    """The 0/1 lift: cell (i, j, k) is 1 iff k < a[i][j] (0-based k)."""
    a = as_matrix(a)
    p, q = a.shape
    r = max(a.entries(), default=0) if depth is None else depth
    lines = tuple(tuple((1 << v) - 1 for v in row) for row in a.rows)
    return BinaryTensor3((p, q, r), lines)


def enumerate_binary3(alpha, beta, gamma, cap: int = TABLE_CAP) -> Iterator[BinaryTensor3]:
    """All binary tensors with 1-marginals (alpha, beta, gamma).

    Cell-by-cell backtracking in (i, j, k) order; a branch dies as soon as a
    residual marginal is negative or exceeds the cells still free in its slice.
    Infeasible margins give an empty stream.
    """
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if not (alpha.size == beta.size == gamma.size):
        return
    p, q, r = len(alpha), len(beta), len(gamma)
    if p == 0:
        yield BinaryTensor3((0, 0, 0), ())
        return
    ra, rb, rc = list(alpha), list(beta), list(gamma)
    # free cells remaining in each slice, updated as cells are decided
    fa = [q * r] * p
    fb = [p * r] * q
    fc = [p * q] * r
    lines = [[0] * q for _ in range(p)]
    cells = [(i, j, k) for i in range(p) for j in range(q) for k in range(r)]
    count = 0

    def rec(t):
        nonlocal count
        if t == len(cells):
            count += 1
            if count > cap:
                raise CapExceeded("binary tensors", cap)
            yield BinaryTensor3((p, q, r), tuple(tuple(row) for row in lines))
            return
        i, j, k = cells[t]
        fa[i] -= 1
        fb[j] -= 1
        fc[k] -= 1
        if ra[i] > 0 and rb[j] > 0 and rc[k] > 0:
            ra[i] -= 1
            rb[j] -= 1
            rc[k] -= 1
            if ra[i] <= fa[i] and rb[j] <= fb[j] and rc[k] <= fc[k]:
                lines[i][j] |= 1 << k
                yield from rec(t + 1)
                lines[i][j] &= ~(1 << k)
            ra[i] += 1
            rb[j] += 1
            rc[k] += 1
        if ra[i] <= fa[i] and rb[j] <= fb[j] and rc[k] <= fc[k]:
            yield from rec(t + 1)
        fa[i] += 1
        fb[j] += 1
        fc[k] += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def _binary_count(rows: tuple, cols: tuple) -> int:
    # 0/1 matrices with row sums ``rows`` and column sums ``cols`` (a sorted multiset)
    if not rows:
        return int(not any(cols))
    s, rest = rows[0], rows[1:]
    groups = sorted(Counter(c for c in cols if c > 0).items(), reverse=True)
    zeros = sum(1 for c in cols if c == 0)

    def rec(g, left, new):
        if g == len(groups):
            if left:
                return 0
            return _binary_count(rest, tuple(sorted(new + [0] * zeros, reverse=True)))
        value, mult = groups[g]
        acc = 0
        for take in range(min(mult, left), -1, -1):
            ways = comb(mult, take)
            sub = rec(g + 1, left - take, new + [value - 1] * take + [value] * (mult - take))
            acc += ways * sub
        return acc

    return rec(0, s, [])


def count_binary3(alpha, beta, gamma, cap: int = TABLE_CAP) -> int:
    """|M*(alpha, beta, gamma)|, exactly.

    Groups tensors by their projection along the third axis: the line sums
    form a matrix N in M(alpha, beta), and the ways to realize N depend only on
    pi(N).  So the count is ``sum over pi of |M(alpha,beta)_pi| * B(pi, gamma)``
    with B counting 0/1 matrices with row sums pi and column sums gamma.
    """
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if not (alpha.size == beta.size == gamma.size):
        return 0
    r = len(gamma)
    total = 0
    for pi, mult in pi_counts(alpha, beta, cap=cap).items():
        if pi and pi[0] > r:
            continue
        total += mult * _binary_count(tuple(pi), tuple(gamma))
    return total


def is_matrix_of_uniqueness(x: BinaryTensor3) -> bool:
    a, b, c = (Partition(sorted(m, reverse=True)) for m in marginals3(x))
    return count_binary3(a, b, c) == 1


# -- symmetries of plane partitions --------------------------------------

S3 = {
    "id": (0, 1, 2),
    "(12)": (1, 0, 2),
    "(13)": (2, 1, 0),
    "(23)": (0, 2, 1),
    "(123)": (1, 2, 0),
    "(132)": (2, 0, 1),
}


def _box(a: IntMatrix, box):
    p, q = a.shape
    if box is None:
        return (p, q, max(a.entries(), default=0))
    P, Q, R = box
    if p > P or q > Q or max(a.entries(), default=0) > R:
        raise ValueError(f"matrix does not fit in box {box}")
    return (P, Q, R)


def s3_act(perm, a, box=None) -> IntMatrix:
    """Permute the axes of the pyramid of a plane partition and read it back.

    ``perm`` is either a key of :data:`S3` (cycle notation on axes 1, 2, 3)
    or a tuple with ``perm[a]`` the new position of old axis ``a``.
    """
    a = as_matrix(a)
    if not is_plane_partition(a):
        raise ValueError("s3_act needs a plane partition")
    perm = S3[perm] if isinstance(perm, str) else tuple(perm)
    box = _box(a, box)
    t = graph(a.padded(box[0], box[1]), depth=box[2]).permute_axes(perm)
    return t.heights()


def complement(a, box=None) -> IntMatrix:
    """Entry (i, j) becomes ``r - a[p-1-i][q-1-j]`` inside the box (p, q, r)."""
    a = as_matrix(a)
    if not is_plane_partition(a):
        raise ValueError("complement needs a plane partition")
    p, q, r = _box(a, box)
    full = a.padded(p, q).rows
    return IntMatrix(tuple(tuple(r - full[p - 1 - i][q - 1 - j] for j in range(q)) for i in range(p)))


def t_orbit(a, box=None) -> list:
    """The 12 images ``[(label, matrix), ...]`` under S3 and complementation."""
    a = as_matrix(a)
    box = _box(a, box)
    out = []
    for comp in (False, True):
        base = complement(a, box) if comp else a.padded(box[0], box[1])
        for name, perm in S3.items():
            label = ("c" if comp else "") + name
            out.append((label, s3_act(perm, base, box)))
    return out


# -- text and JSON formats ------------------------------------------------

def format_matrix(rows) -> str:
    return "\n".join(" ".join(str(v) for v in r) for r in rows)


def parse_matrix(text: str) -> IntMatrix:
    """Whitespace rows, one per line, or JSON ``{"rows": [[...], ...]}``."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        data = json.loads(stripped)
        rows = data["rows"] if isinstance(data, dict) else data
        return IntMatrix(tuple(tuple(int(v) for v in r) for r in rows))
    rows = []
    for line in stripped.splitlines():
        line = line.split("#")[0].strip()
        if line:
            rows.append(tuple(int(v) for v in line.replace(",", " ").split()))
    return IntMatrix(tuple(rows))


def parse_inline_matrix(text: str) -> IntMatrix:
    """``"4 3 2; 3 1 0; 1 1 0"`` style inline matrices."""
    return parse_matrix("\n".join(text.split(";")))


def matrix_to_json(a) -> dict:
    return {"rows": [list(r) for r in as_matrix(a).rows]}


def format_tensor(x: BinaryTensor3) -> str:
    """k-slices in the matrix text format, separated by blank lines."""
    return "\n\n".join(format_matrix(s) for s in x.slices())


def parse_tensor(text: str) -> BinaryTensor3:
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        return BinaryTensor3.from_slices(data["slices"])
    blocks = [b for b in stripped.split("\n\n") if b.strip()]
    return BinaryTensor3.from_slices([parse_matrix(b).rows for b in blocks])


def tensor_to_json(x: BinaryTensor3) -> dict:
    return {"dims": list(x.dims), "slices": x.slices()}


def graph_marginals_expected(a) -> tuple:
    a = as_matrix(a)
    return a.row_sums, a.col_sums, tuple(conjugate(a.pi))
