"""Kostka numbers as integer points of Gelfand-Tsetlin style polytopes.

A pattern of shape ``sigma`` and content ``gamma`` is a triangular array
``x[i][j]`` (0-based, ``i <= j < l``) where ``x[i][j]`` counts the letters
``j+1`` in row ``i+1`` of a semistandard tableau.  It belongs to the polytope
when

* Po: every entry is nonnegative,
* CS: ``sum(x[i][i..m]) >= sum(x[i+1][i+1..m+1])`` for ``i <= m < l-1``,
* Sh: row ``i`` sums to ``sigma[i]``,
* Co: column ``j`` sums to ``gamma[j]``.

Contents may be arbitrary nonnegative vectors; shapes must be weakly
decreasing.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import CapExceeded, NotInPolytope, SizeMismatch
from .partitions import Partition

GT_CAP = 10**7


@dataclass(frozen=True)
class GTPattern:
    rows: tuple  # rows[i] = (x[i][i], x[i][i+1], ..., x[i][l-1])

    @property
    def length(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int):
        if j < i:
            raise IndexError("entries live on or above the diagonal")
        return self.rows[i][j - i]

    @property
    def shape(self) -> tuple:
        return tuple(sum(r) for r in self.rows)

    @property
    def content(self) -> tuple:
        l = self.length
        return tuple(sum(self.entry(i, j) for i in range(j + 1)) for j in range(l))

    def is_integral(self) -> bool:
        return all(isinstance(v, int) or Fraction(v).denominator == 1
                   for r in self.rows for v in r)

    def __add__(self, other: "GTPattern") -> "GTPattern":
        a, b = _pad_pattern(self, other.length), _pad_pattern(other, self.length)
        return GTPattern(tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows)))

    def __sub__(self, other: "GTPattern") -> "GTPattern":
        a, b = _pad_pattern(self, other.length), _pad_pattern(other, self.length)
        return GTPattern(tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows)))


def _pad_pattern(x: GTPattern, length: int) -> GTPattern:
    l = x.length
    if length <= l:
        return x
    rows = [tuple(r) + (0,) * (length - l) for r in x.rows]
    rows += [(0,) * (length - i) for i in range(l, length)]
    return GTPattern(tuple(rows))


def _normalize(sigma, gamma):
    sigma = tuple(int(s) for s in sigma)
    gamma = tuple(int(g) for g in gamma)
    if any(a < b for a, b in zip(sigma, sigma[1:])) or any(s < 0 for s in sigma):
        raise ValueError(f"shape must be weakly decreasing and nonnegative: {sigma}")
    if any(g < 0 for g in gamma):
        raise ValueError(f"content must be nonnegative: {gamma}")
    if sum(sigma) != sum(gamma):
        raise SizeMismatch(f"sum{sigma} != sum{gamma}")
    l = max(len(sigma), len(gamma))
    return sigma + (0,) * (l - len(sigma)), gamma + (0,) * (l - len(gamma))


def _strips_below(mu: tuple, size: int, rows: int):
    """Partitions nu inside mu with mu/nu a horizontal strip of ``size`` boxes
    and at most ``rows`` nonzero rows."""
    l = len(mu)
    out = []

    def rec(i, left, acc):
        if i == l:
            if left == 0:
                out.append(tuple(acc))
            return
        upper = mu[i]
        lower = mu[i + 1] if i + 1 < l else 0
        if i >= rows:
            upper = 0
            if lower > 0:
                return
        for v in range(upper, lower - 1, -1):
            take = mu[i] - v
            if take > left:
                break
            acc.append(v)
            rec(i + 1, left - take, acc)
            acc.pop()

    rec(0, size, [])
    return out


@lru_cache(maxsize=None)
def _count(shape: tuple, content: tuple) -> int:
    # peel off the letter len(content) as a horizontal strip
    if not content:
        return int(not any(shape))
    size = content[-1]
    j = len(content)
    total = 0
    for nu in _strips_below(shape, size, j - 1):
        total += _count(nu, content[:-1])
    return total


def kostka(sigma: Sequence[int], gamma: Sequence[int]) -> int:
    """Number of integer patterns of shape ``sigma`` and content ``gamma``."""
    sigma, gamma = _normalize(sigma, gamma)
    return _count(sigma, gamma)


def enumerate_gt(sigma: Sequence[int], gamma: Sequence[int], cap: int = GT_CAP) -> Iterator[GTPattern]:
    """Every integer pattern in ST(sigma, gamma), each exactly once.

    Built letter by letter: after placing letters ``1..j`` the filled boxes
    form a partition, and letter ``j`` occupies a horizontal strip.
    """
    sigma, gamma = _normalize(sigma, gamma)
    l = len(sigma)
    count = 0

    def rec(j, shapes):
        nonlocal count
        if j < 0:
            count += 1
            if count > cap:
                raise CapExceeded("Gelfand-Tsetlin patterns", cap)
            chain = list(reversed(shapes))[1:]  # chain[j] = shape after letters 1..j+1
            prev = (0,) * l
            x = [[0] * (l - i) for i in range(l)]
            for jj, cur in enumerate(chain):
                for i in range(jj + 1):
                    x[i][jj - i] = cur[i] - prev[i]
                prev = cur
            yield GTPattern(tuple(tuple(r) for r in x))
            return
        mu = shapes[-1]
        for nu in _strips_below(mu, gamma[j], j):
            if _count(nu, gamma[:j]) == 0:
                continue
            yield from rec(j - 1, shapes + [nu])

    if l == 0:
        yield GTPattern(())
        return
    yield from rec(l - 1, [sigma])


def violated_condition(x: GTPattern, sigma: Sequence[int], gamma: Sequence[int]):
    """First violated condition as ``(name, index)`` or ``None``.

    Checks Po, CS, Sh, Co in that order, straight from their definitions.
    """
    l = x.length
    sigma = tuple(sigma) + (0,) * (l - len(sigma))
    gamma = tuple(gamma) + (0,) * (l - len(gamma))
    if len(sigma) > l or len(gamma) > l:
        return ("Sh" if len(sigma) > l else "Co", l)
    for i in range(l):
        for j in range(i, l):
            if x.entry(i, j) < 0:
                return ("Po", (i, j))
    for m in range(l - 1):
        for i in range(m + 1):
            left = sum(x.entry(i, j) for j in range(i, m + 1))
            right = sum(x.entry(i + 1, j) for j in range(i + 1, m + 2))
            if left < right:
                return ("CS", (i, m))
    for i in range(l):
        if sum(x.rows[i]) != sigma[i]:
            return ("Sh", i)
    for j in range(l):
        if sum(x.entry(i, j) for i in range(j + 1)) != gamma[j]:
            return ("Co", j)
    return None


def in_polytope(x: GTPattern, sigma, gamma) -> bool:
    return violated_condition(x, sigma, gamma) is None


def gt_to_ssyt(x: GTPattern) -> list:
    """Tableau rows: row ``i`` holds ``x[i][j]`` copies of the letter ``j+1``."""
    if not x.is_integral():
        raise ValueError("pattern is not integral")
    rows = []
    for i, r in enumerate(x.rows):
        row = []
        for off, v in enumerate(r):
            row.extend([i + off + 1] * int(v))
        rows.append(row)
    while rows and not rows[-1]:
        rows.pop()
    return rows


def ssyt_to_gt(tableau: Sequence[Sequence[int]], length: int) -> GTPattern:
    rows = []
    for i in range(length):
        row = tableau[i] if i < len(tableau) else []
        rows.append(tuple(sum(1 for v in row if v == j + 1) for j in range(i, length)))
    return GTPattern(tuple(rows))


def format_tableau(rows) -> str:
    return " ".join("[" + ",".join(str(v) for v in r) + "]" for r in rows)


def canonical_pattern(sigma: Sequence[int], length: int | None = None) -> GTPattern:
    """Diagonal pattern with ``x[i][i] = sigma[i]`` and zeros elsewhere."""
    sigma = tuple(sigma)
    if any(a < b for a, b in zip(sigma, sigma[1:])):
        raise ValueError("shape must be weakly decreasing")
    l = len(sigma) if length is None else length
    sigma = sigma + (0,) * (l - len(sigma))
    return GTPattern(tuple((sigma[i],) + (0,) * (l - i - 1) for i in range(l)))


def shift(x: GTPattern, gamma: Sequence[int]) -> GTPattern:
    """``x + C_gamma``: adds gamma to both shape and content."""
    l = max(x.length, len(gamma))
    return _pad_pattern(x, l) + canonical_pattern(gamma, l)


def unshift(x: GTPattern, gamma: Sequence[int], sigma: Sequence[int], content: Sequence[int]) -> GTPattern:
    """Inverse of :func:`shift` for a pattern of shape ``sigma``, content ``content``.

    Raises :class:`NotInPolytope` naming the first condition that ``x - C_gamma``
    fails for shape ``sigma - gamma`` and content ``content - gamma``.
    """
    l = max(x.length, len(gamma), len(sigma), len(content))
    g = tuple(gamma) + (0,) * (l - len(gamma))
    s = tuple(sigma) + (0,) * (l - len(sigma))
    c = tuple(content) + (0,) * (l - len(content))
    y = _pad_pattern(x, l) - canonical_pattern(g, l)
    bad = violated_condition(y, [a - b for a, b in zip(s, g)], [a - b for a, b in zip(c, g)])
    if bad is not None:
        raise NotInPolytope(*bad)
    return y


def _vec_add(a, b):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return tuple(x + y for x, y in zip(a, b))


def _vec_scale(n, a):
    return tuple(n * x for x in a)


def kostka_sequence(nu, rho, gamma, n_max: int) -> list:
    """``[K(nu + n gamma, rho + n gamma) for n in 0..n_max]``; ``rho`` may be unsorted."""
    return [kostka(_vec_add(nu, _vec_scale(n, gamma)), _vec_add(rho, _vec_scale(n, gamma)))
            for n in range(n_max + 1)]


def surjectivity_onset(nu, rho, gamma, n_max: int, cap: int = GT_CAP):
    """Least ``n <= n_max`` such that every pattern of ST(nu+(n+1)gamma, rho+(n+1)gamma)
    is a shift of one in ST(nu+n gamma, rho+n gamma); ``None`` if not reached."""
    for n in range(n_max + 1):
        sigma = _vec_add(nu, _vec_scale(n + 1, gamma))
        content = _vec_add(rho, _vec_scale(n + 1, gamma))
        ok = True
        for x in enumerate_gt(sigma, content, cap=cap):
            try:
                unshift(x, gamma, sigma, content)
            except NotInPolytope:
                ok = False
                break
        if ok and kostka(_vec_add(nu, _vec_scale(n, gamma)), _vec_add(rho, _vec_scale(n, gamma))) > 0:
            return n
    return None
