"""Partitions, sorted vectors and the dominance (majorization) order.

A :class:`Partition` is a tuple subclass holding the nonzero parts in weakly
decreasing order.  Everything here is exact: vectors may hold ``int`` or
``fractions.Fraction`` entries, never floats.
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded

PARTITION_CAP = 40


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` and compares equal to the plain tuple
    ``(2, 1)``.  Unsorted input is rejected rather than sorted.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts are not weakly decreasing: {tuple(parts)}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {tuple(parts)}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """0-based part with implicit zero padding."""
        return self[i] if i < len(self) else 0

    def padded(self, length: int) -> tuple:
        if length < len(self):
            raise ValueError("cannot pad to a shorter length")
        return tuple(self) + (0,) * (length - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def depth(self) -> int:
        return depth(self)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part > j) for j in range(lam[0]))


def add(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    """Componentwise sum after zero-padding the shorter partition."""
    n = max(len(lam), len(mu))
    lam = tuple(lam) + (0,) * (n - len(lam))
    mu = tuple(mu) + (0,) * (n - len(mu))
    return Partition(a + b for a, b in zip(lam, mu))


def scale(n: int, lam: Sequence[int]) -> Partition:
    if n < 0:
        raise ValueError("scale factor must be nonnegative")
    return Partition(n * p for p in lam)


def depth(lam: Sequence[int]) -> int:
    lam = Partition(lam)
    return lam.size - lam.part(0)


def pi_sort(v: Iterable) -> tuple:
    """Entries of ``v`` in weakly decreasing order (the pi-sequence)."""
    return tuple(sorted(v, reverse=True))


def pi_partition(v: Iterable[int]) -> Partition:
    """pi-sequence of a nonnegative integer vector, zeros stripped."""
    return Partition(pi_sort(v))


class Majorization(enum.Enum):
    LESS_STRICT = "<"
    EQUAL = "="
    GREATER_STRICT = ">"
    INCOMPARABLE = "||"
    DIFFERENT_SUM = "!="


def majorize_cmp(a: Sequence, b: Sequence) -> Majorization:
    """Compare ``a`` and ``b`` in the majorization order.

    Both vectors are zero-padded to a common length and sorted.  ``LESS_STRICT``
    means ``a`` is majorized by ``b`` and their sorted forms differ.
    """
    n = max(len(a), len(b))
    sa = pi_sort(list(a) + [0] * (n - len(a)))
    sb = pi_sort(list(b) + [0] * (n - len(b)))
    if sum(sa) != sum(sb):
        return Majorization.DIFFERENT_SUM
    if sa == sb:
        return Majorization.EQUAL
    le = ge = True
    for x, y in zip(accumulate(sa), accumulate(sb)):
        if x > y:
            le = False
        elif x < y:
            ge = False
    if le:
        return Majorization.LESS_STRICT
    if ge:
        return Majorization.GREATER_STRICT
    return Majorization.INCOMPARABLE


def majorized_by(a: Sequence, b: Sequence) -> bool:
    """True iff ``a`` is majorized by ``b`` (weakly)."""
    return majorize_cmp(a, b) in (Majorization.LESS_STRICT, Majorization.EQUAL)


def strictly_majorized_by(a: Sequence, b: Sequence) -> bool:
    return majorize_cmp(a, b) is Majorization.LESS_STRICT


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance order on partitions: ``lam`` is at least ``mu``."""
    return majorized_by(mu, lam)


def partitions_of(n: int, max_part: int | None = None, cap: int = PARTITION_CAP) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise CapExceeded(f"partitions of {n}", cap)
    if max_part is None:
        max_part = n

    def rec(rest, largest):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from partitions_of(m)


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2^3,1"`` into ``Partition((4, 2, 2, 2, 1))``.

    The empty string and ``"()"`` give the empty partition.
    """
    text = text.strip().strip("()[]").strip()
    if not text:
        return Partition()
    parts = []
    for token in re.split(r"[,\s]+", text):
        if not token:
            continue
        if "^" in token:
            base, exp = token.split("^")
            parts.extend([int(base)] * int(exp))
        else:
            parts.append(int(token))
    return Partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")"


def to_exact(x) -> int | Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings; floats are refused."""
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        f = Fraction(x)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"inexact or unsupported number: {x!r}")


def rational_vector(values: Iterable) -> tuple:
    return tuple(to_exact(v) for v in values)


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
