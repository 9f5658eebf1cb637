"""Exact feasibility for systems of linear inequalities over the rationals.

Phase-1 simplex on an integer tableau (Edmonds' fraction-free pivoting:
every entry stays an integer and the true tableau is ``T / d`` for the last
pivot ``d``), with Bland's smallest-index rule so that it always terminates.
Variables are free; each one is split as ``x = x_plus - x_minus``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .partitions import to_exact


class Rel(enum.Enum):
    GE = ">="
    EQ = "="


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    rel: Rel
    rhs: Fraction

    def holds(self, x: Sequence) -> bool:
        lhs = sum(Fraction(c) * v for c, v in zip(self.coeffs, x))
        return lhs >= self.rhs if self.rel is Rel.GE else lhs == self.rhs


@dataclass
class LinearSystem:
    num_vars: int
    constraints: list = field(default_factory=list)

    def add(self, coeffs, rel, rhs) -> None:
        coeffs = tuple(to_exact(c) for c in coeffs)
        if len(coeffs) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} coefficients, got {len(coeffs)}")
        self.constraints.append(Constraint(coeffs, Rel(rel), Fraction(to_exact(rhs))))

    def ge(self, coeffs, rhs) -> None:
        self.add(coeffs, Rel.GE, rhs)

    def le(self, coeffs, rhs) -> None:
        self.add([-to_exact(c) for c in coeffs], Rel.GE, -to_exact(rhs))

    def eq(self, coeffs, rhs) -> None:
        self.add(coeffs, Rel.EQ, rhs)

    def satisfied_by(self, x: Sequence) -> bool:
        return len(x) == self.num_vars and all(c.holds(x) for c in self.constraints)


@dataclass(frozen=True)
class Feasibility:
    """Result of :func:`feasible`; truthy iff a witness was found."""

    witness: tuple | None
    pivots: int = 0

    @property
    def satisfiable(self) -> bool:
        return self.witness is not None

    def __bool__(self):
        return self.satisfiable


def _integer_row(coeffs, rhs):
    values = list(coeffs) + [rhs]
    den = 1
    for v in values:
        den = den * Fraction(v).denominator // math.gcd(den, Fraction(v).denominator)
    return [int(Fraction(v) * den) for v in values]


def feasible(system: LinearSystem) -> Feasibility:
    """Decide whether ``system`` has a rational solution; return one if so.

    The returned witness is re-checked by exact substitution before it leaves
    this function.
    """
    n = system.num_vars
    rows = []
    basis = []
    n_slack = sum(1 for c in system.constraints if c.rel is Rel.GE)
    ncols = 2 * n + n_slack
    art_rows = []
    slack = 2 * n
    for con in system.constraints:
        ints = _integer_row(con.coeffs, con.rhs)
        a, b = ints[:-1], ints[-1]
        row = a + [-v for v in a] + [0] * n_slack + [b]
        if con.rel is Rel.GE:
            row[slack] = -1
            if b <= 0:
                row = [-v for v in row]
                basis.append(slack)
            else:
                basis.append(None)
                art_rows.append(len(rows))
            slack += 1
        else:
            if b < 0:
                row = [-v for v in row]
            basis.append(None)
            art_rows.append(len(rows))
        rows.append(row)

    # phase-1 objective: sum of artificials = w[-1] - sum_j w[j] * x_j
    w = [0] * (ncols + 1)
    for i in art_rows:
        w = [u + v for u, v in zip(w, rows[i])]
    d = 1
    pivots = 0
    while True:
        enter = next((j for j in range(ncols) if w[j] > 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(rows):
            t = row[enter]
            if t <= 0:
                continue
            key_num, key_den = row[-1], t
            if best is None:
                best = i
                continue
            br = rows[best]
            lhs, rhs = key_num * br[enter], br[-1] * key_den
            if lhs < rhs or (lhs == rhs and _bkey(basis[i], i) < _bkey(basis[best], best)):
                best = i
        if best is None:
            # w[enter] > 0 with no positive entry cannot happen in phase 1:
            # the objective is bounded below by zero
            raise AssertionError("unbounded phase-1 objective")
        r = rows[best]
        p = r[enter]
        for i, row in enumerate(rows):
            if i == best:
                continue
            f = row[enter]
            rows[i] = [(v * p - f * rv) // d for v, rv in zip(row, r)]
        f = w[enter]
        w = [(v * p - f * rv) // d for v, rv in zip(w, r)]
        d = p
        basis[best] = enter
        pivots += 1

    if w[-1] > 0:
        return Feasibility(None, pivots)
    values = [Fraction(0)] * ncols
    for i, col in enumerate(basis):
        if col is not None:
            values[col] = Fraction(rows[i][-1], d)
    x = tuple(values[k] - values[n + k] for k in range(n))
    x = tuple(v.numerator if v.denominator == 1 else v for v in x)
    if not system.satisfied_by(x):
        raise AssertionError("simplex witness failed substitution check")
    return Feasibility(x, pivots)


def _bkey(col, row):
    # artificials (col None) sort by row index after every structural column
    return (1, row) if col is None else (0, col)
