"""Stability sequences of Kronecker coefficients along additive directions.

For a direction ``(alpha, beta, gamma)`` and a base triple ``(lam, mu, nu)``
the sequence ``s_k = g(lam + k alpha, mu + k beta, nu + k gamma)`` is weakly
increasing and eventually constant when the direction is additive.  Nothing
here can certify the eventual value; the plateau reported is an estimate
confirmed over a finite window.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .characters import KRON_CAP, InnerMethod, kron, perm_inner
from .kostka import kostka
from .partitions import Partition, add, scale
from .tables import TABLE_CAP, IntMatrix, as_matrix, enumerate_tables
from .tomography import is_additive

DEFAULT_WINDOW = 3


def _line(base, direction, k):
    return tuple(add(b, scale(k, d)) for b, d in zip(base, direction))


def _plateau(values, window):
    n = len(values) - 1
    for k in range(n - window + 1):
        if len(set(values[k:k + window + 1])) == 1:
            return k, values[k]
    return None, None


@dataclass
class StabilityReport:
    triple: tuple
    direction: tuple
    values: list
    window: int = DEFAULT_WINDOW
    truncated: int | None = None  # first k that hit the degree cap
    monotone: bool = field(init=False)
    plateau_start: int | None = field(init=False)
    plateau_value: int | None = field(init=False)

    def __post_init__(self):
        v = self.values
        self.monotone = all(a <= b for a, b in zip(v, v[1:]))
        self.plateau_start, self.plateau_value = _plateau(v, self.window)

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def to_json(self) -> dict:
        return {
            "triple": [list(p) for p in self.triple],
            "direction": [list(p) for p in self.direction],
            "values": list(self.values),
            "monotone": self.monotone,
            "plateau_start": self.plateau_start,
            "plateau_value": self.plateau_value,
            "window": self.window,
            "truncated": self.truncated,
            "plateau_is_estimate": True,
        }

    @classmethod
    def from_json(cls, data) -> "StabilityReport":
        return cls(tuple(Partition(p) for p in data["triple"]),
                   tuple(Partition(p) for p in data["direction"]),
                   list(data["values"]), data["window"], data.get("truncated"))

    def to_text(self) -> str:
        rows = [("k", "lambda", "mu", "nu", "s_k")]
        for k, s in enumerate(self.values):
            parts = _line(self.triple, self.direction, k)
            rows.append((str(k), *(",".join(map(str, p)) or "-" for p in parts), str(s)))
        widths = [max(len(r[c]) for r in rows) for c in range(5)]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows]
        tail = f"monotone: {self.monotone}; "
        if self.plateau_start is None:
            tail += f"no plateau confirmed within k <= {self.horizon} (window {self.window})"
        else:
            tail += (f"plateau {self.plateau_value} from k = {self.plateau_start} "
                     f"(window {self.window}, estimate)")
        if self.truncated is not None:
            tail += f"; truncated at k = {self.truncated} by the degree cap"
        return "\n".join(lines + [tail])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "s_k"])
        for k, s in enumerate(self.values):
            w.writerow([k, s])
        return buf.getvalue()


def _kron_at(args):
    lam, mu, nu, max_degree = args
    return kron(lam, mu, nu, max_degree=max_degree)


def stability_sequence(lam, mu, nu, alpha, beta, gamma, N: int, window: int = DEFAULT_WINDOW,
                       max_degree: int = KRON_CAP, jobs: int = 1) -> StabilityReport:
    """``s_0 .. s_N``; stops early (``truncated`` set) when the degree cap is hit."""
    base = (Partition(lam), Partition(mu), Partition(nu))
    direction = (Partition(alpha), Partition(beta), Partition(gamma))
    if len({p.size for p in base}) != 1 or len({d.size for d in direction}) != 1:
        raise ValueError("the base triple and the direction must each have equal sizes")
    n0, step = base[0].size, direction[0].size
    ks = [k for k in range(N + 1) if n0 + k * step <= max_degree]
    truncated = None if len(ks) == N + 1 else len(ks)
    tasks = [(*_line(base, direction, k), max_degree) for k in ks]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_kron_at, tasks))
    else:
        values = [_kron_at(t) for t in tasks]
    return StabilityReport(base, direction, values, window, truncated)


def kostka_upper_bound(lam, mu, nu, alpha, beta, gamma, k: int,
                       max_degree: int = KRON_CAP, max_tables: int = TABLE_CAP) -> tuple:
    """``(s_k, bound)`` with bound the Kostka sum over dominated tables.

    The bound counts, for every X in M(lam + k alpha, mu + k beta) whose
    pi-sequence is majorized by ``nu + k gamma``, the Kostka number
    ``K(nu + k gamma, pi(X))``.
    """
    l, m, n = _line((Partition(lam), Partition(mu), Partition(nu)),
                    (Partition(alpha), Partition(beta), Partition(gamma)), k)
    s = kron(l, m, n, max_degree=max_degree)
    bound = sum(kostka(n, x.pi) for x in enumerate_tables(l, m, dominated_by=n, cap=max_tables))
    if s > bound:
        raise AssertionError(f"s_{k} = {s} exceeds the Kostka bound {bound}")
    return s, bound


@dataclass
class LatticeSetSequence:
    counts: list
    injective: list          # injective[n]: X -> X + A maps E_n into E_{n+1} injectively
    surjective: list         # surjective[n]: ... and onto E_{n+1}
    bijection_verified_from: int | None

    def to_json(self) -> dict:
        return {"counts": self.counts, "injective": self.injective,
                "surjective": self.surjective,
                "bijection_verified_from": self.bijection_verified_from}


def lattice_sets(lam, mu, nu, alpha, beta, gamma, shape, N: int, max_tables: int = TABLE_CAP):
    """The sets E_0 .. E_N as lists of matrices padded to ``shape``."""
    base = (Partition(lam), Partition(mu), Partition(nu))
    direction = (Partition(alpha), Partition(beta), Partition(gamma))
    p, q = shape
    out = []
    for n in range(N + 1):
        l, m, v = _line(base, direction, n)
        if l.length > p or m.length > q:
            raise ValueError(f"margins {tuple(l)}, {tuple(m)} do not fit a {p}x{q} matrix")
        out.append([x.padded(p, q) for x in enumerate_tables(l, m, dominated_by=v, cap=max_tables)])
    return out


def lattice_sequence(lam, mu, nu, alpha, beta, gamma, A, N: int,
                     max_tables: int = TABLE_CAP) -> LatticeSetSequence:
    """Counts of E_n and the behaviour of ``X -> X + A`` between consecutive sets."""
    A = as_matrix(A)
    # X + A must keep the margins sorted, so A's own margins must already be
    got = (Partition(A.row_sums), Partition(A.col_sums), A.pi)
    if got != (Partition(alpha), Partition(beta), Partition(gamma)):
        raise ValueError(f"A has margins and pi-sequence {got}, not the direction")
    if is_additive(A) is None:
        raise ValueError("A is not additive")
    sets = lattice_sets(lam, mu, nu, alpha, beta, gamma, A.shape, N, max_tables)
    injective, surjective = [], []
    for cur, nxt in zip(sets, sets[1:]):
        target = set(nxt)
        image = [x + A for x in cur]
        inj = len(set(image)) == len(image) and all(y in target for y in image)
        injective.append(inj)
        surjective.append(inj and len(image) == len(target))
    start = None
    for n in range(len(surjective) - 1, -1, -1):
        if not surjective[n]:
            break
        start = n
    return LatticeSetSequence([len(s) for s in sets], injective, surjective, start)


@dataclass
class StembridgeResult:
    alpha: Partition
    beta: Partition
    gamma: Partition
    values: dict                      # n -> <phi^{n alpha} (x) phi^{n beta}, chi^{n gamma}>
    all_ones: bool
    dominated: IntMatrix | None = None  # unique X in M(alpha, beta) with pi(X) majorized by gamma
    dominated_additive: bool | None = None
    class_nonempty: bool = False      # M(alpha, beta)_gamma is nonempty

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha), "beta": list(self.beta), "gamma": list(self.gamma),
            "values": {str(n): v for n, v in self.values.items()},
            "all_ones": self.all_ones,
            "dominated_matrix": None if self.dominated is None else [list(r) for r in self.dominated.rows],
            "dominated_additive": self.dominated_additive,
            "class_nonempty": self.class_nonempty,
        }


def stembridge_condition(alpha, beta, gamma, N: int, max_tables: int = TABLE_CAP) -> StembridgeResult:
    """Evaluate the inner products for n = 1..N through the Kostka sum.

    When every value is 1 the unique table with pi-sequence majorized by
    ``gamma`` is extracted and tested for additivity.
    """
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    values = {n: perm_inner(scale(n, alpha), scale(n, beta), scale(n, gamma),
                            InnerMethod.KOSTKA_SUM, max_tables=max_tables)
              for n in range(1, N + 1)}
    all_ones = all(v == 1 for v in values.values())
    res = StembridgeResult(alpha, beta, gamma, values, all_ones)
    dominated = list(enumerate_tables(alpha, beta, dominated_by=gamma, cap=max_tables))
    res.class_nonempty = any(x.pi == gamma for x in dominated)
    if all_ones:
        if len(dominated) != 1:
            raise AssertionError(f"expected one dominated table, found {len(dominated)}")
        res.dominated = dominated[0]
        res.dominated_additive = is_additive(dominated[0]) is not None
    return res


def corollary_direction(alpha) -> tuple:
    """``(alpha, alpha', (1^|alpha|))``: the margins and pi-sequence of the
    Young binary matrix of ``alpha``, an additive direction."""
    from .partitions import conjugate

    alpha = Partition(alpha)
    return alpha, conjugate(alpha), Partition((1,) * alpha.size)


def run_stability_grid(directions, max_base: int, N: int, window: int = DEFAULT_WINDOW,
                       max_degree: int = KRON_CAP, jobs: int = 1) -> list:
    """Reports for every base triple with ``|lam| = |mu| = |nu| <= max_base``."""
    from .partitions import partitions_of

    reports = []
    for d in directions:
        for size in range(max_base + 1):
            parts = list(partitions_of(size))
            for lam in parts:
                for mu in parts:
                    for nu in parts:
                        reports.append(stability_sequence(lam, mu, nu, *d, N, window,
                                                          max_degree=max_degree, jobs=jobs))
    return reports


def report_summary(reports) -> dict:
    total = len(reports)
    plateau = sum(1 for r in reports if r.plateau_start is not None)
    return {
        "instances": total,
        "monotone": sum(r.monotone for r in reports),
        "plateau_reached": plateau,
        "plateau_equals_last": sum(1 for r in reports
                                   if r.plateau_start is not None and r.plateau_value == r.values[-1]),
        "plateau_fraction": plateau / total if total else 1.0,
    }


def dumps_reports(reports) -> str:
    return json.dumps([r.to_json() for r in reports])
