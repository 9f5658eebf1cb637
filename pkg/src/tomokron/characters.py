"""Exact character theory of the symmetric group.

Irreducible characters are evaluated with the Murnaghan-Nakayama rule on
beta-sets (abacus positions ``lam_i + l - i``).  Removing a border strip of
length ``r`` moves one bead from ``b`` to ``b - r``; the sign is the parity of
the beads jumped over.

Whole character rows are produced by a depth-first sweep over cycle types
(largest part first), carrying a signed multiset of partially stripped
shapes, so that rows for ``n`` in the high twenties are affordable.
"""
from __future__ import annotations

import enum
import json
import math
from collections import Counter
from functools import lru_cache
from pathlib import Path
from typing import Sequence

from .errors import CapExceeded, HypothesisNotMet, SizeMismatch
from .partitions import Partition, add, dominates, partitions_of

KRON_CAP = 18
CACHE_FORMAT_VERSION = 1


def _beta(lam: Sequence[int]) -> tuple:
    l = len(lam)
    return tuple(p + l - 1 - i for i, p in enumerate(lam))


def _shape(beta: tuple) -> Partition:
    l = len(beta)
    return Partition(b - (l - 1 - i) for i, b in enumerate(beta))


@lru_cache(maxsize=None)
def _strips(beta: tuple, r: int) -> tuple:
    """All ways to remove an r-border strip: ``((new_beta, sign), ...)``."""
    out = []
    occupied = set(beta)
    for idx, b in enumerate(beta):
        t = b - r
        if t < 0:
            break
        if t in occupied:
            continue
        jumped = 0
        pos = idx + 1
        while pos < len(beta) and beta[pos] > t:
            jumped += 1
            pos += 1
        new = beta[:idx] + beta[idx + 1:pos] + (t,) + beta[pos:]
        out.append((new, -1 if jumped & 1 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _syt_count(beta: tuple) -> int:
    # hook length formula in beta-set form: n! * prod(b_i - b_j) / prod(b_i!)
    n = sum(beta) - len(beta) * (len(beta) - 1) // 2
    num = math.factorial(n)
    for i, bi in enumerate(beta):
        for bj in beta[i + 1:]:
            num *= bi - bj
    den = 1
    for b in beta:
        den *= math.factorial(b)
    return num // den


def hook_length_dimension(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam``."""
    lam = Partition(lam)
    return _syt_count(_beta(lam))


@lru_cache(maxsize=200_000)
def _mn(beta: tuple, rho: tuple) -> int:
    if not rho:
        return 1
    if rho[0] == 1:
        return _syt_count(beta)
    total = 0
    for new, sign in _strips(beta, rho[0]):
        total += sign * _mn(new, rho[1:])
    return total


def character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """chi^lam evaluated on the class of cycle type ``rho``."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise SizeMismatch(f"|{tuple(lam)}| != |{tuple(rho)}|")
    return _mn(_beta(lam), tuple(rho))


def _sweep(beta: tuple, n: int) -> dict:
    out = {}
    empty_len = len(beta)

    def rec(states, rest, largest, prefix):
        if rest == 0:
            value = sum(states.values())
            if value:
                out[Partition(prefix)] = value
            return
        for r in range(min(rest, largest), 0, -1):
            if r == 1:
                value = sum(c * _syt_count(b) for b, c in states.items())
                if value:
                    out[Partition(prefix + (1,) * rest)] = value
                continue
            new = {}
            for b, c in states.items():
                for nb, sign in _strips(b, r):
                    new[nb] = new.get(nb, 0) + sign * c
            new = {b: c for b, c in new.items() if c}
            if new:
                rec(new, rest - r, r, prefix + (r,))

    if empty_len == 0:
        return {Partition(): 1}
    rec({beta: 1}, n, n, ())
    return out


@lru_cache(maxsize=4096)
def _row(lam: Partition) -> dict:
    return _sweep(_beta(lam), lam.size)


def character_row(lam: Sequence[int]) -> dict:
    """Nonzero values of chi^lam as ``{cycle type: value}``."""
    return dict(_row(Partition(lam)))


@lru_cache(maxsize=None)
def _z(rho: Partition) -> int:
    z = 1
    for part, mult in Counter(rho).items():
        z *= part ** mult * math.factorial(mult)
    return z


def class_size(rho: Sequence[int]) -> int:
    """Number of permutations with cycle type ``rho``: n!/z_rho."""
    rho = Partition(rho)
    return math.factorial(rho.size) // _z(rho)


def _check_sizes(*parts, cap=None):
    sizes = {p.size for p in parts}
    if len(sizes) != 1:
        raise SizeMismatch(f"sizes differ: {[tuple(p) for p in parts]}")
    n = sizes.pop()
    if cap is not None and n > cap:
        raise CapExceeded(f"degree {n}", cap)
    return n


def kron(lam, mu, nu, max_degree: int = KRON_CAP) -> int:
    """Kronecker coefficient g(lam, mu, nu) by the class sum of characters."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = _check_sizes(lam, mu, nu, cap=max_degree)
    return _kron(*sorted((lam, mu, nu)), n)


@lru_cache(maxsize=65536)
def _kron(lam, mu, nu, n):
    if lam == (n,) or n == 0:
        return int(mu == nu)
    rows = sorted((_row(lam), _row(mu), _row(nu)), key=len)
    a, b, c = rows
    total = 0
    for rho, va in a.items():
        vb = b.get(rho)
        if vb is None:
            continue
        vc = c.get(rho)
        if vc is None:
            continue
        total += class_size(rho) * va * vb * vc
    g, rem = divmod(total, math.factorial(n))
    assert rem == 0 and g >= 0, "class sum is not a nonnegative integer"
    return g


def kron_uncached(lam, mu, nu, max_degree: int = KRON_CAP) -> int:
    """Same value as :func:`kron`, recomputed without the row/value caches."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = _check_sizes(lam, mu, nu, cap=max_degree)
    rows = [_sweep(_beta(p), n) for p in (lam, mu, nu)]
    total = sum(class_size(rho) * rows[0][rho] * rows[1].get(rho, 0) * rows[2].get(rho, 0)
                for rho in rows[0])
    g, rem = divmod(total, math.factorial(n))
    assert rem == 0 and g >= 0
    return g


def kron_symmetry_check(lam, mu, nu, max_degree: int = KRON_CAP) -> bool:
    from itertools import permutations

    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _check_sizes(lam, mu, nu, cap=max_degree)
    # bypass the sorted-argument cache so each ordering is really evaluated
    values = {kron_uncached(*t, max_degree=max_degree) for t in permutations((lam, mu, nu))}
    return len(values) == 1


def permutation_character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """phi^lam(rho): ways to distribute the cycles of ``rho`` into blocks of sizes lam.

    Equivalently the number of fixed points of a permutation of type ``rho``
    acting on the cosets of the Young subgroup S_lam.
    """
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise SizeMismatch("sizes differ")
    return _perm_char(tuple(lam), tuple(rho))


@lru_cache(maxsize=None)
def _perm_char(blocks: tuple, cycles: tuple) -> int:
    if not cycles:
        return int(all(b == 0 for b in blocks))
    c, rest = cycles[0], cycles[1:]
    total = 0
    for i, b in enumerate(blocks):
        if b >= c:
            total += _perm_char(blocks[:i] + (b - c,) + blocks[i + 1:], rest)
    return total


def young_rule_character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """phi^lam(rho) expanded through Young's rule: sum of K_{kappa,lam} chi^kappa(rho)."""
    from .kostka import kostka

    lam = Partition(lam)
    return sum(kostka(kappa, lam) * character(kappa, rho)
               for kappa in partitions_of(lam.size) if dominates(kappa, lam))


class InnerMethod(enum.Enum):
    CHARACTER_SUM = "character"
    KOSTKA_SUM = "kostka"


def perm_inner(lam, mu, nu, method: InnerMethod | str = InnerMethod.CHARACTER_SUM,
               max_tables: int | None = None) -> int:
    """<phi^lam (x) phi^mu, chi^nu> computed by one of two independent routes."""
    method = InnerMethod(method)
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = _check_sizes(lam, mu, nu)
    if method is InnerMethod.KOSTKA_SUM:
        from .kostka import kostka
        from .tables import TABLE_CAP, pi_counts

        counts = pi_counts(lam, mu, cap=max_tables or TABLE_CAP)
        return sum(mult * kostka(nu, pi) for pi, mult in counts.items())
    # character sum with phi expanded by Young's rule
    total = 0
    chi = _row(nu)
    for rho, vc in chi.items():
        total += class_size(rho) * _young_value(lam, rho) * _young_value(mu, rho) * vc
    value, rem = divmod(total, math.factorial(n))
    assert rem == 0 and value >= 0
    return value


@lru_cache(maxsize=None)
def _young_value(lam: Partition, rho: Partition) -> int:
    return young_rule_character(lam, rho)


def manivel_monotone_check(alpha, beta, gamma, lam, mu, nu, max_degree: int = KRON_CAP) -> bool:
    """g(lam+alpha, mu+beta, nu+gamma) >= max(g(alpha,beta,gamma), g(lam,mu,nu)).

    Raises :class:`HypothesisNotMet` when either coefficient vanishes.
    """
    g1 = kron(alpha, beta, gamma, max_degree)
    g2 = kron(lam, mu, nu, max_degree)
    if g1 == 0 or g2 == 0:
        raise HypothesisNotMet("both Kronecker coefficients must be nonzero")
    g = kron(add(lam, alpha), add(mu, beta), add(nu, gamma), max_degree)
    return g >= max(g1, g2)


def character_table(n: int) -> dict:
    """Full table ``{(lam, rho): value}`` for S_n."""
    classes = list(partitions_of(n))
    table = {}
    for lam in classes:
        row = _row(lam)
        for rho in classes:
            table[lam, rho] = row.get(rho, 0)
    return table


def save_character_table(path, n: int) -> None:
    """Write the S_n table as versioned JSON lines, one record per value."""
    with open(path, "w") as fh:
        fh.write(json.dumps({"format": "tomokron-characters", "version": CACHE_FORMAT_VERSION}) + "\n")
        for (lam, rho), value in character_table(n).items():
            fh.write(json.dumps({"n": n, "lambda": list(lam), "rho": list(rho), "value": value}) + "\n")


def load_character_table(path) -> dict:
    lines = Path(path).read_text().splitlines()
    header = json.loads(lines[0])
    if header.get("version") != CACHE_FORMAT_VERSION:
        raise ValueError(f"unsupported cache version {header.get('version')}")
    table = {}
    for line in lines[1:]:
        rec = json.loads(line)
        table[Partition(rec["lambda"]), Partition(rec["rho"])] = rec["value"]
    return table


def clear_caches() -> None:
    for fn in (_strips, _syt_count, _mn, _row, _kron, _z, _perm_char, _young_value):
        fn.cache_clear()
