"""Slow, independent reference implementations used only by the tests."""
from fractions import Fraction
from itertools import permutations, product
from math import factorial


def partition_count(n):
    # Euler's pentagonal recurrence
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def hook_dimension(lam):
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


def _polymul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def frobenius_character(lam, rho):
    """chi^lam(rho) as the coefficient of x^(lam + delta) in a_delta * p_rho."""
    l = max(len(lam), 1)
    lam = tuple(lam) + (0,) * (l - len(lam))
    delta = tuple(range(l - 1, -1, -1))
    vand = {}
    for perm in permutations(range(l)):
        sign = 1
        for i in range(l):
            for j in range(i + 1, l):
                if perm[i] > perm[j]:
                    sign = -sign
        vand[tuple(delta[perm[i]] for i in range(l))] = sign
    poly = vand
    for r in rho:
        p = {tuple(r if i == k else 0 for i in range(l)): 1 for k in range(l)}
        poly = _polymul(poly, p)
    return poly.get(tuple(a + b for a, b in zip(lam, delta)), 0)


def brute_ssyt_count(shape, content):
    """Fill the diagram cell by cell with letters, counting semistandard fillings."""
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    letters = []
    for k, c in enumerate(content):
        letters += [k + 1] * c
    if len(letters) != len(cells):
        return 0
    m = len(content)
    count = 0
    grid = {}

    def rec(idx, used):
        nonlocal count
        if idx == len(cells):
            count += used == list(content)
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i, j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1, j] + 1)
        for v in range(lo, m + 1):
            if used[v - 1] < content[v - 1]:
                grid[i, j] = v
                used[v - 1] += 1
                rec(idx + 1, used)
                used[v - 1] -= 1
        grid.pop((i, j), None)

    rec(0, [0] * m)
    return count


def brute_tables(alpha, beta):
    p, q = len(alpha), len(beta)
    top = max(list(alpha) + list(beta) + [0])
    out = []
    for flat in product(range(top + 1), repeat=p * q):
        rows = [flat[i * q:(i + 1) * q] for i in range(p)]
        if [sum(r) for r in rows] == list(alpha) and [sum(c) for c in zip(*rows)] == list(beta):
            out.append(tuple(tuple(r) for r in rows))
    return out


def brute_binary3(alpha, beta, gamma):
    p, q, r = len(alpha), len(beta), len(gamma)
    count = 0
    for bits in product((0, 1), repeat=p * q * r):
        def at(i, j, k):
            return bits[(i * q + j) * r + k]
        if all(sum(at(i, j, k) for j in range(q) for k in range(r)) == alpha[i] for i in range(p)) and \
           all(sum(at(i, j, k) for i in range(p) for k in range(r)) == beta[j] for j in range(q)) and \
           all(sum(at(i, j, k) for i in range(p) for j in range(q)) == gamma[k] for k in range(r)):
            count += 1
    return count


def fourier_motzkin_feasible(rows):
    """rows: list of (coeffs, rhs) meaning coeffs . x >= rhs, exact."""
    rows = [([Fraction(c) for c in a], Fraction(b)) for a, b in rows]
    if not rows:
        return True
    n = len(rows[0][0])
    for v in range(n):
        pos, neg, zero = [], [], []
        for a, b in rows:
            (pos if a[v] > 0 else neg if a[v] < 0 else zero).append((a, b))
        new = list(zero)
        for ap, bp in pos:
            for an, bn in neg:
                s, t = -an[v], ap[v]
                new.append(([s * x + t * y for x, y in zip(ap, an)], s * bp + t * bn))
        # drop exact duplicates to keep the blow-up in check
        seen, rows = set(), []
        for a, b in new:
            key = (tuple(a), b)
            if key not in seen:
                seen.add(key)
                rows.append((a, b))
    return all(b <= 0 for _, b in rows)


def brute_additive(rows):
    """Decide additivity by Fourier-Motzkin on the strict system scaled to slack 1."""
    p, q = len(rows), len(rows[0])
    cons = []
    cells = [(i, j) for i in range(p) for j in range(q)]
    for (i, j), (k, l) in product(cells, cells):
        if rows[i][j] > rows[k][l]:
            a = [0] * (p + q)
            a[i] += 1
            a[p + j] += 1
            a[k] -= 1
            a[p + l] -= 1
            cons.append((a, 1))
    return fourier_motzkin_feasible(cons)
