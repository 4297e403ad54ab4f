"""Brute-force reference implementations.

Nothing here imports the enumeration or algebra code under test; only the
``Partition`` container is shared.
"""

import itertools
from collections import Counter

from kgroth.partitions import Partition


def all_partitions(n):
    if n == 0:
        return [Partition()]
    out = []

    def rec(rest, largest, prefix):
        if rest == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(rest, largest), 0, -1):
            rec(rest - p, p, prefix + [p])

    rec(n, n, [])
    return out


def cells(lam):
    return [(r, c) for r, p in enumerate(lam) for c in range(p)]


def contained(small, big):
    return all(small[i] <= (big[i] if i < len(big) else 0) for i in range(len(small)))


def is_hstrip(lam, mu):
    """One box per column, by listing the boxes."""
    if not contained(lam, mu):
        return False
    new = set(cells(mu)) - set(cells(lam))
    cols = [c for _, c in new]
    return len(cols) == len(set(cols))


def strips_brute(lam, sizes):
    out = set()
    for k in sizes:
        for mu in all_partitions(sum(lam) + k):
            if is_hstrip(lam, mu):
                out.add(mu)
    return out


# -- tableaux -----------------------------------------------------------------------

def _fillings(lam, values):
    cs = cells(lam)
    for vals in itertools.product(values, repeat=len(cs)):
        yield dict(zip(cs, vals))


def ssyt_contents(lam, n):
    counts = Counter()
    for T in _fillings(lam, range(1, n + 1)):
        if all(T[(r, c)] <= T[(r, c + 1)] for (r, c) in T if (r, c + 1) in T) and all(
            T[(r, c)] < T[(r + 1, c)] for (r, c) in T if (r + 1, c) in T
        ):
            counts[tuple(sum(1 for v in T.values() if v == i) for i in range(1, n + 1))] += 1
    return counts


def rpp_contents(lam, n):
    counts = Counter()
    for T in _fillings(lam, range(1, n + 1)):
        if all(T[(r, c)] <= T[(r, c + 1)] for (r, c) in T if (r, c + 1) in T) and all(
            T[(r, c)] <= T[(r + 1, c)] for (r, c) in T if (r + 1, c) in T
        ):
            weight = [0] * n
            for col in {c for _, c in T}:
                for v in {T[(r, c)] for (r, c) in T if c == col}:
                    weight[v - 1] += 1
            counts[tuple(weight)] += 1
    return counts


def svt_contents(lam, n, D):
    subsets = [frozenset(s) for k in range(1, n + 1) for s in itertools.combinations(range(1, n + 1), k)]
    counts = Counter()
    for T in _fillings(lam, subsets):
        total = sum(len(s) for s in T.values())
        if total > D:
            continue
        if all(max(T[(r, c)]) <= min(T[(r, c + 1)]) for (r, c) in T if (r, c + 1) in T) and all(
            max(T[(r, c)]) < min(T[(r + 1, c)]) for (r, c) in T if (r + 1, c) in T
        ):
            weight = tuple(sum(1 for s in T.values() if i in s) for i in range(1, n + 1))
            counts[weight] += (-1) ** (total - sum(lam))
    return counts


def partition_contents(counts):
    """Restrict a composition-indexed count to partition contents."""
    out = {}
    for w, c in counts.items():
        if list(w) == sorted(w, reverse=True) and c:
            out[Partition(w)] = c
    return out


# -- polynomials in n variables ----------------------------------------------------------

def schur_poly(lam, n):
    return Counter(ssyt_contents(lam, n))


def poly_mul(f, g):
    out = Counter()
    for a, x in f.items():
        for b, y in g.items():
            out[tuple(i + j for i, j in zip(a, b))] += x * y
    return Counter({k: v for k, v in out.items() if v})


def poly_combo(terms, n):
    out = Counter()
    for lam, c in terms:
        for k, v in schur_poly(lam, n).items():
            out[k] += c * v
    return Counter({k: v for k, v in out.items() if v})


# -- posets ----------------------------------------------------------------------------------

def mobius_brute(elements, leq):
    """mu(x, y) from the defining recurrence, straight from the predicate."""
    memo = {}

    def mu(x, y):
        if (x, y) in memo:
            return memo[(x, y)]
        if not leq(x, y):
            val = 0
        elif x == y:
            val = 1
        else:
            val = -sum(mu(x, z) for z in elements if leq(x, z) and leq(z, y) and z != y)
        memo[(x, y)] = val
        return val

    return mu
