"""Integer partitions, Young's lattice, and horizontal strips.

Partitions are stored in canonical form (weakly decreasing, no trailing
zeros) so that tuple equality is mathematical equality.  Rows are 1-based in
the public API, matching the usual English-notation conventions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

INF = math.inf

EXACT = "exact"
AT_MOST = "at_most"
AT_LEAST = "at_least"
_MODES = (EXACT, AT_MOST, AT_LEAST)


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction; anything else that is not a
    partition raises ``ValueError``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"non-positive part in {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """0-based part access, reading missing parts as 0."""
        return self[i] if 0 <= i < len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        """(row, column) pairs, 0-based."""
        for r, p in enumerate(self):
            for c in range(p):
                yield r, c

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def to_json(self) -> list[int]:
        return list(self)


EMPTY = Partition()


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


# -- lattice structure -------------------------------------------------------

def contains(mu, lam) -> bool:
    """True iff ``lam`` is contained in ``mu`` (lam_i <= mu_i for all i)."""
    if len(lam) > len(mu):
        return False
    return all(l <= m for l, m in zip(lam, mu))


def meet(lam, mu) -> Partition:
    return Partition(min(a, b) for a, b in zip(lam, mu))


def join(lam, mu) -> Partition:
    return Partition(max(a, b) for a, b in itertools.zip_longest(lam, mu, fillvalue=0))


def is_horizontal_strip(lam, mu) -> bool:
    """True iff mu/lam is a horizontal strip (at most one box per column)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        return False
    return all(mu.part(i + 1) <= lam.part(i) for i in range(len(mu)))


# -- enumeration ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order."""
    return _partitions(n, n)


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of size <= n, ordered by (size, lex)."""
    return [p for k in range(n + 1) for p in sorted(partitions(k))]


def subpartitions(lam) -> list[Partition]:
    """All mu contained in lam, ordered by (size, lex)."""
    lam = as_partition(lam)
    out: list[Partition] = []

    def rec(i, prefix, bound):
        if i == len(lam):
            out.append(Partition(prefix))
            return
        for v in range(min(bound, lam[i]) + 1):
            rec(i + 1, prefix + [v], v)

    rec(0, [], lam.part(0))
    return sorted(set(out), key=degree_lex_key)


def superpartitions(lam, max_size: int) -> list[Partition]:
    """All mu containing lam with |mu| <= max_size, ordered by (size, lex)."""
    lam = as_partition(lam)
    out = []
    for k in range(lam.size, max_size + 1):
        out.extend(mu for mu in sorted(partitions(k)) if contains(mu, lam))
    return out


def inner_strips(lam, k: int) -> list[Partition]:
    """All nu with lam/nu a horizontal strip of size k."""
    lam = as_partition(lam)
    ranges = [range(lam.part(i + 1), lam[i] + 1) for i in range(len(lam))]
    out = []
    for nu in itertools.product(*ranges):
        if lam.size - sum(nu) == k:
            out.append(Partition(nu))
    return out


def degree_lex_key(p) -> tuple:
    return (sum(p), tuple(p))


# -- strip coordinates ---------------------------------------------------------

def addable_rows(lam) -> list[tuple[int, float]]:
    """Rows (1-based) admitting new boxes, with their capacities.

    Row 1 always appears with capacity ``INF``; row r > 1 appears when
    lam_{r-1} > lam_r, with capacity lam_{r-1} - lam_r.
    """
    lam = as_partition(lam)
    rows = [(1, INF)]
    for r in range(2, len(lam) + 2):
        n = lam.part(r - 2) - lam.part(r - 1)
        if n > 0:
            rows.append((r, n))
    return rows


@dataclass(frozen=True)
class StripCoordinates:
    """b_i boxes added to row r_i of ``base``; ``rows`` holds (r_i, n_i)."""

    base: Partition
    rows: tuple[tuple[int, float], ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.rows):
            raise ValueError("one value per addable row expected")
        for (_, n), b in zip(self.rows, self.values):
            if b < 0 or b > n:
                raise ValueError(f"coordinate {b} outside [0, {n}]")

    @property
    def t(self) -> int:
        return len(self.rows) - 1


def coords(lam, mu) -> StripCoordinates:
    lam, mu = as_partition(lam), as_partition(mu)
    if not is_horizontal_strip(lam, mu):
        raise ValueError(f"{mu}/{lam} is not a horizontal strip")
    rows = tuple(addable_rows(lam))
    values = tuple(mu.part(r - 1) - lam.part(r - 1) for r, _ in rows)
    return StripCoordinates(lam, rows, values)


def shape(c: StripCoordinates) -> Partition:
    parts = list(c.base) + [0]
    for (r, _), b in zip(c.rows, c.values):
        parts[r - 1] += b
    return Partition(parts)


def strips(lam, mode: str, a: int) -> set[Partition]:
    """Horizontal strips over lam of size exactly / at most / at least ``a``.

    The ``at_least`` family is infinite; it is cut at b_0 <= a + t, beyond
    which every Pieri coefficient for G vanishes.
    """
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if a < 0:
        raise ValueError("a must be nonnegative")
    lam = as_partition(lam)
    rows = addable_rows(lam)
    t = len(rows) - 1
    first_cap = a if mode != AT_LEAST else a + t
    other_cap = a if mode != AT_LEAST else INF
    ranges = [range(first_cap + 1)] + [range(int(min(n, other_cap)) + 1) for _, n in rows[1:]]
    keep = {
        EXACT: lambda s: s == a,
        AT_MOST: lambda s: s <= a,
        AT_LEAST: lambda s: s >= a,
    }[mode]
    out = set()
    rows = tuple(rows)
    for b in itertools.product(*ranges):
        if keep(sum(b)):
            out.add(shape(StripCoordinates(lam, rows, b)))
    return out


# -- skew statistics -----------------------------------------------------------

@dataclass(frozen=True)
class SkewStats:
    size: int
    rows: int
    co_rows: int


def skew_stats(lam, mu) -> SkewStats:
    """|mu/lam|, r(mu/lam), and r(lam/mu_bar) where mu_bar drops mu's first part."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not is_horizontal_strip(lam, mu):
        raise ValueError(f"{mu}/{lam} is not a horizontal strip")
    size = mu.size - lam.size
    rows = sum(1 for i in range(len(mu)) if mu[i] > lam.part(i))
    co_rows = sum(1 for i in range(len(lam)) if lam[i] > mu.part(i + 1))
    return SkewStats(size, rows, co_rows)


# -- rectangle operations ------------------------------------------------------

def fits_rectangle(mu, k: int, m: int) -> bool:
    """True iff mu has at most k parts, each at most m."""
    return len(mu) <= k and (not mu or mu[0] <= m)


def rotated_complement(mu, k: int, m: int) -> Partition:
    mu = as_partition(mu)
    if not fits_rectangle(mu, k, m):
        raise ValueError(f"{mu} does not fit in the {k}x{m} rectangle")
    return Partition(m - mu.part(i) for i in reversed(range(k)))


# -- parsing -------------------------------------------------------------------

def parse_partition(text: str) -> Partition:
    """Parse "3,1"; "" and "0" give the empty partition."""
    text = text.strip().strip("[]()")
    if text in ("", "0"):
        return EMPTY
    return Partition(int(x) for x in text.split(","))
