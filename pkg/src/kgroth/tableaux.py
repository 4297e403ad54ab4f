"""Content enumeration for SSYT, set-valued tableaux and reverse plane partitions.

Every family is enumerated through its layer chain: S_j is the set of cells
whose (largest) entry is at most j.

* SSYT: S_j / S_{j-1} is a horizontal strip; value j has weight |S_j / S_{j-1}|.
* RPP: any chain of shapes; value j has weight equal to the number of columns
  meeting S_j / S_{j-1}.
* Set-valued: the cell maxima form an SSYT, so S_j / S_{j-1} is a horizontal
  strip.  Besides those maxima, j may appear as a non-maximal entry in any
  subset of the cells (r, S_j[r]) outside S_j whose upper neighbour lies in
  S_{j-1}.  Each such extra entry flips the sign.

Only contents that are partitions are produced, which is all that is needed
for monomial coefficients of a symmetric function.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition, as_partition, contains, subpartitions

SSYT = "ssyt"
SVT = "svt"
RPP = "rpp"


@dataclass(frozen=True)
class TableauFamily:
    kind: str
    shape: Partition
    alphabet: int
    degree_cap: int | None = None

    def __post_init__(self):
        if self.kind not in (SSYT, SVT, RPP):
            raise ValueError(f"unknown tableau kind {self.kind!r}")
        object.__setattr__(self, "shape", as_partition(self.shape))
        if self.kind == SVT and self.degree_cap is None:
            raise ValueError("set-valued tableaux need a degree cap")


def _strips_within(s: Partition, lam: Partition):
    """Horizontal strips s' over s with s' inside lam (s' == s included)."""
    ranges = []
    for i in range(len(lam)):
        hi = lam[i] if i == 0 else min(lam[i], s.part(i - 1))
        ranges.append(range(s.part(i), hi + 1))
    for parts in itertools.product(*ranges):
        yield Partition(parts)


def _svt_eligible(prev: Partition, cur: Partition, lam: Partition) -> int:
    count = 0
    for r in range(len(lam)):
        c = cur.part(r)
        if c >= lam[r]:
            continue
        if r == 0 or prev.part(r - 1) > c:
            count += 1
    return count


def _columns(inner: Partition, outer: Partition) -> int:
    cols = set()
    for r in range(len(outer)):
        cols.update(range(inner.part(r), outer[r]))
    return len(cols)


@lru_cache(maxsize=None)
def _transitions(kind: str, s: Partition, lam: Partition) -> tuple[tuple[Partition, int, int], ...]:
    """(next shape, weight, signed multiplicity) for one layer step, weight >= 1."""
    out: Counter = Counter()
    if kind == RPP:
        for nxt in _subshapes(lam):
            if nxt != s and contains(nxt, s):
                out[(nxt, _columns(s, nxt))] += 1
    elif kind == SSYT:
        for nxt in _strips_within(s, lam):
            if nxt != s:
                out[(nxt, nxt.size - s.size)] += 1
    else:
        for nxt in _strips_within(s, lam):
            k = nxt.size - s.size
            e = _svt_eligible(s, nxt, lam)
            for extra in range(e + 1):
                if k + extra:
                    out[(nxt, k + extra)] += (-1) ** extra * math.comb(e, extra)
    return tuple((nxt, w, m) for (nxt, w), m in sorted(out.items()) if m)


@lru_cache(maxsize=None)
def _subshapes(lam: Partition) -> tuple[Partition, ...]:
    return tuple(subpartitions(lam))


@lru_cache(maxsize=None)
def _suffixes(kind, s, lam, maxw, steps, budget) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Weakly decreasing weight sequences completing s to lam."""
    if s == lam:
        return (((), 1),)
    if steps == 0:
        return ()
    acc: Counter = Counter()
    for nxt, w, m in _transitions(kind, s, lam):
        if w > maxw or (budget is not None and w > budget):
            continue
        rest_budget = None if budget is None else budget - w
        for suffix, c in _suffixes(kind, nxt, lam, w, steps - 1, rest_budget):
            acc[(w,) + suffix] += m * c
    return tuple((k, v) for k, v in acc.items() if v)


def content_counts(family: TableauFamily) -> dict[Partition, int]:
    """Signed number of tableaux in ``family`` with each partition content."""
    lam = family.shape
    budget = family.degree_cap
    if budget is not None and budget < lam.size:
        return {}
    maxw = budget if budget is not None else max(lam.size, 1)
    raw = _suffixes(family.kind, Partition(), lam, maxw, family.alphabet, budget)
    return {Partition(nu): c for nu, c in raw}
