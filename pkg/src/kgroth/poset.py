"""Finite posets and their Möbius functions.

A ``FinitePoset`` holds its elements in a tuple and the order relation as a
read-only boolean matrix ``leq[i, j] == (elements[i] <= elements[j])``.
Labels are opaque hashables; the Grothendieck code uses partitions plus the
two bound markers below.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping

import numpy as np


class PosetError(ValueError):
    pass


class _Bound:
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (_bound, (self.name,))


def _bound(name):
    return ZERO_HAT if name == "0^" else ONE_HAT


ZERO_HAT = _Bound("0^")
ONE_HAT = _Bound("1^")


class FinitePoset:
    """An explicit finite partial order.

    ``leq`` is either a predicate ``leq(x, y)`` or an n x n boolean array
    indexed like ``elements``.  The relation is checked for reflexivity,
    antisymmetry and transitivity on construction.
    """

    def __init__(self, elements: Iterable[Hashable], leq):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise PosetError("duplicate elements")
        n = len(self.elements)
        if callable(leq):
            mat = np.array(
                [[bool(leq(x, y)) for y in self.elements] for x in self.elements],
                dtype=bool,
            ).reshape(n, n)
        else:
            mat = np.array(leq, dtype=bool).reshape(n, n)
        mat.flags.writeable = False
        self.leq_matrix = mat
        self._validate()

    def _validate(self):
        m = self.leq_matrix
        if not m.diagonal().all():
            raise PosetError("relation is not reflexive")
        both = m & m.T
        if (both & ~np.eye(len(m), dtype=bool)).any():
            raise PosetError("relation is not antisymmetric")
        mi = m.astype(np.int64)
        if ((mi @ mi > 0) & ~m).any():
            raise PosetError("relation is not transitive")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __repr__(self):
        return f"FinitePoset({len(self)} elements)"

    def leq(self, x, y) -> bool:
        return bool(self.leq_matrix[self.index[x], self.index[y]])

    @cached_property
    def _order(self) -> np.ndarray:
        # a linear extension: fewer elements below comes first
        return np.argsort(self.leq_matrix.sum(axis=0), kind="stable")

    def maximum(self):
        """The unique maximum element, or None."""
        tops = np.flatnonzero(self.leq_matrix.all(axis=0))
        return self.elements[tops[0]] if len(tops) else None

    def minimum(self):
        bots = np.flatnonzero(self.leq_matrix.all(axis=1))
        return self.elements[bots[0]] if len(bots) else None

    def maximal_elements(self, among=None) -> list:
        idx = np.arange(len(self)) if among is None else np.array([self.index[x] for x in among], dtype=int)
        sub = self.leq_matrix[np.ix_(idx, idx)]
        above = sub.sum(axis=1)  # elements >= x within the subset, including x
        return [self.elements[i] for i, c in zip(idx, above) if c == 1]

    def coatoms(self) -> list:
        top = self.maximum()
        if top is None:
            raise PosetError("poset has no maximum")
        return self.maximal_elements([x for x in self.elements if x != top])

    def meet(self, x, y):
        """Greatest lower bound of x and y; PosetError if it does not exist."""
        m = self.leq_matrix
        lower = np.flatnonzero(m[:, self.index[x]] & m[:, self.index[y]])
        for i in lower:
            if m[lower, i].all():
                return self.elements[i]
        raise PosetError(f"no meet of {x!r} and {y!r}")

    def induced(self, subset: Iterable) -> "FinitePoset":
        subset = list(subset)
        idx = [self.index[x] for x in subset]
        return FinitePoset(subset, self.leq_matrix[np.ix_(idx, idx)])

    @cached_property
    def mobius(self) -> "MobiusTable":
        return MobiusTable(self)


class MobiusTable:
    """mu(x, y) for all pairs, computed by the recurrence
    mu(x, x) = 1, mu(x, y) = -sum_{x <= z < y} mu(x, z)."""

    def __init__(self, poset: FinitePoset):
        self.poset = poset
        n = len(poset)
        leq = poset.leq_matrix
        strict = leq & ~np.eye(n, dtype=bool)
        mu = np.zeros((n, n), dtype=np.int64)
        for y in poset._order:
            col = -mu[:, strict[:, y]].sum(axis=1)
            col[y] = 1
            mu[:, y] = col
        mu.flags.writeable = False
        self.matrix = mu

    def __call__(self, x, y) -> int:
        ix = self.poset.index
        return int(self.matrix[ix[x], ix[y]])

    @property
    def values(self) -> dict:
        """(x, y) -> mu(x, y) for every comparable pair x <= y."""
        els = self.poset.elements
        xs, ys = np.nonzero(self.poset.leq_matrix)
        return {(els[i], els[j]): int(self.matrix[i, j]) for i, j in zip(xs, ys)}

    def check(self) -> bool:
        """Both defining sums vanish off the diagonal and equal 1 on it."""
        z = self.poset.leq_matrix.astype(np.int64)
        eye = np.eye(len(z), dtype=np.int64)
        # mu is supported on comparable pairs
        if (self.matrix[~self.poset.leq_matrix] != 0).any():
            return False
        return bool(((self.matrix @ z) == eye).all() and ((z @ self.matrix) == eye).all())


def mobius_table(p: FinitePoset) -> MobiusTable:
    return p.mobius


def adjoin_top(p: FinitePoset, label=ONE_HAT) -> FinitePoset:
    if label in p:
        raise PosetError(f"{label!r} already present")
    n = len(p)
    m = np.zeros((n + 1, n + 1), dtype=bool)
    m[:n, :n] = p.leq_matrix
    m[:, n] = True
    return FinitePoset(p.elements + (label,), m)


def adjoin_bottom(p: FinitePoset, label=ZERO_HAT) -> FinitePoset:
    if label in p:
        raise PosetError(f"{label!r} already present")
    n = len(p)
    m = np.zeros((n + 1, n + 1), dtype=bool)
    m[1:, 1:] = p.leq_matrix
    m[0, :] = True
    return FinitePoset((label,) + p.elements, m)


def dual(p: FinitePoset) -> FinitePoset:
    """Same elements, reversed order."""
    return FinitePoset(p.elements, p.leq_matrix.T)


def mobius_inversion_check(p: FinitePoset, g: Mapping) -> bool:
    """With gt(t) = sum_{s<=t} g(s), check g(t) = sum_{s<=t} mu(s,t) gt(s) for all t."""
    z = p.leq_matrix.astype(np.int64)
    gv = np.array([g.get(x, 0) for x in p.elements], dtype=np.int64)
    gt = z.T @ gv
    back = p.mobius.matrix.T @ gt
    return bool((back == gv).all())


def _require_top(phat: FinitePoset):
    top = phat.maximum()
    if top is None:
        raise PosetError("poset has no maximum")
    return top


def ideal_sum_coeffs(phat: FinitePoset) -> dict:
    """s -> -mu(s, top) for every s below the top.

    These are the coefficients expressing sum_{s in P} g(s) through the
    partial sums gt(s) = sum_{u <= s} g(u).
    """
    top = _require_top(phat)
    mu = phat.mobius
    return {s: -mu(s, top) for s in phat.elements if s != top}


def coatom_inclusion_exclusion(phat: FinitePoset, meet: Callable | None = None) -> list[tuple[int, object]]:
    """Signed meets (-1)^(m-1) x_{i1} ^ ... ^ x_{im} over nonempty coatom subsets.

    ``meet`` defaults to the poset's own greatest lower bound; a meet that
    falls outside P (or does not exist) raises PosetError.
    """
    top = _require_top(phat)
    meet = meet or phat.meet
    coatoms = phat.coatoms()
    out: list[tuple[int, object]] = []

    def rec(start, current, sign):
        for i in range(start, len(coatoms)):
            m = coatoms[i] if current is None else meet(current, coatoms[i])
            if m not in phat or m == top:
                raise PosetError(f"meet {m!r} not in P")
            out.append((sign, m))
            rec(i + 1, m, -sign)

    rec(0, None, 1)
    return out


def net_coefficients(signed: Iterable[tuple[int, object]]) -> dict:
    """Collapse a signed list into element -> net coefficient (zeros kept)."""
    net: Counter = Counter()
    for sign, x in signed:
        net[x] += sign
    return dict(net)


def coatom_meets(phat: FinitePoset) -> set:
    """All meets of coatom subsets, the top included as the empty meet."""
    top = _require_top(phat)
    return {x for _, x in coatom_inclusion_exclusion(phat)} | {top}


def meet_closure_restriction_check(phat: FinitePoset, sub) -> bool:
    """mu(s, top) agrees between ``phat`` and the subposet on ``sub``, and
    vanishes on ``phat`` away from coatom meets.

    ``sub`` is an iterable of elements (or a FinitePoset whose elements are
    used); it must contain the top and every coatom meet.
    """
    top = _require_top(phat)
    sub_elements = sub.elements if isinstance(sub, FinitePoset) else tuple(sub)
    meets = coatom_meets(phat)
    missing = [x for x in meets if x not in set(sub_elements)]
    if missing:
        raise PosetError(f"subposet misses coatom meets {missing!r}")
    if any(x not in phat for x in sub_elements):
        raise PosetError("subposet has elements outside the poset")
    small = phat.induced(sub_elements)
    mu, mu_sub = phat.mobius, small.mobius
    if any(mu(s, top) != mu_sub(s, top) for s in sub_elements):
        return False
    return all(mu(s, top) == 0 for s in phat.elements if s not in meets)


# -- standard examples -----------------------------------------------------------

def chain(n: int) -> FinitePoset:
    return FinitePoset(range(n), lambda x, y: x <= y)


def antichain(labels) -> FinitePoset:
    return FinitePoset(labels, lambda x, y: x == y)


def boolean_lattice(n: int) -> FinitePoset:
    subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]
    return FinitePoset(subsets, lambda x, y: x <= y)


def divisor_lattice(n: int) -> FinitePoset:
    divs = [d for d in range(1, n + 1) if n % d == 0]
    return FinitePoset(divs, lambda x, y: y % x == 0)
