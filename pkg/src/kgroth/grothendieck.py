"""Stable (G) and dual stable (g) Grothendieck polynomials and their row Pieri rules.

The Pieri coefficients are available three ways: the closed binomial
formulas, inclusion-exclusion over meets (g) or joins (G) of the size-a
strips, and Möbius values of the horizontal-strip posets.  The sum bases
g~_lam = sum_{mu in lam} g_mu and G~_lam = sum_{mu containing lam} G_mu turn
the Pieri products into multiplicity-free sums over an order ideal / filter.
"""

from __future__ import annotations

import math
from collections import Counter

from .partitions import (
    AT_LEAST,
    AT_MOST,
    EXACT,
    Partition,
    as_partition,
    contains,
    degree_lex_key,
    fits_rectangle,
    is_horizontal_strip,
    join,
    meet,
    skew_stats,
    strips,
    subpartitions,
    superpartitions,
)
from .poset import ONE_HAT, ZERO_HAT, FinitePoset, adjoin_bottom, adjoin_top
from .symfunc import (
    G_LOWER,
    G_UPPER,
    INF,
    SCHUR,
    H1,
    SymFunc,
    basis_element,
    convert,
    dual_grothendieck_schur,
    grothendieck_schur,
    multiply,
    specialize_one,
)

LE = "le"
GE = "ge"


class CoefficientMap(dict):
    """Partition -> nonzero integer."""

    def __init__(self, entries=()):
        super().__init__()
        for mu, c in dict(entries).items():
            if c:
                self[as_partition(mu)] = int(c)

    def terms(self) -> list[tuple[Partition, int]]:
        return sorted(self.items(), key=lambda kv: degree_lex_key(kv[0]))

    def to_json(self) -> list[dict]:
        return [{"part": list(mu), "coeff": c} for mu, c in self.terms()]


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero for k < 0; C(n, k) = (-1)^k C(k-n-1, k) for n < 0."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return (-1) ** k * math.comb(k - n - 1, k)


# -- expansions ------------------------------------------------------------------------

def g_expand(lam) -> SymFunc:
    """g_lam in the Schur basis, from reverse plane partitions."""
    return SymFunc(SCHUR, INF, dict(dual_grothendieck_schur(as_partition(lam))))


def G_expand(lam, D: int) -> SymFunc:
    """G_lam in the Schur basis up to degree D, from set-valued tableaux."""
    lam = as_partition(lam)
    if D < lam.size:
        raise ValueError(f"degree {D} below |{lam}|")
    return SymFunc(SCHUR, D, dict(grothendieck_schur(lam, D)))


def g_sum(lam) -> SymFunc:
    return SymFunc(G_LOWER, INF, {mu: 1 for mu in subpartitions(as_partition(lam))})


def G_sum(lam, D: int) -> SymFunc:
    lam = as_partition(lam)
    if D < lam.size:
        raise ValueError(f"degree {D} below |{lam}|")
    return SymFunc(G_UPPER, D, {mu: 1 for mu in superpartitions(lam, D)})


# -- closed Pieri formulas ---------------------------------------------------------------

def pieri_G_coefficient(lam, a: int, mu) -> int:
    """Coefficient of G_mu in G_(a) G_lam; zero unless mu/lam is a strip with |mu/lam| >= a."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not is_horizontal_strip(lam, mu):
        return 0
    if a == 0:
        return int(mu == lam)
    st = skew_stats(lam, mu)
    if st.size < a:
        return 0
    return (-1) ** (st.size - a) * binom(st.rows - 1, st.size - a)


def pieri_g_coefficient(lam, a: int, mu) -> int:
    """Coefficient of g_mu in g_(a) g_lam; zero unless mu/lam is a strip with |mu/lam| <= a."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not is_horizontal_strip(lam, mu):
        return 0
    st = skew_stats(lam, mu)
    if st.size > a:
        return 0
    return (-1) ** (a - st.size) * binom(st.co_rows, a - st.size)


def pieri_G(lam, a: int) -> CoefficientMap:
    lam = as_partition(lam)
    if a < 0:
        raise ValueError("a must be nonnegative")
    if a == 0:
        return CoefficientMap({lam: 1})
    return CoefficientMap({mu: pieri_G_coefficient(lam, a, mu) for mu in strips(lam, AT_LEAST, a)})


def pieri_g(lam, a: int) -> CoefficientMap:
    lam = as_partition(lam)
    if a < 0:
        raise ValueError("a must be nonnegative")
    return CoefficientMap({mu: pieri_g_coefficient(lam, a, mu) for mu in strips(lam, AT_MOST, a)})


# -- inclusion-exclusion forms -------------------------------------------------------------

def exact_strips(lam, a: int) -> list[Partition]:
    """The size-a strips over lam, sorted."""
    return sorted(strips(lam, EXACT, a), key=degree_lex_key)


def alternating_sum(generators, op) -> CoefficientMap:
    """sum over nonempty subsets S of (-1)^(|S|-1) [op-fold of S]."""
    acc: Counter = Counter()

    def rec(start, current, sign):
        for i in range(start, len(generators)):
            nxt = generators[i] if current is None else op(current, generators[i])
            acc[nxt] += sign
            rec(i + 1, nxt, -sign)

    rec(0, None, 1)
    return CoefficientMap(acc)


def pieri_g_altsum(lam, a: int) -> CoefficientMap:
    return alternating_sum(exact_strips(lam, a), meet)


def pieri_G_altsum(lam, a: int) -> CoefficientMap:
    return alternating_sum(exact_strips(lam, a), join)


def ideal_product_g(lam, a: int) -> set[Partition]:
    """Partitions contained in some size-a strip over lam."""
    out: set[Partition] = set()
    for top in exact_strips(lam, a):
        out.update(subpartitions(top))
    return out


def filter_product_G(lam, a: int, D: int) -> set[Partition]:
    """Partitions of size <= D containing some size-a strip over lam."""
    lam = as_partition(lam)
    if D < lam.size + a:
        raise ValueError(f"degree {D} below |lam| + a = {lam.size + a}")
    out: set[Partition] = set()
    for bottom in exact_strips(lam, a):
        out.update(superpartitions(bottom, D))
    return out


def gsum_product(lam, a: int) -> SymFunc:
    """g~_(a) g~_lam expanded in the g basis."""
    return convert(multiply(g_sum((a,)), g_sum(lam)), G_LOWER)


def G_times_Gsum(lam, a: int, D: int) -> SymFunc:
    """G_(a) G~_lam expanded in the G basis up to degree D."""
    return convert(multiply(basis_element(G_UPPER, (a,), D), G_sum(lam, D)), G_UPPER)


# -- Möbius description --------------------------------------------------------------------

def _containment(x, y) -> bool:
    return contains(y, x)


def hs_poset(lam, a: int, side: str) -> FinitePoset:
    """Strips of size <= a plus a top (``le``), or strips of size >= a
    (under the b_0 <= a + t cap) plus a bottom (``ge``)."""
    if side == LE:
        els = sorted(strips(lam, AT_MOST, a), key=degree_lex_key)
        return adjoin_top(FinitePoset(els, _containment), ONE_HAT)
    if side == GE:
        els = sorted(strips(lam, AT_LEAST, a), key=degree_lex_key)
        return adjoin_bottom(FinitePoset(els, _containment), ZERO_HAT)
    raise ValueError(f"side must be {LE!r} or {GE!r}")


def ideal_poset(lam, a: int) -> FinitePoset:
    """Order ideal generated by the size-a strips over lam, plus a top."""
    els = sorted(ideal_product_g(lam, a), key=degree_lex_key)
    return adjoin_top(FinitePoset(els, _containment), ONE_HAT)


def _check_class(lam, a, mu, side):
    lam, mu = as_partition(lam), as_partition(mu)
    if not is_horizontal_strip(lam, mu):
        raise ValueError(f"{mu}/{lam} is not a horizontal strip")
    size = mu.size - lam.size
    if side == LE and size > a:
        raise ValueError(f"|{mu}/{lam}| = {size} > {a}")
    if side == GE and size < a:
        raise ValueError(f"|{mu}/{lam}| = {size} < {a}")
    if side not in (LE, GE):
        raise ValueError(f"side must be {LE!r} or {GE!r}")
    return lam, mu


def mobius_coefficient(lam, a: int, mu, side: str) -> int:
    """-mu(0^, mu) on the ``ge`` poset, or -mu(mu, 1^) on the ``le`` poset."""
    lam, mu = _check_class(lam, a, mu, side)
    if side == LE:
        p = hs_poset(lam, a, LE)
        return -p.mobius(mu, ONE_HAT)
    p = hs_poset(lam, a, GE)
    if mu not in p:
        # beyond the cap only the interval [0^, mu] matters
        els = sorted((nu for nu in subpartitions(mu) if is_horizontal_strip(lam, nu)
                      and nu.size - lam.size >= a), key=degree_lex_key)
        p = adjoin_bottom(FinitePoset(els, _containment), ZERO_HAT)
    return -p.mobius(ZERO_HAT, mu)


def check_unit_sums(lam, a: int, mu, side: str) -> int:
    """Sum of Pieri coefficients over strips below mu (ge) or above mu (le)."""
    lam, mu = _check_class(lam, a, mu, side)
    if side == GE:
        return sum(
            pieri_G_coefficient(lam, a, nu)
            for nu in subpartitions(mu)
            if is_horizontal_strip(lam, nu) and nu.size - lam.size >= a
        )
    return sum(pieri_g_coefficient(lam, a, nu) for nu in strips(lam, AT_MOST, a) if contains(nu, mu))


def binom_identity(R: int, q: int, b_lo: int, b_hi: int) -> tuple[int, int]:
    if b_lo > b_hi:
        raise ValueError("need b_lo <= b_hi")
    lhs = sum(
        (-1) ** (x - R) * binom(q + (x > b_lo), x - R)
        for x in range(b_lo, b_hi + 1)
        if x >= R
    )
    rhs = (-1) ** (b_hi - R) * binom(q, b_hi - R) if b_hi >= R else 0
    return lhs, rhs


# -- sum-basis identities ---------------------------------------------------------------------

def H1_action_on_G(lam, D: int) -> SymFunc:
    """(sum_i h_i) * G_lam, expanded in the G basis up to degree D."""
    return convert(multiply(H1(D), G_expand(lam, D)), G_UPPER)


def gtilde_is_specialization(lam, n: int | None = None) -> bool:
    """g_lam(1, x) == g~_lam(x) in n variables (default |lam| + 1)."""
    lam = as_partition(lam)
    n = lam.size + 1 if n is None else n
    return specialize_one(g_expand(lam), n) == convert(g_sum(lam), SCHUR)


def ktheory_project(f, k: int, m: int):
    """Drop every term whose partition does not fit the k x m rectangle."""
    if isinstance(f, SymFunc):
        return SymFunc(f.basis, f.cutoff, {mu: c for mu, c in f.coeffs.items() if fits_rectangle(mu, k, m)})
    return CoefficientMap({mu: c for mu, c in f.items() if fits_rectangle(mu, k, m)})
