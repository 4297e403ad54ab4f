"""Exact, degree-truncated symmetric function arithmetic.

A ``SymFunc`` is a sparse integer combination of basis elements indexed by
partitions, together with a cutoff D: coefficients are only meaningful in
degrees <= D.  ``INF`` marks an exact element of the (untruncated) ring.

All arithmetic goes through the Schur basis.  Products use the
Littlewood-Richardson rule; the monomial, homogeneous and elementary bases
are tied to Schur through Kostka numbers; the g and G bases through their
tableau expansions (reverse plane partitions, set-valued tableaux).
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .partitions import (
    INF,
    Partition,
    as_partition,
    degree_lex_key,
    inner_strips,
    partitions,
)
from .tableaux import RPP, SSYT, SVT, TableauFamily, content_counts

MONOMIAL = "monomial"
SCHUR = "schur"
HOMOGENEOUS = "homogeneous"
ELEMENTARY = "elementary"
G_LOWER = "gBasis"
G_UPPER = "GBasis"
BASES = (MONOMIAL, SCHUR, HOMOGENEOUS, ELEMENTARY, G_LOWER, G_UPPER)


class CutoffError(ValueError):
    """A computation would need coefficients beyond the available cutoff."""


@dataclass(frozen=True)
class SymFunc:
    basis: str
    cutoff: float
    coeffs: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.cutoff != INF and (self.cutoff < 0 or int(self.cutoff) != self.cutoff):
            raise ValueError(f"bad cutoff {self.cutoff!r}")
        if self.basis == G_UPPER and self.cutoff == INF:
            raise CutoffError("G-basis elements need a finite cutoff")
        clean = {}
        for mu, c in self.coeffs.items():
            mu = as_partition(mu)
            if mu.size > self.cutoff:
                raise CutoffError(f"term {mu} exceeds cutoff {self.cutoff}")
            if c:
                clean[mu] = int(c)
        object.__setattr__(self, "coeffs", clean)
        if self.cutoff != INF:
            object.__setattr__(self, "cutoff", int(self.cutoff))

    # -- inspection --------------------------------------------------------------

    def __getitem__(self, mu) -> int:
        return self.coeffs.get(as_partition(mu), 0)

    def terms(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: degree_lex_key(kv[0]))

    def degree(self) -> int:
        return max((mu.size for mu in self.coeffs), default=0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, cutoff) -> "SymFunc":
        cutoff = min(cutoff, self.cutoff)
        return SymFunc(self.basis, cutoff, {mu: c for mu, c in self.coeffs.items() if mu.size <= cutoff})

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "cutoff": None if self.cutoff == INF else self.cutoff,
            "terms": [{"part": list(mu), "coeff": c} for mu, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data) -> "SymFunc":
        cutoff = INF if data.get("cutoff") is None else data["cutoff"]
        return cls(data["basis"], cutoff, {Partition(t["part"]): t["coeff"] for t in data["terms"]})

    def __repr__(self):
        body = " + ".join(f"{c}*{_SHORT[self.basis]}{mu}" for mu, c in self.terms()) or "0"
        cut = "" if self.cutoff == INF else f" [deg<={self.cutoff}]"
        return body + cut

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return SymFunc(self.basis, self.cutoff, {mu: -c for mu, c in self.coeffs.items()})

    def __sub__(self, other):
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymFunc(self.basis, self.cutoff, {mu: c * other for mu, c in self.coeffs.items()})
        return multiply(self, other)

    __rmul__ = __mul__


_SHORT = {MONOMIAL: "m", SCHUR: "s", HOMOGENEOUS: "h", ELEMENTARY: "e", G_LOWER: "g", G_UPPER: "G"}


def basis_element(basis: str, mu, cutoff=INF) -> SymFunc:
    mu = as_partition(mu)
    if mu.size > cutoff:
        raise CutoffError(f"|{mu}| > cutoff {cutoff}")
    return SymFunc(basis, cutoff, {mu: 1})


def zero(basis: str, cutoff=INF) -> SymFunc:
    return SymFunc(basis, cutoff, {})


def one(cutoff=INF) -> SymFunc:
    return basis_element(SCHUR, Partition(), cutoff)


def add(f: SymFunc, g: SymFunc) -> SymFunc:
    if f.basis != g.basis:
        raise ValueError(f"cannot add {f.basis} and {g.basis} elements; convert first")
    cutoff = min(f.cutoff, g.cutoff)
    acc = Counter()
    for mu, c in f.coeffs.items():
        if mu.size <= cutoff:
            acc[mu] += c
    for mu, c in g.coeffs.items():
        if mu.size <= cutoff:
            acc[mu] += c
    return SymFunc(f.basis, cutoff, acc)


# -- Kostka numbers ----------------------------------------------------------------

@lru_cache(maxsize=None)
def kostka(lam, mu) -> int:
    """Number of SSYT of shape lam and content mu (mu any composition)."""
    lam, mu = Partition(lam), tuple(mu)
    if sum(mu) != lam.size:
        return 0
    if not mu:
        return 1
    return sum(kostka(nu, mu[:-1]) for nu in inner_strips(lam, mu[-1]))


@lru_cache(maxsize=None)
def schur_to_monomial(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    return tuple((nu, k) for nu in partitions(lam.size) if (k := kostka(lam, nu)))


@lru_cache(maxsize=None)
def homogeneous_to_schur(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    return tuple((lam, k) for lam in partitions(mu.size) if (k := kostka(lam, mu)))


@lru_cache(maxsize=None)
def elementary_to_schur(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    return tuple((lam, k) for lam in partitions(mu.size) if (k := kostka(lam.conjugate(), mu)))


# -- Littlewood-Richardson ------------------------------------------------------------

def _lr(lam: Partition, mu: Partition) -> Counter:
    # place mu_i boxes labelled i as a horizontal strip; the reverse reading
    # word stays a lattice word iff, for every row r, the i's in rows <= r
    # number at most the (i-1)'s in rows < r.
    out: Counter = Counter()

    def add_label(i, shp, prev):
        if i == len(mu):
            out[Partition(shp)] += 1
            return
        base = list(shp) + [0]
        prev = list(prev) + [0] * (len(base) - len(prev))
        cur = [0] * len(base)

        def place(r, remaining, cum_new, cum_prev):
            if r == len(base):
                if remaining == 0:
                    add_label(i + 1, [x + y for x, y in zip(base, cur)], cur[:])
                return
            hi = remaining if r == 0 else min(remaining, base[r - 1] - base[r])
            if i > 0:
                hi = min(hi, cum_prev - cum_new)
            for b in range(hi, -1, -1):
                cur[r] = b
                place(r + 1, remaining - b, cum_new + b, cum_prev + prev[r])
            cur[r] = 0

        place(0, mu[i], 0, 0)

    add_label(0, list(lam), [])
    return out


@lru_cache(maxsize=None)
def lr_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """s_lam * s_mu as ((nu, c^nu_{lam,mu}), ...)."""
    if (len(mu), mu.size) > (len(lam), lam.size):
        lam, mu = mu, lam
    return tuple(sorted(_lr(lam, mu).items()))


def _schur_multiply(f: dict, g: dict, cutoff) -> dict:
    acc: Counter = Counter()
    for a, ca in f.items():
        for b, cb in g.items():
            if a.size + b.size > cutoff:
                continue
            for nu, k in lr_product(a, b):
                acc[nu] += ca * cb * k
    return acc


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the Schur basis, exact in every degree <= min of the cutoffs."""
    cutoff = min(f.cutoff, g.cutoff)
    fs = convert(f, SCHUR).coeffs
    gs = convert(g, SCHUR).coeffs
    return SymFunc(SCHUR, cutoff, _schur_multiply(fs, gs, cutoff))


# -- Grothendieck expansions ------------------------------------------------------------

def monomial_to_schur(coeffs: Mapping[Partition, int]) -> dict[Partition, int]:
    rest = Counter(coeffs)
    out: Counter = Counter()
    while True:
        rest = Counter({k: v for k, v in rest.items() if v})
        if not rest:
            return dict(out)
        # dominance-maximal candidates come first in (size, lex) descending
        lam = max(rest, key=degree_lex_key)
        c = rest[lam]
        out[lam] += c
        for nu, k in schur_to_monomial(lam):
            rest[nu] -= c * k


def tableau_generating_function(family: TableauFamily) -> SymFunc:
    """Generating function of the family as a monomial-basis element.

    Exact for symmetric contents of length <= alphabet; faithful when the
    alphabet is at least the degree.  Set-valued tableaux carry the sign
    (-1)^(entries - |shape|) and the family's degree cap as cutoff.
    """
    counts = content_counts(family)
    cutoff = family.degree_cap if family.kind == SVT else INF
    return SymFunc(MONOMIAL, cutoff, counts)


@lru_cache(maxsize=None)
def dual_grothendieck_schur(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    """Schur expansion of g_lam via reverse plane partitions in |lam| letters."""
    fam = TableauFamily(RPP, lam, alphabet=max(lam.size, 1))
    return tuple(sorted(monomial_to_schur(content_counts(fam)).items()))


@lru_cache(maxsize=None)
def grothendieck_schur(lam: Partition, cutoff: int) -> tuple[tuple[Partition, int], ...]:
    """Schur expansion of G_lam in degrees <= cutoff via set-valued tableaux."""
    if cutoff < lam.size:
        raise CutoffError(f"cutoff {cutoff} below |{lam}|")
    fam = TableauFamily(SVT, lam, alphabet=cutoff, degree_cap=cutoff)
    return tuple(sorted(monomial_to_schur(content_counts(fam)).items()))


def schur_polynomial_content(lam: Partition, alphabet: int) -> dict[Partition, int]:
    return content_counts(TableauFamily(SSYT, lam, alphabet))


# -- basis conversion -------------------------------------------------------------------

def _to_schur(f: SymFunc) -> dict:
    b, D = f.basis, f.cutoff
    if b == SCHUR:
        return dict(f.coeffs)
    if b == MONOMIAL:
        return monomial_to_schur(f.coeffs)
    acc: Counter = Counter()
    for mu, c in f.coeffs.items():
        if b == HOMOGENEOUS:
            expansion = homogeneous_to_schur(mu)
        elif b == ELEMENTARY:
            expansion = elementary_to_schur(mu)
        elif b == G_LOWER:
            expansion = dual_grothendieck_schur(mu)
        else:
            expansion = grothendieck_schur(mu, D)
        for nu, k in expansion:
            if nu.size <= D:
                acc[nu] += c * k
    return acc


def _eliminate(coeffs: Mapping, pick, expand) -> dict:
    """Generic triangular solve: repeatedly take the leading term ``pick``,
    record it, and subtract its basis element's Schur expansion."""
    rest = Counter({k: v for k, v in coeffs.items() if v})
    out: Counter = Counter()
    while rest:
        mu = pick(rest)
        c = rest[mu]
        out[mu] += c
        for nu, k in expand(mu):
            rest[nu] -= c * k
        rest = Counter({k: v for k, v in rest.items() if v})
    return out


def _from_schur(coeffs: dict, target: str, cutoff) -> dict:
    def keep(expansion):
        return [(nu, k) for nu, k in expansion if nu.size <= cutoff]

    if target == SCHUR:
        return coeffs
    if target == MONOMIAL:
        acc: Counter = Counter()
        for lam, c in coeffs.items():
            for nu, k in schur_to_monomial(lam):
                acc[nu] += c * k
        return acc
    if target == HOMOGENEOUS:
        # h_mu = s_mu + dominance-larger terms: clear the lex-smallest first
        return _eliminate(coeffs, lambda r: min(r, key=degree_lex_key), homogeneous_to_schur)
    if target == ELEMENTARY:
        # e_{lam'} = s_lam + dominance-smaller terms
        return {
            lam.conjugate(): c
            for lam, c in _eliminate(
                coeffs,
                lambda r: max(r, key=degree_lex_key),
                lambda lam: elementary_to_schur(lam.conjugate()),
            ).items()
        }
    if target == G_LOWER:
        if cutoff != INF:
            raise CutoffError("g-basis expansion needs an untruncated element")
        return _eliminate(coeffs, lambda r: max(r, key=degree_lex_key), dual_grothendieck_schur)
    return _eliminate(
        coeffs,
        lambda r: min(r, key=degree_lex_key),
        lambda lam: keep(grothendieck_schur(lam, cutoff)),
    )


def convert(f: SymFunc, target: str, cutoff=None) -> SymFunc:
    """Re-express ``f`` in ``target``; ``cutoff`` optionally truncates first."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if cutoff is not None:
        f = f.truncate(cutoff)
    if target == f.basis:
        return f
    D = f.cutoff
    if target == G_UPPER and D == INF:
        raise CutoffError("converting to the G basis needs a finite cutoff")
    schur = {k: v for k, v in _to_schur(f).items() if v}
    return SymFunc(target, D, _from_schur(schur, target, D))


# -- pairing and specialization -------------------------------------------------------------

def hall_pairing(F: SymFunc, f: SymFunc) -> int:
    """Hall inner product; F may be truncated, f must fit under F's cutoff."""
    deg = convert(f, SCHUR).degree() if f.cutoff == INF else f.cutoff
    if F.cutoff < deg:
        raise CutoffError(f"cutoff {F.cutoff} of F is below deg f = {deg}")
    a = convert(F, SCHUR).coeffs
    b = convert(f, SCHUR).coeffs
    return sum(c * b.get(lam, 0) for lam, c in a.items())


def specialize_one(f: SymFunc, n: int) -> SymFunc:
    """f(1, x_1, ..., x_{n-1}) re-expanded in f's own basis.

    The monomial expansion of f is read in n variables and the first is set
    to 1.  Exact when n >= deg f + 1.
    """
    if f.basis == G_UPPER:
        raise CutoffError("specialization needs an element of finite degree")
    m = convert(f, MONOMIAL)
    deg = m.degree()
    if n < deg + 1:
        raise ValueError(f"need at least {deg + 1} variables, got {n}")
    acc: Counter = Counter()
    for nu, c in m.coeffs.items():
        if len(nu) > n:
            continue
        if len(nu) <= n - 1:
            acc[nu] += c
        for v in set(nu):
            parts = list(nu)
            parts.remove(v)
            acc[Partition(parts)] += c
    return convert(SymFunc(MONOMIAL, f.cutoff, acc), f.basis)


def H1(D: int) -> SymFunc:
    """sum_{i<=D} h_i, truncated at degree D."""
    return SymFunc(HOMOGENEOUS, D, {Partition([i] if i else []): 1 for i in range(D + 1)})


def one_minus_G1(D: int) -> SymFunc:
    """sum_{i<=D} (-1)^i e_i, truncated at degree D."""
    return SymFunc(ELEMENTARY, D, {Partition([i] if i else []): (-1) ** i for i in range(D + 1)})
