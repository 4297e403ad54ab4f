"""Verification sweeps: every identity checked case by case against its oracle.

Each suite returns a ``SuiteResult`` listing the failing cases in canonical
(|lam|, lam, a) order, so the first failure is a minimal counterexample.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field

from . import grothendieck as gr
from . import poset as po
from .partitions import AT_LEAST, AT_MOST, Partition, partitions_up_to, strips
from .symfunc import (
    G_LOWER,
    SCHUR,
    H1,
    SymFunc,
    convert,
    hall_pairing,
    multiply,
    one,
    one_minus_G1,
    specialize_one,
)


@dataclass
class Failure:
    lam: object
    a: object
    mu: object
    expected: object
    got: object

    def to_json(self):
        def enc(x):
            if isinstance(x, Partition):
                return list(x)
            if isinstance(x, (int, str, type(None), bool)):
                return x
            return repr(x)

        return {k: enc(v) for k, v in vars(self).items()}


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self):
        return {
            "suite": self.name,
            "cases": self.cases,
            "failures": len(self.failures),
            "examples": [f.to_json() for f in self.failures[:5]],
        }


@dataclass(frozen=True)
class SweepConfig:
    max_size: int = 4
    max_a: int = 3
    headroom: int = 4
    seed: int = 0
    random_trials: int = 100


def _cases(max_size, max_a):
    for lam in partitions_up_to(max_size):
        for a in range(1, max_a + 1):
            yield lam, a


def _first_difference(left: dict, right: dict):
    for mu in sorted(set(left) | set(right), key=lambda p: (p.size, p)):
        if left.get(mu, 0) != right.get(mu, 0):
            return mu, left.get(mu, 0), right.get(mu, 0)
    return None


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# -- Pieri oracles ---------------------------------------------------------------------------

@_timed
def pieri_g_oracle(max_size: int, max_a: int) -> SuiteResult:
    """g_(a) g_lam computed from RPP expansions vs the closed formula."""
    res = SuiteResult("pieri_g_oracle")
    for lam, a in _cases(max_size, max_a):
        res.cases += 1
        product = multiply(gr.g_expand((a,)), gr.g_expand(lam))
        formula = SymFunc(SCHUR, product.cutoff, {})
        for mu, c in gr.pieri_g(lam, a).items():
            formula = formula + c * gr.g_expand(mu)
        diff = _first_difference(product.coeffs, formula.coeffs)
        if diff:
            res.failures.append(Failure(lam, a, diff[0], diff[1], diff[2]))
    return res


@_timed
def pieri_G_oracle(max_size: int, max_a: int, headroom: int = 4) -> SuiteResult:
    """Truncated G_(a) G_lam from set-valued tableaux vs the closed formula."""
    res = SuiteResult("pieri_G_oracle")
    for lam, a in _cases(max_size, max_a):
        res.cases += 1
        D = lam.size + a + headroom
        product = multiply(gr.G_expand((a,), D), gr.G_expand(lam, D))
        formula = SymFunc(SCHUR, D, {})
        for mu, c in gr.pieri_G(lam, a).items():
            if mu.size <= D:
                formula = formula + c * gr.G_expand(mu, D)
        diff = _first_difference(product.coeffs, formula.coeffs)
        if diff:
            res.failures.append(Failure(lam, a, diff[0], diff[1], diff[2]))
    return res


# -- Möbius description -----------------------------------------------------------------------

@_timed
def mobius_characterization(max_size: int, max_a: int) -> SuiteResult:
    """Pieri coefficients equal minus Möbius values of the strip posets."""
    res = SuiteResult("mobius_characterization")
    for lam, a in _cases(max_size, max_a):
        d = gr.pieri_g(lam, a)
        le = gr.hs_poset(lam, a, gr.LE)
        for mu in le.elements:
            if mu is po.ONE_HAT:
                continue
            res.cases += 1
            got = -le.mobius(mu, po.ONE_HAT)
            if got != d.get(mu, 0):
                res.failures.append(Failure(lam, a, mu, d.get(mu, 0), got))
        c = gr.pieri_G(lam, a)
        ge = gr.hs_poset(lam, a, gr.GE)
        for mu in ge.elements:
            if mu is po.ZERO_HAT:
                continue
            res.cases += 1
            got = -ge.mobius(po.ZERO_HAT, mu)
            if got != c.get(mu, 0):
                res.failures.append(Failure(lam, a, mu, c.get(mu, 0), got))
    return res


@_timed
def unit_sums(max_size: int, max_a: int) -> SuiteResult:
    """Sums of c over strips below mu, and of d over strips above mu, are 1."""
    res = SuiteResult("unit_sums")
    for lam, a in _cases(max_size, max_a):
        for side, family in ((gr.LE, strips(lam, AT_MOST, a)), (gr.GE, strips(lam, AT_LEAST, a))):
            for mu in sorted(family):
                res.cases += 1
                got = gr.check_unit_sums(lam, a, mu, side)
                if got != 1:
                    res.failures.append(Failure(lam, a, (side, mu), 1, got))
    return res


@_timed
def three_forms(max_size: int, max_a: int, headroom: int = 4) -> SuiteResult:
    """Closed form = alternating meet/join sum = multiplicity-free product."""
    res = SuiteResult("three_forms")
    for lam, a in _cases(max_size, max_a):
        res.cases += 1
        checks = [
            ("g altsum", gr.pieri_g(lam, a), gr.pieri_g_altsum(lam, a)),
            ("G altsum", gr.pieri_G(lam, a), gr.pieri_G_altsum(lam, a)),
        ]
        ideal = gr.ideal_product_g(lam, a)
        checks.append(("g~ product", {mu: 1 for mu in ideal}, gr.gsum_product(lam, a).coeffs))
        D = lam.size + a + headroom
        filt = gr.filter_product_G(lam, a, D)
        checks.append(("G~ product", {mu: 1 for mu in filt}, gr.G_times_Gsum(lam, a, D).coeffs))
        for label, expected, got in checks:
            diff = _first_difference(dict(expected), dict(got))
            if diff:
                res.failures.append(Failure(lam, a, (label, diff[0]), diff[1], diff[2]))
        bad = [c for c in gr.gsum_product(lam, a).coeffs.values() if c not in (0, 1)]
        if bad:
            res.failures.append(Failure(lam, a, "g~ product 0/1", "0 or 1", bad))
    return res


# -- sum-basis identities ------------------------------------------------------------------------

def _random_schur(rng: random.Random, max_degree: int) -> SymFunc:
    pool = partitions_up_to(max_degree)
    coeffs = Counter()
    for _ in range(rng.randint(1, 4)):
        coeffs[rng.choice(pool)] += rng.randint(-3, 3)
    return SymFunc(SCHUR, float("inf"), coeffs)


@_timed
def specialization(max_size: int, n: int | None = None, pairs: int = 50, seed: int = 0) -> SuiteResult:
    """g~_lam(x) = g_lam(1, x), and x -> (1, x) is multiplicative."""
    res = SuiteResult("specialization")
    n = max_size + 1 if n is None else n
    for lam in partitions_up_to(max_size):
        res.cases += 1
        lhs = specialize_one(gr.g_expand(lam), n)
        rhs = convert(gr.g_sum(lam), SCHUR)
        if lhs != rhs:
            res.failures.append(Failure(lam, None, "g(1,x)", rhs, lhs))
    rng = random.Random(seed)
    for _ in range(pairs):
        res.cases += 1
        f, g = _random_schur(rng, 4), _random_schur(rng, 4)
        m = f.degree() + g.degree() + 1
        lhs = specialize_one(multiply(f, g), m)
        rhs = multiply(specialize_one(f, m), specialize_one(g, m))
        if lhs != rhs:
            res.failures.append(Failure(f, g, "ring morphism", rhs, lhs))
    return res


@_timed
def inverse_identities(D: int = 8, max_size: int = 5, headroom: int = 4) -> SuiteResult:
    """(sum h_i)(sum (-1)^i e_i) = 1 and (sum h_i) G_lam = G~_lam."""
    res = SuiteResult("inverse_identities")
    res.cases += 1
    prod = multiply(H1(D), one_minus_G1(D))
    if prod != one(D):
        res.failures.append(Failure(None, None, "H(1)(1-G1)", one(D), prod))
    res.cases += 1
    G1 = gr.G_expand((1,), D)
    lhs = convert(one_minus_G1(D), SCHUR) + G1
    if lhs != one(D):
        res.failures.append(Failure((1,), None, "1-G1 + G1", one(D), lhs))
    for lam in partitions_up_to(max_size):
        res.cases += 1
        Dl = lam.size + headroom
        got = gr.H1_action_on_G(lam, Dl)
        expected = gr.G_sum(lam, Dl)
        if got != expected:
            diff = _first_difference(expected.coeffs, got.coeffs)
            res.failures.append(Failure(lam, None, diff[0], diff[1], diff[2]))
    return res


@_timed
def duality(max_size: int = 6, D: int | None = None) -> SuiteResult:
    """Hall pairing of G_lam (truncated) with g_mu is the Kronecker delta."""
    res = SuiteResult("duality")
    D = max_size if D is None else D
    parts = partitions_up_to(max_size)
    Gs = {lam: gr.G_expand(lam, D) for lam in parts}
    gs = {mu: gr.g_expand(mu) for mu in parts}
    for lam in parts:
        for mu in parts:
            res.cases += 1
            got = hall_pairing(Gs[lam], gs[mu])
            if got != int(lam == mu):
                res.failures.append(Failure(lam, None, mu, int(lam == mu), got))
    return res


@_timed
def binom_grid() -> SuiteResult:
    res = SuiteResult("binom_identity")
    for R in range(-2, 6):
        for q in range(0, 7):
            for b_lo in range(-1, 7):
                for b_hi in range(b_lo, 7):
                    res.cases += 1
                    lhs, rhs = gr.binom_identity(R, q, b_lo, b_hi)
                    if lhs != rhs:
                        res.failures.append(Failure((R, q), None, (b_lo, b_hi), rhs, lhs))
    return res


# -- finite poset identities ------------------------------------------------------------------------

def _coatom_checks(name, phat: po.FinitePoset, sub=None) -> list[tuple[str, object, object]]:
    """Ideal sums, coatom inclusion-exclusion and restriction checks on a poset with a maximum."""
    bad = []
    top = phat.maximum()
    coeffs = po.ideal_sum_coeffs(phat)
    below = [s for s in phat.elements if s != top]
    # indicator functions: the sum over P of g is 1 for g = [u]
    for u in below:
        total = sum(c for s, c in coeffs.items() if phat.leq(u, s))
        if total != 1:
            bad.append((f"{name}: ideal sum at {u!r}", 1, total))
    # net coefficient of the coatom inclusion-exclusion is -mu(s, top)
    net = po.net_coefficients(po.coatom_inclusion_exclusion(phat))
    for s in below:
        if net.get(s, 0) != coeffs[s]:
            bad.append((f"{name}: coatom inclusion-exclusion at {s!r}", coeffs[s], net.get(s, 0)))
    # restriction to the coatom meets (and to ``sub`` when given)
    if not po.meet_closure_restriction_check(phat, po.coatom_meets(phat)):
        bad.append((f"{name}: restriction to coatom meets", True, False))
    if sub is not None and not po.meet_closure_restriction_check(phat, sub):
        bad.append((f"{name}: restriction to subposet", True, False))
    return bad


def _poset_checks(name, p: po.FinitePoset, rng: random.Random, trials: int):
    bad = []
    if not p.mobius.check():
        bad.append((f"{name}: mobius recurrences", True, False))
    for _ in range(trials):
        g = {x: rng.randint(-5, 5) for x in p.elements}
        if not po.mobius_inversion_check(p, g):
            bad.append((f"{name}: inversion", g, False))
            break
    return bad


@_timed
def appendix_posets(max_size: int = 5, max_a: int = 3, trials: int = 100, seed: int = 0) -> SuiteResult:
    """Möbius recurrences, inversion and the coatom identities on all test posets."""
    res = SuiteResult("appendix_posets")
    rng = random.Random(seed)
    named = [
        ("B2", po.boolean_lattice(2)),
        ("B3", po.boolean_lattice(3)),
        ("D12", po.divisor_lattice(12)),
        ("D30", po.divisor_lattice(30)),
        ("D60", po.divisor_lattice(60)),
    ]
    for name, p in named:
        res.cases += 1
        for label, exp, got in _poset_checks(name, p, rng, trials) + _coatom_checks(name, p):
            res.failures.append(Failure(name, None, label, exp, got))
    for lam, a in _cases(max_size, max_a):
        le = gr.hs_poset(lam, a, gr.LE)
        ge = gr.hs_poset(lam, a, gr.GE)
        ideal = gr.ideal_poset(lam, a)
        res.cases += 1
        bad = _poset_checks("H<=a", le, rng, trials) + _poset_checks("H>=a", ge, rng, trials)
        bad += _poset_checks("ideal", ideal, rng, trials)
        bad += _coatom_checks("H<=a", le)
        bad += _coatom_checks("ideal", ideal, sub=le.elements)
        bad += _coatom_checks("dual H>=a", po.dual(ge))
        for label, exp, got in bad:
            res.failures.append(Failure(lam, a, label, exp, got))
    return res


def run_all(config: SweepConfig) -> list[SuiteResult]:
    """Every suite at the configured ranges, in a fixed order."""
    n, A, h = config.max_size, config.max_a, config.headroom
    return [
        pieri_g_oracle(n, A),
        pieri_G_oracle(n, A, h),
        mobius_characterization(n, A),
        unit_sums(n, A),
        three_forms(n, A, h),
        specialization(n, seed=config.seed),
        inverse_identities(D=n + h, max_size=n, headroom=h),
        duality(n),
        binom_grid(),
        appendix_posets(n, A, config.random_trials, config.seed),
    ]
