"""Command-line front end.

    kgroth expand --what G --lambda 1 --degree 3 --basis schur
    kgroth pieri --family g --lambda 2,1 --a 2
    kgroth mobius --lambda 1 --a 1 --side ge
    kgroth product --family G --lambda 1 --a 1 --degree 4
    kgroth verify --max-size 4 --max-a 3

Output is JSON (default) or TSV and is byte-identical across runs.  Exit
status: 0 success, 1 a verified identity failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import grothendieck as gr
from .partitions import Partition, parse_partition
from .poset import ONE_HAT, ZERO_HAT
from .symfunc import BASES, INF, SCHUR, SymFunc, basis_element, convert
from .verify import SweepConfig, run_all

EXPANDABLE = ("g", "G", "gsum", "Gsum", "schur", "monomial", "homogeneous", "elementary")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class CommandConfig:
    command: str
    lam: Partition = Partition()
    a: int = 1
    what: str = "g"
    family: str = "g"
    basis: str | None = None
    degree: int | None = None
    side: str = "le"
    form: str = "closed"
    fmt: str = "json"
    max_size: int = 4
    max_a: int = 3
    headroom: int = 4
    seed: int = 0

    def check(self):
        if self.a < 0:
            raise UsageError("--a must be nonnegative")
        if self.degree is not None and self.degree < 0:
            raise UsageError("--degree must be nonnegative")
        cap = os.environ.get("GROTH_MAX_DEGREE")
        if cap is not None:
            needed = self.implied_degree()
            if needed is not None and needed > int(cap):
                raise UsageError(f"degree {needed} exceeds GROTH_MAX_DEGREE={cap}")

    def implied_degree(self):
        if self.command == "verify":
            return max(self.max_size + self.max_a + self.headroom, self.max_size + self.headroom)
        if self.command == "product" and self.family == "G":
            return self.degree if self.degree is not None else self.lam.size + self.a + self.headroom
        return self.degree


def _parse_lambda(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kgroth", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_a=True):
        p.add_argument("--lambda", dest="lam", type=_parse_lambda, default=Partition(),
                       help='partition as "3,1"; "" or "0" for the empty partition')
        if needs_a:
            p.add_argument("--a", type=int, default=1)
        p.add_argument("--format", dest="fmt", choices=("json", "tsv"), default="json")

    p = sub.add_parser("expand", help="expand a basis element")
    common(p, needs_a=False)
    p.add_argument("--what", choices=EXPANDABLE, default="g")
    p.add_argument("--basis", choices=BASES, default=SCHUR, help="output basis")
    p.add_argument("--degree", type=int, help="truncation degree (required for G and Gsum)")

    p = sub.add_parser("pieri", help="Pieri coefficients of the (a) row")
    common(p)
    p.add_argument("--family", choices=("g", "G"), default="g")
    p.add_argument("--form", choices=("closed", "altsum", "mobius"), default="closed")

    p = sub.add_parser("mobius", help="Möbius values on a horizontal-strip poset")
    common(p)
    p.add_argument("--side", choices=(gr.LE, gr.GE), default=gr.LE)

    p = sub.add_parser("product", help="multiplicity-free sum-basis products")
    common(p)
    p.add_argument("--family", choices=("g", "G"), default="g")
    p.add_argument("--degree", type=int, help="truncation degree for the G family")

    p = sub.add_parser("verify", help="run every identity sweep")
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--max-a", type=int, default=3)
    p.add_argument("--headroom", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", dest="fmt", choices=("json", "tsv"), default="json")
    return parser


def config_from_args(args) -> CommandConfig:
    fields = {k: v for k, v in vars(args).items() if v is not None and k in CommandConfig.__dataclass_fields__}
    return CommandConfig(**fields)


# -- rendering -------------------------------------------------------------------------

def _bracket(mu) -> str:
    if isinstance(mu, Partition):
        return "[" + ",".join(map(str, mu)) + "]"
    return str(mu)


def _render_terms(terms, header: dict, fmt: str) -> str:
    if fmt == "tsv":
        return "".join(f"{_bracket(mu)}\t{c}\n" for mu, c in terms)
    body = dict(header)
    body["terms"] = [{"part": list(mu), "coeff": c} for mu, c in terms]
    return json.dumps(body) + "\n"


def _expand(cfg: CommandConfig) -> str:
    lam, D = cfg.lam, cfg.degree
    if cfg.what in ("G", "Gsum") and D is None:
        raise UsageError(f"--degree is required for {cfg.what}")
    if cfg.what == "g":
        f = gr.g_expand(lam)
    elif cfg.what == "G":
        f = gr.G_expand(lam, D)
    elif cfg.what == "gsum":
        f = gr.g_sum(lam)
    elif cfg.what == "Gsum":
        f = gr.G_sum(lam, D)
    else:
        f = basis_element(cfg.what, lam)
    out = convert(f, cfg.basis, cutoff=D)
    header = {"basis": out.basis, "cutoff": None if out.cutoff == INF else out.cutoff}
    return _render_terms(out.terms(), header, cfg.fmt)


def _pieri(cfg: CommandConfig) -> str:
    lam, a = cfg.lam, cfg.a
    if cfg.form == "closed":
        cmap = gr.pieri_g(lam, a) if cfg.family == "g" else gr.pieri_G(lam, a)
    elif cfg.form == "altsum":
        cmap = gr.pieri_g_altsum(lam, a) if cfg.family == "g" else gr.pieri_G_altsum(lam, a)
    else:
        if a < 1:
            raise UsageError("--form mobius needs a >= 1")
        side = gr.LE if cfg.family == "g" else gr.GE
        poset = gr.hs_poset(lam, a, side)
        cmap = gr.CoefficientMap({
            mu: gr.mobius_coefficient(lam, a, mu, side)
            for mu in poset.elements if mu is not ONE_HAT and mu is not ZERO_HAT
        })
    header = {"family": cfg.family, "lambda": list(lam), "a": a, "form": cfg.form}
    return _render_terms(cmap.terms(), header, cfg.fmt)


def _mobius(cfg: CommandConfig) -> str:
    if cfg.a < 1:
        raise UsageError("--a must be at least 1 for strip posets")
    p = gr.hs_poset(cfg.lam, cfg.a, cfg.side)
    if cfg.side == gr.LE:
        pairs = [(x, p.mobius(x, ONE_HAT)) for x in p.elements]
    else:
        pairs = [(x, p.mobius(ZERO_HAT, x)) for x in p.elements]
    if cfg.fmt == "tsv":
        return "".join(f"{_bracket(x)}\t{v}\n" for x, v in pairs)
    body = {
        "lambda": list(cfg.lam),
        "a": cfg.a,
        "side": cfg.side,
        "values": [{"element": list(x) if isinstance(x, Partition) else repr(x), "mobius": v} for x, v in pairs],
    }
    return json.dumps(body) + "\n"


def _product(cfg: CommandConfig) -> str:
    if cfg.a < 1:
        raise UsageError("--a must be at least 1")
    if cfg.family == "g":
        f = gr.gsum_product(cfg.lam, cfg.a)
    else:
        D = cfg.degree if cfg.degree is not None else cfg.lam.size + cfg.a + cfg.headroom
        if D < cfg.lam.size + cfg.a:
            raise UsageError("--degree must be at least |lambda| + a")
        f = gr.G_times_Gsum(cfg.lam, cfg.a, D)
    header = {"basis": f.basis, "cutoff": None if f.cutoff == INF else f.cutoff}
    return _render_terms(f.terms(), header, cfg.fmt)


def _verify(cfg: CommandConfig) -> tuple[str, int]:
    results = run_all(SweepConfig(cfg.max_size, cfg.max_a, cfg.headroom, cfg.seed))
    failures = sum(len(r.failures) for r in results)
    if cfg.fmt == "tsv":
        text = "".join(f"{r.name}\t{r.cases}\t{len(r.failures)}\n" for r in results)
    else:
        text = json.dumps({
            "max_size": cfg.max_size,
            "max_a": cfg.max_a,
            "suites": [r.to_json() for r in results],
            "failures": failures,
            "ok": failures == 0,
        }) + "\n"
    return text, 1 if failures else 0


def run(cfg: CommandConfig, out=None) -> int:
    out = out or sys.stdout
    cfg.check()
    status = 0
    if cfg.command == "expand":
        text = _expand(cfg)
    elif cfg.command == "pieri":
        text = _pieri(cfg)
    elif cfg.command == "mobius":
        text = _mobius(cfg)
    elif cfg.command == "product":
        text = _product(cfg)
    elif cfg.command == "verify":
        text, status = _verify(cfg)
    else:
        raise UsageError(f"unknown command {cfg.command!r}")
    out.write(text)
    return status


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(config_from_args(args))
    except ValueError as exc:
        print(f"kgroth: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
