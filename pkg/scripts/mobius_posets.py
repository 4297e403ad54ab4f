"""Dump the horizontal-strip posets for one (lambda, a) with their Möbius values
next to the Pieri coefficients they encode.

    python3 scripts/mobius_posets.py --lambda 2,1 --a 2
"""

import argparse

from kgroth import grothendieck as gr
from kgroth.partitions import parse_partition
from kgroth.poset import ONE_HAT, ZERO_HAT


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--lambda", dest="lam", type=parse_partition, default=parse_partition("2,1"))
    ap.add_argument("--a", type=int, default=2)
    args = ap.parse_args()
    lam, a = args.lam, args.a

    le, d = gr.hs_poset(lam, a, gr.LE), gr.pieri_g(lam, a)
    print(f"strips of size <= {a} over {lam!r}, with a top adjoined")
    for mu in le.elements:
        if mu is not ONE_HAT:
            print(f"  {mu!r:<14} -mu(mu, 1^) = {-le.mobius(mu, ONE_HAT):>3}   g coeff = {d.get(mu, 0):>3}")

    ge, c = gr.hs_poset(lam, a, gr.GE), gr.pieri_G(lam, a)
    print(f"strips of size >= {a} over {lam!r} (capped), with a bottom adjoined")
    for mu in ge.elements:
        if mu is not ZERO_HAT:
            print(f"  {mu!r:<14} -mu(0^, mu) = {-ge.mobius(ZERO_HAT, mu):>3}   G coeff = {c.get(mu, 0):>3}")


if __name__ == "__main__":
    main()
