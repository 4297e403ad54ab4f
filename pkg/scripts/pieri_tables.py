"""Print Pieri tables for g and G over small shapes, with the strip statistics.

    python3 scripts/pieri_tables.py --max-size 3 --max-a 2
"""

import argparse

from kgroth import grothendieck as gr
from kgroth.partitions import partitions_up_to, skew_stats


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--max-size", type=int, default=3)
    ap.add_argument("--max-a", type=int, default=2)
    args = ap.parse_args()

    print("family\tlambda\ta\tmu\t|mu/lam|\trows\tco_rows\tcoeff")
    for lam in partitions_up_to(args.max_size):
        for a in range(1, args.max_a + 1):
            for family, table in (("g", gr.pieri_g(lam, a)), ("G", gr.pieri_G(lam, a))):
                for mu, c in table.terms():
                    s = skew_stats(lam, mu)
                    print(f"{family}\t{lam!r}\t{a}\t{mu!r}\t{s.size}\t{s.rows}\t{s.co_rows}\t{c}")


if __name__ == "__main__":
    main()
