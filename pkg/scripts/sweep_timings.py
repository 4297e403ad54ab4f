"""Run every verification suite over growing ranges and report cases and timings.

    python3 scripts/sweep_timings.py --sizes 3 4 5 6 --max-a 4
"""

import argparse
import json

from kgroth.verify import SweepConfig, run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--max-a", type=int, default=3)
    ap.add_argument("--headroom", type=int, default=4)
    ap.add_argument("--json", action="store_true", help="one JSON record per suite")
    args = ap.parse_args()

    for n in args.sizes:
        for r in run_all(SweepConfig(n, args.max_a, args.headroom)):
            if args.json:
                print(json.dumps({"max_size": n, **r.to_json(), "seconds": round(r.seconds, 3)}))
            else:
                print(f"n={n:<2} {r.name:<24} cases={r.cases:<6} failures={len(r.failures):<3} {r.seconds:8.3f}s")


if __name__ == "__main__":
    main()
