"""Run the seeded property suites and print per-suite timings.

    python scripts/run_verification.py --seed 42 --trials 200 --dim 5
"""
import argparse
import time

from numradius.numrange import ScanConfig
from numradius.verify import SUITES, format_violation, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--dim", type=int, default=5)
    ap.add_argument("--grid", type=int, default=1024)
    ap.add_argument("--suite", action="append", choices=sorted(SUITES))
    args = ap.parse_args()

    cfg = ScanConfig(grid_points=args.grid)
    total = 0
    for name in args.suite or sorted(SUITES):
        t0 = time.perf_counter()
        res = run_suite(name, args.seed, args.trials, args.dim, cfg)
        print(f"{name:<22} {res.passed:>4}/{res.trials}  {time.perf_counter() - t0:6.1f}s")
        for v in res.violations:
            print(format_violation(v, args.seed))
        total += len(res.violations)
    print(f"violations: {total}")


if __name__ == "__main__":
    main()
