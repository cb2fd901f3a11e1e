"""Zero bounds for z^5 + 2z^4 + z + 1 next to the reference table values.

    python scripts/reproduce_table.py [--grid N]
"""
import argparse

from numradius.numrange import ScanConfig
from numradius.poly import Polynomial, zero_bound_report

REFERENCE = {
    "cauchy": 3.000, "montel": 4.000, "carmichael_mason": 2.645, "fujii_kubo": 3.090,
    "alpin": 3.000, "paul_bag": 2.810, "abu_omar_kittaneh": 2.914, "al_dolat": 3.325,
    "new_sharp": 2.625,
}
ORDER = ("cauchy", "montel", "carmichael_mason", "fujii_kubo", "alpin", "paul_bag",
         "abu_omar_kittaneh", "al_dolat", "new_closed", "new_sharp")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", type=int, default=1024)
    args = ap.parse_args()

    p = Polynomial.from_leading_first([1, 2, 0, 0, 1, 1])
    rep = zero_bound_report(p, ScanConfig(grid_points=args.grid))
    print(f"{'method':<20} {'computed':>10} {'reference':>10} {'diff':>8}")
    for m in ORDER:
        v = rep.bounds[m]
        ref = REFERENCE.get(m)
        ref_s = f"{ref:10.3f}" if ref is not None else f"{'-':>10}"
        diff_s = f"{v - ref:+8.4f}" if ref is not None else f"{'':>8}"
        print(f"{m:<20} {v:10.5f} {ref_s} {diff_s}")
    print(f"{'max |root|':<20} {rep.oracle_max_root:10.5f}")
    best = min(v for k, v in rep.bounds.items() if k not in ("new_closed", "new_sharp"))
    print(f"\nbest classical bound {best:.5f}; new_sharp beats it: {rep.bounds['new_sharp'] < best}")


if __name__ == "__main__":
    main()
