"""Command-line interface.

Exit codes: 0 success, 1 a mathematical check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal

from . import bounds as B
from .linalg import block_2x2, matrix_from_json, operator_norm
from .numrange import ScanConfig, boundary_angles, boundary_points, crawford_number, numerical_radius
from .poly import METHODS, DegreeError, Polynomial, zero_bound_report
from .verify import format_violation, run_all

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2

POLY_LABELS = {
    "cauchy": "Cauchy",
    "montel": "Montel",
    "carmichael_mason": "Carmichael-Mason",
    "fujii_kubo": "Fujii-Kubo",
    "alpin": "Alpin",
    "paul_bag": "Paul-Bag",
    "abu_omar_kittaneh": "Abu-Omar-Kittaneh",
    "al_dolat": "Al-Dolat",
    "new_closed": "New (closed)",
    "new_sharp": "New (sharp)",
}
TABLE_ORDER = ("cauchy", "montel", "carmichael_mason", "fujii_kubo", "alpin",
               "paul_bag", "abu_omar_kittaneh", "al_dolat", "new_closed", "new_sharp")


class InputError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    seed: int = 42
    trials: int = 200
    dim: int = 5
    json: bool = False
    grid_points: int = 1024
    refine_tol: float = 1e-12

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise InputError("--seed must be a 64-bit unsigned integer")
        if self.trials < 1:
            raise InputError("--trials must be >= 1")
        if self.dim < 1:
            raise InputError("--dim must be >= 1")

    def scan(self) -> ScanConfig:
        try:
            return ScanConfig(grid_points=self.grid_points, refine_tol=self.refine_tol)
        except ValueError as exc:
            raise InputError(str(exc)) from None


def round3(x: float) -> str:
    return str(Decimal(repr(float(x))).quantize(Decimal("0.001"), rounding=ROUND_HALF_EVEN))


def _load_matrix(path):
    try:
        with open(path) as fh:
            return matrix_from_json(json.load(fh))
    except (OSError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(cfg: CliConfig, obj: dict, lines: list[str]) -> None:
    if cfg.json:
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print("\n".join(lines))


def write_boundary_csv(t, k: int, out_path, scan: ScanConfig) -> None:
    pts = boundary_points(t, k, scan)
    with open(out_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["theta", "re", "im"])
        for theta, z in zip(boundary_angles(k), pts):
            writer.writerow([repr(float(theta)), repr(float(z.real)), repr(float(z.imag))])


def cmd_radius(path, cfg: CliConfig, boundary_csv=None, boundary_k: int = 64) -> int:
    t = _load_matrix(path)
    if t.shape[0] != t.shape[1]:
        raise InputError(f"{path}: matrix must be square, got {t.shape[0]}x{t.shape[1]}")
    scan = cfg.scan()
    sb = B.scalar_bounds_report(t, scan)
    ok = not sb.violations()
    obj = {
        "w": sb.true_w,
        "norm": operator_norm(t),
        "crawford": crawford_number(t, scan),
        "bounds": sb.as_dict(),
        "sandwich_ok": ok,
    }
    lines = [
        f"w(T)        = {obj['w']:.10f}",
        f"||T||       = {obj['norm']:.10f}",
        f"m(T)        = {obj['crawford']:.10f}",
        "bounds:",
    ]
    lines += [f"  {k:<20} {v:.10f}" for k, v in sb.as_dict().items()]
    lines.append("sandwich: " + ("PASS" if ok else "FAIL " + ", ".join(sb.violations())))
    if boundary_csv is not None:
        if boundary_k < 4:
            raise InputError("--boundary-points must be >= 4")
        try:
            write_boundary_csv(t, boundary_k, boundary_csv, scan)
        except OSError as exc:
            raise InputError(f"{boundary_csv}: {exc}") from None
    _emit(cfg, obj, lines)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_block(x_path, y_path, z_path, w_path, cfg: CliConfig) -> int:
    """Two files: the pair (X, Y) of [[0, X], [Y, 0]]. Four files: the blocks
    of [[X, Y], [Z, W]], whose off-diagonal pair is (Y, Z)."""
    scan = cfg.scan()
    if (z_path is None) != (w_path is None):
        raise InputError("--z and --w must be given together")
    x, y = _load_matrix(x_path), _load_matrix(y_path)
    four = z_path is not None
    if four:
        z, w = _load_matrix(z_path), _load_matrix(w_path)
        try:
            full = block_2x2(x, y, z, w)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        first, second = y, z
    else:
        first, second = x, y
    try:
        pair = B.BlockPair(first, second)
    except ValueError as exc:
        raise InputError(str(exc)) from None

    true_w = B.offdiag_true_radius(pair, scan)
    vals = {
        "offdiag_lower_S": B.offdiag_lower(pair, "S_form", scan),
        "offdiag_lower_P": B.offdiag_lower(pair, "P_form", scan),
        "true_w": true_w,
        "offdiag_upper_S": B.offdiag_upper(pair, "S_form", scan),
        "offdiag_upper_P": B.offdiag_upper(pair, "P_form", scan),
        "af_baseline_upper": B.af_baseline_upper(pair, scan),
        "product_bound": B.product_bound(pair, scan),
        "w_product": numerical_radius(pair.X @ pair.Y, scan),
    }
    checks = [
        (vals["offdiag_lower_S"], true_w),
        (vals["offdiag_lower_P"], true_w),
        (true_w, vals["offdiag_upper_S"]),
        (true_w, vals["offdiag_upper_P"]),
        (vals["offdiag_upper_S"], vals["af_baseline_upper"]),
        (vals["w_product"], vals["product_bound"]),
    ]
    if four:
        upper, lower = B.full_block_bounds(x, y, z, w, scan)
        full_w = numerical_radius(full, scan)
        vals.update(full_lower=lower, full_true_w=full_w, full_upper=upper)
        checks += [(lower, full_w), (full_w, upper)]
    ok = all(lo <= hi + B.slack(max(abs(lo), abs(hi))) for lo, hi in checks)
    obj = dict(vals, ordering_ok=ok)
    lines = [f"{k:<20} {v:.10f}" for k, v in vals.items()]
    lines.append("ordering: " + ("PASS" if ok else "FAIL"))
    _emit(cfg, obj, lines)
    return EXIT_OK if ok else EXIT_VIOLATION


def _parse_poly(coeffs, path) -> Polynomial:
    if path is not None:
        try:
            with open(path) as fh:
                raw = json.load(fh)["coeffs"]
            c = [complex(float(re), float(im)) for re, im in raw]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{path}: {exc}") from None
    else:
        try:
            c = [complex(s.replace("i", "j")) for s in coeffs]
        except ValueError as exc:
            raise InputError(f"bad coefficient: {exc}") from None
    if len(c) < 3:
        raise InputError("polynomial degree must be at least 2")
    try:
        return Polynomial.from_leading_first(c)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_poly(coeffs, path, cfg: CliConfig) -> int:
    p = _parse_poly(coeffs, path)
    rep = zero_bound_report(p, cfg.scan())
    ok = not rep.violations()
    obj = {
        "degree": p.degree,
        "bounds": {m: rep.bounds[m] for m in METHODS},
        "oracle_max_root": rep.oracle_max_root,
        "oracle_residual": rep.oracle_residual,
        "dominance_ok": ok,
    }
    lines = []
    for m in TABLE_ORDER:
        v = rep.bounds[m]
        lines.append(f"{POLY_LABELS[m]:<22} {v if isinstance(v, str) else round3(v)}")
    lines.append(f"{'Oracle max |root|':<22} {round3(rep.oracle_max_root)}")
    if not ok:
        lines.append("VIOLATION: " + ", ".join(rep.violations()))
    _emit(cfg, obj, lines)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_verify(cfg: CliConfig, slack: float = B.SLACK) -> int:
    results = run_all(cfg.seed, cfg.trials, cfg.dim, cfg.scan(), slack)
    total = sum(len(r.violations) for r in results)
    if cfg.json:
        print(json.dumps({
            "seed": cfg.seed, "trials": cfg.trials, "dim": cfg.dim,
            "suites": {r.name: {"passed": r.passed, "trials": r.trials,
                                "violations": [v.__dict__ for v in r.violations]} for r in results},
            "violations": total,
        }, indent=2))
    else:
        print(f"verify seed={cfg.seed} trials={cfg.trials} dim={cfg.dim}")
        for r in results:
            print(f"  {r.name:<22} {r.passed}/{r.trials} trials passed")
        for r in results:
            for v in r.violations:
                print(format_violation(v, cfg.seed))
        print(f"violations: {total}")
    return EXIT_OK if total == 0 else EXIT_VIOLATION


def _global_flags(parser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False), help="emit JSON")
    parser.add_argument("--seed", type=int, default=d(42))
    parser.add_argument("--trials", type=int, default=d(200))
    parser.add_argument("--dim", type=int, default=d(5), help="max block dimension for verify")
    parser.add_argument("--grid", type=int, default=d(1024), help="theta grid points")
    parser.add_argument("--tol", type=float, default=d(1e-12), help="theta refinement tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="numradius", description=__doc__)
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", parents=[common], help="w, norm, Crawford number and scalar bounds")
    p.add_argument("file")
    p.add_argument("--boundary-csv", metavar="PATH", help="write sampled boundary points of W(T) as theta,re,im")
    p.add_argument("--boundary-points", type=int, default=64, metavar="K")

    p = sub.add_parser("block", parents=[common], help="bounds for [[0, X], [Y, 0]] or [[X, Y], [Z, W]]")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z")
    p.add_argument("--w")

    p = sub.add_parser("poly", parents=[common], help="zero bounds; coefficients leading-first")
    p.add_argument("coeffs", nargs="*")
    p.add_argument("--file")

    p = sub.add_parser("verify", parents=[common], help="seeded randomized property suites")
    p.add_argument("--slack", type=float, default=B.SLACK, help=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = CliConfig(seed=args.seed, trials=args.trials, dim=args.dim, json=args.json,
                        grid_points=args.grid, refine_tol=args.tol)
        if args.command == "radius":
            return cmd_radius(args.file, cfg, args.boundary_csv, args.boundary_points)
        if args.command == "block":
            return cmd_block(args.x, args.y, args.z, args.w, cfg)
        if args.command == "poly":
            if bool(args.coeffs) == bool(args.file):
                raise InputError("give coefficients or --file, not both or neither")
            return cmd_poly(args.coeffs, args.file, cfg)
        return cmd_verify(cfg, args.slack)
    except (InputError, DegreeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
