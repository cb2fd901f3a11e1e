"""Seeded randomized verification of the inequalities and identities.

Every trial draws from its own PCG64 stream keyed by (seed, suite index,
trial index), so results do not depend on execution order. Matrix entries
have real and imaginary parts uniform on [-1, 1]; polynomial coefficients
are drawn the same way and multiplied by 3.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import bounds as B
from .linalg import block_2x2, matrix_to_json, operator_norm, random_matrix
from .numrange import DEFAULT_SCAN, ScanConfig, crawford_number, numerical_radius
from .poly import (
    Polynomial, depress, taylor_shift, zero_bound_report,
)

IDENTITY_TOL = 1e-8


@dataclass
class Violation:
    suite: str
    trial: int
    check: str
    detail: str
    operands: dict


@dataclass
class SuiteResult:
    name: str
    trials: int
    passed: int
    violations: list = field(default_factory=list)


class _Checker:
    def __init__(self, suite, trial, operands, slack):
        self.suite, self.trial, self.operands, self.slack = suite, trial, operands, slack
        self.violations = []

    def tol(self, scale):
        return self.slack * (1.0 + abs(scale))

    def le(self, name, lhs, rhs, scale=None, abs_tol=None):
        scale = max(abs(lhs), abs(rhs)) if scale is None else scale
        tol = self.tol(scale) if abs_tol is None else abs_tol
        if not lhs <= rhs + tol:
            self._fail(name, f"{lhs!r} > {rhs!r}")

    def close(self, name, lhs, rhs, tol=IDENTITY_TOL):
        if not abs(lhs - rhs) <= tol * (1.0 + max(abs(lhs), abs(rhs))):
            self._fail(name, f"|{lhs!r} - {rhs!r}| exceeds {tol:g}")

    def true(self, name, ok, detail=""):
        if not ok:
            self._fail(name, detail)

    def _fail(self, name, detail):
        dump = {k: matrix_to_json(v) if isinstance(v, np.ndarray) else v for k, v in self.operands.items()}
        self.violations.append(Violation(self.suite, self.trial, name, detail, dump))


def _rng(seed: int, suite_idx: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, suite_idx, trial])))


def _dims(rng, dim):
    return int(rng.integers(1, dim + 1)), int(rng.integers(1, dim + 1))


def _random_poly(rng, lo=2, hi=8, scale=3.0) -> Polynomial:
    n = int(rng.integers(lo, hi + 1))
    return Polynomial(tuple(scale * (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n))))


# --- suites ----------------------------------------------------------------

def suite_offdiag_sandwich(rng, dim, cfg, ck):
    p, q = _dims(rng, dim)
    x, y = random_matrix(rng, p, q), random_matrix(rng, q, p)
    ck.operands.update(X=x, Y=y)
    pair = B.BlockPair(x, y)
    true_w = B.offdiag_true_radius(pair, cfg)
    for form in ("S_form", "P_form"):
        ck.le(f"offdiag_lower[{form}] <= w", B.offdiag_lower(pair, form, cfg), true_w)
        ck.le(f"w <= offdiag_upper[{form}]", true_w, B.offdiag_upper(pair, form, cfg))
    ck.le("offdiag_upper[S_form] <= af_baseline_upper",
          B.offdiag_upper(pair, "S_form", cfg), B.af_baseline_upper(pair, cfg))
    ck.le("w(XY) <= product_bound", numerical_radius(x @ y, cfg), B.product_bound(pair, cfg))


def suite_full_block(rng, dim, cfg, ck):
    p, q = _dims(rng, dim)
    x, y = random_matrix(rng, p, p), random_matrix(rng, p, q)
    z, w = random_matrix(rng, q, p), random_matrix(rng, q, q)
    ck.operands.update(X=x, Y=y, Z=z, W=w)
    upper, lower = B.full_block_bounds(x, y, z, w, cfg)
    true_w = numerical_radius(block_2x2(x, y, z, w), cfg)
    ck.le("full_block lower <= w", lower, true_w)
    ck.le("w <= full_block upper", true_w, upper)


def suite_block_monotonicity(rng, dim, cfg, ck):
    p, q = _dims(rng, dim)
    x, y = random_matrix(rng, p, p), random_matrix(rng, p, q)
    z, w = random_matrix(rng, q, p), random_matrix(rng, q, q)
    ck.operands.update(X=x, Y=y, Z=z, W=w)
    full = numerical_radius(block_2x2(x, y, z, w), cfg)
    ck.le("w(offdiag part) <= w(block)", numerical_radius(block_2x2(None, y, z, None), cfg), full)
    ck.le("w(diag part) <= w(block)", numerical_radius(block_2x2(x, None, None, w), cfg), full)


def suite_scalar_bounds(rng, dim, cfg, ck):
    n = int(rng.integers(1, dim + 1))
    t = random_matrix(rng, n, n)
    ck.operands.update(T=t)
    sb = B.scalar_bounds_report(t, cfg)
    for f in sb.LOWER:
        ck.le(f"{f} <= w", getattr(sb, f), sb.true_w)
    for f in sb.UPPER:
        ck.le(f"w <= {f}", sb.true_w, getattr(sb, f))
    ck.le("aok_upper <= kittaneh_upper", sb.aok_upper, sb.kittaneh_upper)
    ck.le("aok_upper <= kittaneh_norm_upper", sb.aok_upper, sb.kittaneh_norm_upper)


def suite_block_identities(rng, dim, cfg, ck):
    p, q = _dims(rng, dim)
    x, w = random_matrix(rng, p, p), random_matrix(rng, q, q)
    y, z = random_matrix(rng, p, q), random_matrix(rng, q, p)
    ck.operands.update(X=x, W=w, Y=y, Z=z)
    ck.close("(i) w(diag(X, W)) = max(w(X), w(W))",
             numerical_radius(block_2x2(x, None, None, w), cfg),
             max(numerical_radius(x, cfg), numerical_radius(w, cfg)))
    ck.close("(ii) w([[0, Y], [Z, 0]]) = w([[0, Z], [Y, 0]])",
             numerical_radius(block_2x2(None, y, z, None), cfg),
             numerical_radius(block_2x2(None, z, y, None), cfg))
    ck.close("(iv) w([[0, X], [X, 0]]) = w(X)",
             numerical_radius(block_2x2(None, x, x, None), cfg), numerical_radius(x, cfg))


def suite_bbp_special(rng, dim, cfg, ck):
    n = int(rng.integers(1, dim + 1))
    x = random_matrix(rng, n, n)
    ck.operands.update(X=x)
    pair = B.BlockPair(x, x)
    wx = numerical_radius(x, cfg)
    ck.le("offdiag_lower(X, X) <= w(X)", B.offdiag_lower(pair, "S_form", cfg), wx)
    ck.le("w(X) <= offdiag_upper(X, X)", wx, B.offdiag_upper(pair, "S_form", cfg))


def suite_contraction(rng, dim, cfg, ck):
    n = int(rng.integers(1, dim + 1))
    t, c = random_matrix(rng, n, n), random_matrix(rng, n, n)
    c = c / max(1.0, operator_norm(c))
    ck.operands.update(T=t, C=c)
    ck.le("w(TC + C*T) <= 2 w(T)", numerical_radius(t @ c + c.conj().T @ t, cfg), 2 * numerical_radius(t, cfg))


def suite_crawford(rng, dim, cfg, ck):
    n = int(rng.integers(1, dim + 1))
    t = random_matrix(rng, n, n)
    ck.operands.update(T=t)
    m = crawford_number(t, cfg)
    xs = rng.normal(size=(256, n)) + 1j * rng.normal(size=(256, n))
    xs /= np.linalg.norm(xs, axis=1, keepdims=True)
    vals = np.abs(np.einsum("ki,ij,kj->k", xs.conj(), t, xs))
    ck.le("m(T) <= min |<Tx, x>|", m, float(vals.min()))


def suite_depression(rng, dim, cfg, ck):
    p = _random_poly(rng)
    ck.operands.update(coeffs=[[z.real, z.imag] for z in p.coeffs])
    d = depress(p)
    horner = taylor_shift(p, -d.shift)
    scale = 1.0 + float(np.max(np.abs(p.a)))
    ck.true("alpha_{n-1} vanishes", abs(d.alpha_top) <= 1e-10 * scale, f"|alpha_top| = {abs(d.alpha_top):.3e}")
    ref = np.abs(horner.a).max()
    err = float(np.max(np.abs(d.q.a - horner.a)))
    ck.true("binomial sum matches Horner shift", err <= 1e-10 * max(1.0, ref), f"max diff {err:.3e}")


def suite_zero_bounds(rng, dim, cfg, ck):
    p = _random_poly(rng)
    ck.operands.update(coeffs=[[z.real, z.imag] for z in p.coeffs])
    rep = zero_bound_report(p, cfg)
    ck.true("oracle residual <= 1e-8", rep.oracle_residual <= 1e-8, f"residual {rep.oracle_residual:.3e}")
    # dominance tolerance is 1e-6 absolute at the default slack
    for m, v in rep.applicable().items():
        ck.le(f"max |root| <= {m}", rep.oracle_max_root, v, abs_tol=10 * ck.slack)
    ck.le("new_sharp <= new_closed", rep.bounds["new_sharp"], rep.bounds["new_closed"])


SUITES: dict[str, Callable] = {
    "block_monotonicity": suite_block_monotonicity,
    "bbp_special": suite_bbp_special,
    "contraction": suite_contraction,
    "crawford": suite_crawford,
    "depression": suite_depression,
    "full_block": suite_full_block,
    "block_identities": suite_block_identities,
    "offdiag_sandwich": suite_offdiag_sandwich,
    "scalar_bounds": suite_scalar_bounds,
    "zero_bounds": suite_zero_bounds,
}


def run_suite(name: str, seed: int = 42, trials: int = 200, dim: int = 5,
              cfg: ScanConfig = DEFAULT_SCAN, slack: float = B.SLACK) -> SuiteResult:
    names = sorted(SUITES)
    idx = names.index(name)
    fn = SUITES[name]
    res = SuiteResult(name, trials, 0)
    for trial in range(trials):
        ck = _Checker(name, trial, {}, slack)
        fn(_rng(seed, idx, trial), dim, cfg, ck)
        if ck.violations:
            res.violations.extend(ck.violations)
        else:
            res.passed += 1
    return res


def run_all(seed: int = 42, trials: int = 200, dim: int = 5, cfg: ScanConfig = DEFAULT_SCAN,
            slack: float = B.SLACK, suites=None) -> list[SuiteResult]:
    return [run_suite(n, seed, trials, dim, cfg, slack) for n in sorted(suites or SUITES)]


def format_violation(v: Violation, seed: int) -> str:
    return (f"VIOLATION suite={v.suite} seed={seed} trial={v.trial} check={v.check!r}: {v.detail}\n"
            f"  operands: {json.dumps(v.operands, sort_keys=True)}")
