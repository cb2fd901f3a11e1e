"""Exit criteria. Each test records one PASS/FAIL line, shown in the terminal summary."""
import math
import time

import numpy as np
import pytest

from numradius.bounds import BlockPair, offdiag_lower, offdiag_true_radius, offdiag_upper, scalar_bounds_report
from numradius.cli import main
from numradius.linalg import shift_matrix
from numradius.numrange import numerical_radius
from numradius.poly import Polynomial, new_zero_bound, roots_oracle
from numradius.verify import run_suite

from conftest import ACCEPTANCE, E12

EXAMPLE = Polynomial.from_leading_first([1, 2, 0, 0, 1, 1])
REFERENCE_TABLE = [("Cauchy", 3.000), ("Montel", 4.000), ("Carmichael-Mason", 2.645), ("Fujii-Kubo", 3.090),
               ("Alpin", 3.000), ("Paul-Bag", 2.810), ("Abu-Omar-Kittaneh", 2.914), ("Al-Dolat", 3.325)]
BEST_CLASSICAL = 2.645
CLAIMED_NEW_BOUND = 2.625


def record(label, ok, detail):
    ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
    return ok


def _suites(names, **kw):
    return {n: run_suite(n, seed=42, trials=kw.get("trials", 200), dim=5) for n in names}


def _violations(results):
    return sum(len(r.violations) for r in results.values())


def test_1_reference_table(capsys):
    t0 = time.perf_counter()
    code = main(["poly", "1", "2", "0", "0", "1", "1"])
    elapsed = time.perf_counter() - t0
    out = capsys.readouterr().out
    got = dict(line.rsplit(None, 1) for line in out.strip().splitlines())
    diffs = {name: abs(float(got[name]) - ref) for name, ref in REFERENCE_TABLE}
    ok = code == 0 and max(diffs.values()) <= 0.005 and elapsed < 5
    record("1 table reproduction", ok,
           f"max |diff| {max(diffs.values()):.4f} (tol 0.005), {elapsed:.2f}s (< 5s)")
    assert max(diffs.values()) <= 0.005, diffs
    assert elapsed < 5 and code == 0


def test_2a_new_bound_beats_best_classical():
    sharp = new_zero_bound(EXAMPLE, "sharp")
    ok = sharp < BEST_CLASSICAL
    record("2a new sharp bound < 2.645", ok,
           f"sharp = {sharp:.6f}, claimed {CLAIMED_NEW_BOUND}, best classical {BEST_CLASSICAL}")
    assert sharp < BEST_CLASSICAL


def test_2b_new_bound_ordering_and_validity():
    sharp = new_zero_bound(EXAMPLE, "sharp")
    closed = new_zero_bound(EXAMPLE, "closed")
    root = float(np.abs(roots_oracle(EXAMPLE)).max())
    ok = root <= sharp <= closed
    record("2b oracle <= sharp <= closed", ok, f"{root:.6f} <= {sharp:.6f} <= {closed:.6f}")
    assert ok
    assert root == pytest.approx(1.933, abs=5e-4)


def test_3_shift_matrix_fixture():
    t0 = time.perf_counter()
    errs = [abs(numerical_radius(shift_matrix(n)) - math.cos(math.pi / (n + 1))) for n in range(2, 13)]
    elapsed = time.perf_counter() - t0
    ok = max(errs) <= 1e-8 and elapsed < 10
    record("3 w(D_n) = cos(pi/(n+1)), n=2..12", ok, f"max err {max(errs):.2e} (tol 1e-8), {elapsed:.2f}s (< 10s)")
    assert max(errs) <= 1e-8
    assert elapsed < 10


SANDWICH_SUITES = ("offdiag_sandwich", "full_block", "scalar_bounds", "block_identities",
                   "contraction", "block_monotonicity")


@pytest.fixture(scope="module")
def sandwich_run():
    t0 = time.perf_counter()
    results = _suites(SANDWICH_SUITES)
    return results, time.perf_counter() - t0


def test_4_sandwich_suites(sandwich_run):
    results, elapsed = sandwich_run
    n = _violations(results)
    ok = n == 0 and elapsed < 120
    per = ", ".join(f"{k} {r.passed}/{r.trials}" for k, r in results.items())
    record("4 sandwich suites (seed 42, 200 trials, dims 1-5)", ok, f"{n} violations, {elapsed:.1f}s (< 120s); {per}")
    assert n == 0, [v.check for r in results.values() for v in r.violations]
    assert elapsed < 120


def test_5_improvement_claims(sandwich_run):
    results, _ = sandwich_run
    claims = ("offdiag_upper[S_form] <= af_baseline_upper", "aok_upper <= kittaneh_upper",
              "aok_upper <= kittaneh_norm_upper")
    bad = [v for r in results.values() for v in r.violations if v.check in claims]
    record("5 improvement claims", not bad, f"{len(bad)} violations over 200 trials each")
    assert not bad


def test_6_equality_cases():
    pair = BlockPair(E12, E12)
    vals = [offdiag_lower(pair), offdiag_true_radius(pair), offdiag_upper(pair)]
    sb = scalar_bounds_report(E12)
    vals2 = [sb.aok_lower, sb.aok_upper, sb.true_w]
    err = max(abs(v - 0.5) for v in vals + vals2)
    ok = err <= 1e-8
    record("6 equality cases (E12)", ok, f"max |value - 0.5| = {err:.2e} (tol 1e-8)")
    assert ok


def test_7_depression_correctness():
    res = run_suite("depression", seed=42, trials=100, dim=5)
    ok = not res.violations
    record("7 binomial-sum depression vs Horner shift", ok, f"{res.passed}/{res.trials} polynomials within 1e-10")
    assert ok


def test_8_zero_bound_dominance():
    res = run_suite("zero_bounds", seed=42, trials=200, dim=5)
    ok = not res.violations
    record("8 zero-bound dominance + oracle residual", ok, f"{res.passed}/{res.trials} polynomials clean")
    assert ok, [(v.trial, v.check, v.detail) for v in res.violations]
