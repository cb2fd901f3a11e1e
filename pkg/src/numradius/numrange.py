"""Eigenvalue functionals of Re(e^{i theta} T) optimized over theta.

Every quantity here reduces to a 1-D scan: the extreme eigenvalues of the
Hermitian slice ``Re(e^{i theta} T)`` are the support values of the
numerical range W(T) in direction ``theta``.

* ``lambda_max`` maximized over the circle gives w(T), since
  ``lambda_min(theta) = -lambda_max(theta + pi)``.
* ``lambda_min`` maximized gives the signed distance from 0 to W(T); its
  positive part is the Crawford number m(T) because W(T) is convex and
  compact.
* ``min_abs_eig`` minimized gives c(A), the infimum over theta of the
  smallest singular value of the slice.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import as_matrix, hermitian_part, jacobi_eigh, operator_norm

TWO_PI = 2.0 * math.pi
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
ZERO_SNAP = 1e-9

FUNCTIONALS = ("lambda_max", "lambda_min", "min_abs_eig")


@dataclass(frozen=True)
class ScanConfig:
    grid_points: int = 1024
    refine_tol: float = 1e-12
    max_refine_iters: int = 200
    # "lapack" (numpy eigvalsh) or "jacobi" (the in-house cyclic Jacobi)
    solver: str = "lapack"

    def __post_init__(self):
        if self.grid_points < 8:
            raise ValueError("grid_points must be >= 8")
        if not self.refine_tol > 0:
            raise ValueError("refine_tol must be positive")
        if self.max_refine_iters < 1:
            raise ValueError("max_refine_iters must be >= 1")
        if self.solver not in ("lapack", "jacobi"):
            raise ValueError(f"unknown solver {self.solver!r}")


DEFAULT_SCAN = ScanConfig()


@dataclass(frozen=True)
class ScanResult:
    value: float
    theta_star: float
    samples: np.ndarray = field(repr=False)  # (grid_points, 2): theta, functional value


def _eigvals(h: np.ndarray, solver: str) -> np.ndarray:
    if solver == "jacobi":
        return jacobi_eigh(h, vectors=False)[0]
    return np.linalg.eigvalsh(h)


def _functional(t: np.ndarray, thetas: np.ndarray, functional: str, solver: str) -> np.ndarray:
    ev = _eigvals(hermitian_part(t, thetas), solver)
    if functional == "lambda_max":
        return ev[..., -1]
    if functional == "lambda_min":
        return ev[..., 0]
    return np.min(np.abs(ev), axis=-1)


def theta_scan(t, functional: str = "lambda_max", direction: str = "maximize",
               cfg: ScanConfig = DEFAULT_SCAN) -> ScanResult:
    """Global extremum over theta of an eigen-functional of Re(e^{i theta} T).

    Uniform grid on [0, 2 pi), then golden-section refinement on the bracket
    around each grid-local extremum that could still beat the best grid
    value (the functionals are ||T||-Lipschitz in theta).
    """
    if functional not in FUNCTIONALS:
        raise ValueError(f"unknown functional {functional!r}")
    if direction not in ("maximize", "minimize"):
        raise ValueError(f"unknown direction {direction!r}")
    t = as_matrix(t)
    if t.shape[0] != t.shape[1]:
        raise ValueError(f"theta_scan needs a square matrix, got {t.shape[0]}x{t.shape[1]}")
    sign = 1.0 if direction == "maximize" else -1.0

    n = cfg.grid_points
    h = TWO_PI / n
    grid = np.arange(n) * h
    vals = _functional(t, grid, functional, cfg.solver)
    g = sign * vals  # maximize g throughout

    left, right = np.roll(g, 1), np.roll(g, -1)
    best = g.max()
    lip = operator_norm(t)
    cand = np.flatnonzero((g >= left) & (g >= right) & (g >= best - lip * h * (1 + 1e-12)))

    thetas = np.concatenate([grid[cand], [grid[np.argmax(g)]]])
    scores = np.concatenate([g[cand], [best]])
    if cand.size:
        th, sc = _golden_max(t, grid[cand] - h, grid[cand] + h, functional, sign, cfg)
        thetas = np.concatenate([thetas, th])
        scores = np.concatenate([scores, sc])

    thetas = np.mod(thetas, TWO_PI)
    top = scores.max()
    # ties resolved by smallest canonical theta
    tied = np.flatnonzero(scores >= top - 1e-15 * abs(top))
    k = tied[np.argmin(thetas[tied])]
    return ScanResult(value=float(sign * scores[k]), theta_star=float(thetas[k]),
                      samples=np.column_stack([grid, vals]))


def _golden_max(t, a, b, functional, sign, cfg):
    """Vectorized golden-section maximization on brackets [a_i, b_i]."""
    a = a.astype(float).copy()
    b = b.astype(float).copy()
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    f = lambda th: sign * _functional(t, th, functional, cfg.solver)
    fc, fd = f(c), f(d)
    for _ in range(cfg.max_refine_iters):
        if np.max(b - a) <= cfg.refine_tol:
            break
        go_left = fc >= fd
        # left: keep [a, d]; right: keep [c, b]
        b = np.where(go_left, d, b)
        a = np.where(go_left, a, c)
        new_c = b - INV_PHI * (b - a)
        new_d = a + INV_PHI * (b - a)
        probe = np.where(go_left, new_c, new_d)
        fp = f(probe)
        c, d, fc, fd = (
            np.where(go_left, new_c, d),
            np.where(go_left, c, new_d),
            np.where(go_left, fp, fd),
            np.where(go_left, fc, fp),
        )
    pick_c = fc >= fd
    return np.where(pick_c, c, d), np.where(pick_c, fc, fd)


def numerical_radius(t, cfg: ScanConfig = DEFAULT_SCAN) -> float:
    """w(T) = sup over theta of lambda_max(Re(e^{i theta} T))."""
    return max(theta_scan(t, "lambda_max", "maximize", cfg).value, 0.0)


def crawford_number(t, cfg: ScanConfig = DEFAULT_SCAN) -> float:
    """m(T): distance from the origin to W(T), zero when 0 is in W(T)."""
    return max(0.0, theta_scan(t, "lambda_min", "maximize", cfg).value)


def c_lower_value(a, cfg: ScanConfig = DEFAULT_SCAN) -> float:
    """c(A) = inf over theta and unit x of ||Re(e^{i theta} A) x||.

    Values below ``1e-9 * ||A||`` are reported as exactly zero.
    """
    val = theta_scan(a, "min_abs_eig", "minimize", cfg).value
    if val < ZERO_SNAP * operator_norm(a):
        return 0.0
    return val


def boundary_points(t, k: int = 64, cfg: ScanConfig = DEFAULT_SCAN) -> np.ndarray:
    """<Tv, v> for a top eigenvector v of Re(e^{i theta} T), theta on k equispaced angles.

    Each returned point lies on the boundary of W(T). Returns a complex
    array of length ``k``.
    """
    if k < 4:
        raise ValueError("boundary_points needs k >= 4")
    t = as_matrix(t)
    thetas = np.arange(k) * (TWO_PI / k)
    _, vecs = jacobi_eigh(hermitian_part(t, thetas))
    v = vecs[:, :, -1]
    return np.einsum("ki,ij,kj->k", v.conj(), t, v)


def boundary_angles(k: int) -> np.ndarray:
    return np.arange(k) * (TWO_PI / k)
