"""Upper and lower numerical-radius bounds for matrices and 2x2 operator matrices.

All bounds are returned on the w-scale (roots already taken) so they
compare directly with ``numerical_radius``.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .linalg import ShapeError, adjoint, as_matrix, block_2x2, operator_norm
from .numrange import DEFAULT_SCAN, ScanConfig, c_lower_value, crawford_number, numerical_radius

# Additive slack for every inequality check; scaled by (1 + magnitude).
SLACK = 1e-7


def slack(scale: float) -> float:
    return SLACK * (1.0 + abs(scale))


@dataclass(frozen=True)
class BlockPair:
    """Off-diagonal blocks of [[0, X], [Y, 0]] with X p x q and Y q x p."""

    X: np.ndarray
    Y: np.ndarray

    def __post_init__(self):
        x, y = as_matrix(self.X), as_matrix(self.Y)
        if x.shape[0] != y.shape[1] or x.shape[1] != y.shape[0]:
            raise ShapeError(
                f"X is {x.shape[0]}x{x.shape[1]} and Y is {y.shape[0]}x{y.shape[1]}; "
                "need X p x q and Y q x p"
            )
        object.__setattr__(self, "X", x)
        object.__setattr__(self, "Y", y)

    def swapped(self) -> "BlockPair":
        return BlockPair(self.Y, self.X)

    def block(self) -> np.ndarray:
        return block_2x2(None, self.X, self.Y, None)

    def s_matrix(self) -> np.ndarray:
        """S = X*X + YY* (acts on the Y-domain)."""
        return _herm(self.X.conj().T @ self.X + self.Y @ self.Y.conj().T)

    def p_matrix(self) -> np.ndarray:
        """P = XX* + Y*Y (acts on the X-domain)."""
        return _herm(self.X @ self.X.conj().T + self.Y.conj().T @ self.Y)


def _herm(a: np.ndarray) -> np.ndarray:
    return as_matrix(0.5 * (a + a.conj().T))


def _form(pair: BlockPair, variant: str):
    """(S-like matrix, product) for the chosen variant."""
    if variant == "S_form":
        return pair.s_matrix(), pair.Y @ pair.X
    if variant == "P_form":
        return pair.p_matrix(), pair.X @ pair.Y
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class ScalarBounds:
    norm_lower: float
    norm_upper: float
    kittaneh_lower: float
    kittaneh_upper: float
    kittaneh_norm_upper: float
    aok_lower: float
    aok_upper: float
    true_w: float

    LOWER = ("norm_lower", "kittaneh_lower", "aok_lower")
    UPPER = ("norm_upper", "kittaneh_upper", "kittaneh_norm_upper", "aok_upper")

    def as_dict(self) -> dict:
        return asdict(self)

    def violations(self) -> list[str]:
        tol = slack(self.true_w)
        bad = [f for f in self.LOWER if getattr(self, f) > self.true_w + tol]
        bad += [f for f in self.UPPER if getattr(self, f) < self.true_w - tol]
        return bad


def scalar_bounds_report(t, cfg: ScanConfig = DEFAULT_SCAN) -> ScalarBounds:
    t = as_matrix(t)
    if t.shape[0] != t.shape[1]:
        raise ShapeError(f"matrix must be square, got {t.shape[0]}x{t.shape[1]}")
    norm = operator_norm(t)
    t2 = t @ t
    k = operator_norm(_herm(t.conj().T @ t + t @ t.conj().T))
    return ScalarBounds(
        norm_lower=norm / 2,
        norm_upper=norm,
        kittaneh_lower=math.sqrt(k / 4),
        kittaneh_upper=math.sqrt(k / 2),
        kittaneh_norm_upper=0.5 * (norm + math.sqrt(operator_norm(t2))),
        aok_lower=0.5 * math.sqrt(k + 2 * crawford_number(t2, cfg)),
        aok_upper=0.5 * math.sqrt(k + 2 * numerical_radius(t2, cfg)),
        true_w=numerical_radius(t, cfg),
    )


def offdiag_upper(pair: BlockPair, variant: str = "S_form", cfg: ScanConfig = DEFAULT_SCAN) -> float:
    """Fourth root of ||S||^2/16 + w^2(YX)/4 + w(YX S + S YX)/8 (or the P, XY analogue)."""
    s, prod = _form(pair, variant)
    val = (operator_norm(s) ** 2 / 16
           + numerical_radius(prod, cfg) ** 2 / 4
           + numerical_radius(prod @ s + s @ prod, cfg) / 8)
    return val ** 0.25


def offdiag_lower(pair: BlockPair, variant: str = "S_form", cfg: ScanConfig = DEFAULT_SCAN) -> float:
    """Fourth root of ||S||^2/16 + c^2(YX)/4 + m(YX S + S YX)/8 (or the P, XY analogue)."""
    s, prod = _form(pair, variant)
    val = (operator_norm(s) ** 2 / 16
           + c_lower_value(prod, cfg) ** 2 / 4
           + crawford_number(prod @ s + s @ prod, cfg) / 8)
    return val ** 0.25


def af_baseline_upper(pair: BlockPair, cfg: ScanConfig = DEFAULT_SCAN) -> float:
    """1/2 sqrt(||S|| + 2 w(YX)): the S-form bound with w(YXS+SYX) relaxed to 2||S||w(YX)."""
    s = pair.s_matrix()
    return 0.5 * math.sqrt(operator_norm(s) + 2 * numerical_radius(pair.Y @ pair.X, cfg))


def product_bound(pair: BlockPair, cfg: ScanConfig = DEFAULT_SCAN) -> float:
    """Upper bound on w(XY); equals offdiag_upper(S_form) squared."""
    s = pair.s_matrix()
    yx = pair.Y @ pair.X
    val = (operator_norm(s) ** 2
           + 4 * numerical_radius(yx, cfg) ** 2
           + 2 * numerical_radius(yx @ s + s @ yx, cfg))
    return 0.25 * math.sqrt(val)


def offdiag_true_radius(pair: BlockPair, cfg: ScanConfig = DEFAULT_SCAN) -> float:
    return numerical_radius(pair.block(), cfg)


def offdiag_radius_by_norm_scan(pair: BlockPair, cfg: ScanConfig = DEFAULT_SCAN) -> float:
    """sup over theta of 1/2 ||e^{i theta} X + e^{-i theta} Y*||, evaluated on the scan grid
    with golden refinement; an independent route to ``offdiag_true_radius``."""
    x, ystar = pair.X, adjoint(pair.Y)

    def f(theta):
        return 0.5 * operator_norm(np.exp(1j * theta) * x + np.exp(-1j * theta) * ystar)

    grid = np.arange(cfg.grid_points) * (2 * math.pi / cfg.grid_points)
    vals = np.array([f(th) for th in grid])
    best = vals.max()
    h = grid[1]
    for i in np.flatnonzero(vals >= best - operator_norm(pair.block()) * h):
        a, b = grid[i] - h, grid[i] + h
        for _ in range(cfg.max_refine_iters):
            if b - a <= max(cfg.refine_tol, 1e-10):
                break
            c = b - 0.6180339887498949 * (b - a)
            d = a + 0.6180339887498949 * (b - a)
            if f(c) >= f(d):
                b = d
            else:
                a = c
        best = max(best, f(0.5 * (a + b)))
    return float(best)


def full_block_bounds(x, y, z, w, cfg: ScanConfig = DEFAULT_SCAN) -> tuple[float, float]:
    """(upper, lower) for w([[X, Y], [Z, W]]) using S = Y*Y + ZZ* and the product ZY.

    Mixed block sizes are accepted whenever the block matrix is square.
    """
    x, w = as_matrix(x), as_matrix(w)
    pair = BlockPair(y, z)
    diag = max(numerical_radius(x, cfg), numerical_radius(w, cfg))
    upper = diag + offdiag_upper(pair, "S_form", cfg)
    lower = max(diag, offdiag_lower(pair, "S_form", cfg))
    return upper, lower
