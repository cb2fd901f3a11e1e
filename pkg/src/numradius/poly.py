"""Companion matrices and upper bounds for the moduli of polynomial zeros.

Polynomials are monic, ``z^n + a_{n-1} z^{n-1} + ... + a_0``, stored by the
low-order coefficients ``a_0 .. a_{n-1}``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from .bounds import BlockPair, offdiag_upper
from .linalg import ConvergenceError, as_matrix
from .numrange import DEFAULT_SCAN, ScanConfig, numerical_radius

CLASSICAL_METHODS = (
    "cauchy", "carmichael_mason", "montel", "fujii_kubo",
    "alpin", "paul_bag", "abu_omar_kittaneh", "al_dolat",
)
NEW_METHODS = ("new_closed", "new_sharp")
METHODS = CLASSICAL_METHODS + NEW_METHODS

NOT_APPLICABLE = "not applicable (degree too small)"
DOMINANCE_TOL = 1e-6


class DegreeError(ValueError):
    pass


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple  # a_0 .. a_{n-1}

    def __post_init__(self):
        c = tuple(complex(a) for a in self.coeffs)
        if len(c) < 1:
            raise DegreeError("degree must be at least 1")
        if not all(math.isfinite(a.real) and math.isfinite(a.imag) for a in c):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_leading_first(cls, coeffs: Sequence[complex]) -> "Polynomial":
        """Build from ``[c_n, ..., c_0]``, dividing through by ``c_n``."""
        c = [complex(x) for x in coeffs]
        if len(c) < 2:
            raise DegreeError("need at least two coefficients (degree >= 1)")
        if c[0] == 0:
            raise ValueError("leading coefficient must be nonzero")
        lead = c[0]
        return cls(tuple(x / lead for x in reversed(c[1:])))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def a(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.complex128)

    def full(self) -> np.ndarray:
        """a_0 .. a_n with a_n = 1."""
        return np.append(self.a, 1.0)

    def __call__(self, z):
        # Horner, leading-first
        z = np.asarray(z, dtype=np.complex128)
        acc = np.ones_like(z)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc


@dataclass(frozen=True)
class DepressedForm:
    shift: complex  # s = a_{n-1} / n; p(z) = q(z + s)
    q: Polynomial
    alpha_top: complex  # binomial-sum value of alpha_{n-1}, zero up to rounding


def companion(p: Polynomial) -> np.ndarray:
    """Frobenius companion matrix: first row -a_{n-1} .. -a_0, ones on the subdiagonal."""
    n = p.degree
    if n < 2:
        raise DegreeError("companion matrix needs degree >= 2")
    c = np.eye(n, k=-1, dtype=np.complex128)
    c[0, :] = -p.a[::-1]
    return as_matrix(c)


def depress(p: Polynomial) -> DepressedForm:
    """Substitute z = eta - a_{n-1}/n.

    alpha_r = sum_{k=r}^{n} C(k, r) (-a_{n-1}/n)^{k-r} a_k with a_n = 1.
    """
    n = p.degree
    if n < 2:
        raise DegreeError("depression needs degree >= 2")
    full = p.full()
    s = full[n - 1] / n
    alpha = [sum(comb(k, r) * (-s) ** (k - r) * full[k] for k in range(r, n + 1)) for r in range(n)]
    top = complex(alpha[n - 1])
    return DepressedForm(shift=complex(s), q=Polynomial(tuple(alpha[: n - 1]) + (0j,)), alpha_top=top)


def taylor_shift(p: Polynomial, h: complex) -> Polynomial:
    """Coefficients of p(eta + h) by repeated synthetic division (Horner)."""
    c = list(p.full()[::-1])  # leading-first
    n = len(c) - 1
    for i in range(n):
        for j in range(1, n + 1 - i):
            c[j] += h * c[j - 1]
    return Polynomial(tuple(c[::-1][:n]))


# --- root oracle -----------------------------------------------------------

@dataclass(frozen=True)
class RootResult:
    roots: np.ndarray
    residual: float
    iterations: int
    converged: bool = field(default=True)


def durand_kerner(p: Polynomial, max_iter: int = 500) -> RootResult:
    """Simultaneous Weierstrass iteration for all n roots.

    Starts on the Cauchy circle r = 1 + max|a_j| at angles 2 pi k / n + 0.4
    and stops when the largest update drops below 1e-13 (1 + r).
    """
    n = p.degree
    a = p.a
    r = 1.0 + float(np.max(np.abs(a)))
    z = r * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    tol = 1e-13 * (1.0 + r)
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        denom = np.prod(diff, axis=1)
        denom = np.where(denom == 0, 1e-300, denom)
        step = p(z) / denom
        z = z - step
        if np.max(np.abs(step)) < tol:
            converged = True
            break
    residual = float(np.max(np.abs(p(z))))
    return RootResult(z, residual, it, converged)


def roots_oracle(p: Polynomial, residual_tol: float = 1e-8) -> np.ndarray:
    """All roots via Durand-Kerner, independent of the matrix kernel.

    Multiple roots converge slowly; if the iteration cap is hit the result
    is still accepted when the residual ``max |p(root)|`` is within
    ``residual_tol`` (scaled by the coefficient size).
    """
    res = durand_kerner(p)
    scale = 1.0 + float(np.max(np.abs(p.a)))
    if not res.converged and res.residual > residual_tol * scale:
        raise ConvergenceError("Durand-Kerner iteration did not converge", res.residual)
    return res.roots


def max_root_modulus(p: Polynomial) -> float:
    return float(np.max(np.abs(roots_oracle(p))))


# --- bounds ----------------------------------------------------------------

def _corner(p: Polynomial) -> np.ndarray:
    a = p.a
    n = p.degree
    return np.array([[-a[n - 1], -a[n - 2]], [1, 0]], dtype=np.complex128)


def classical_zero_bound(p: Polynomial, method: str, cfg: ScanConfig = DEFAULT_SCAN):
    """One of the eight classical bounds on max |zero|.

    Returns a float, or ``NOT_APPLICABLE`` for paul_bag / al_dolat at n = 2.
    """
    val = _classical(p, method, cfg)
    return val if isinstance(val, str) else float(val)


def _classical(p: Polynomial, method: str, cfg: ScanConfig):
    n = p.degree
    if n < 2:
        raise DegreeError("zero bounds need degree >= 2")
    mod = np.abs(p.a)  # |a_0| .. |a_{n-1}|
    if method == "cauchy":
        return 1.0 + float(mod.max())
    if method == "carmichael_mason":
        return math.sqrt(1.0 + float(np.sum(mod**2)))
    if method == "montel":
        return max(1.0, float(mod.sum()))
    if method == "fujii_kubo":
        return math.cos(math.pi / (n + 1)) + 0.5 * (math.sqrt(float(np.sum(mod**2))) + mod[n - 1])
    if method == "alpin":
        best, prod = 0.0, 1.0
        for k in range(1, n + 1):
            prod *= 1.0 + mod[n - k]
            best = max(best, prod ** (1.0 / k))
        return best
    if method == "abu_omar_kittaneh":
        alpha = math.sqrt(float(np.sum(mod**2)))
        alpha_p = math.sqrt(float(np.sum(mod[: n - 1] ** 2)))
        half = 0.5 * (mod[n - 1] + alpha)
        c = math.cos(math.pi / (n + 1))
        return 0.5 * (half + c + math.sqrt((half - c) ** 2 + 4 * alpha_p))
    if method in ("paul_bag", "al_dolat"):
        if n < 3:
            return NOT_APPLICABLE
        wa = numerical_radius(_corner(p), cfg)
        tail = math.sqrt(float(np.sum(mod[: n - 2] ** 2)))  # |a_0|^2 .. |a_{n-3}|^2
        if method == "paul_bag":
            c = math.cos(math.pi / (n - 1))
            return 0.5 * (wa + c + math.sqrt((wa - c) ** 2 + (1.0 + tail) ** 2))
        return max(wa, math.cos(math.pi / (n + 1))) + 0.5 * (1.0 + tail)
    raise ValueError(f"unknown method {method!r}")


def depressed_blocks(p: Polynomial):
    """Blocks of C(q) = [[A, B], [C, D]] for the depressed q: A = (0), B the
    1 x (n-1) row -alpha_{n-2} .. -alpha_0, C = e_1, D the (n-1) shift."""
    d = depress(p)
    n = p.degree
    alpha = d.q.a
    b = -alpha[n - 2::-1].reshape(1, n - 1)
    c = np.zeros((n - 1, 1), dtype=np.complex128)
    c[0, 0] = 1.0
    return d, as_matrix(b), as_matrix(c)


def new_zero_bound(p: Polynomial, variant: str = "closed", cfg: ScanConfig = DEFAULT_SCAN) -> float:
    """|a_{n-1}/n| + cos(pi/n) + a bound on w([[0, B], [C, 0]]) for the depressed polynomial.

    ``sharp`` evaluates the off-diagonal bound with S = B*B + CC* and the
    product CB directly; ``closed`` uses the scalar relaxation
    1/2 [(1+a)^2 + 4a + 4 sqrt(a) (1+a)]^{1/4} with a = sum |alpha_i|^2.
    """
    n = p.degree
    if n < 2:
        raise DegreeError("zero bounds need degree >= 2")
    d, b, c = depressed_blocks(p)
    head = abs(d.shift) + math.cos(math.pi / n)
    if variant == "closed":
        a = float(np.sum(np.abs(d.q.a[: n - 1]) ** 2))
        return head + 0.5 * ((1 + a) ** 2 + 4 * a + 4 * math.sqrt(a) * (1 + a)) ** 0.25
    if variant == "sharp":
        return head + offdiag_upper(BlockPair(b, c), "S_form", cfg)
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class ZeroBoundReport:
    bounds: dict  # method -> float | NOT_APPLICABLE, in METHODS order
    oracle_max_root: float
    oracle_residual: float

    def applicable(self) -> dict:
        return {k: v for k, v in self.bounds.items() if not isinstance(v, str)}

    def violations(self) -> list[str]:
        return [k for k, v in self.applicable().items() if v < self.oracle_max_root - DOMINANCE_TOL]


def zero_bound_report(p: Polynomial, cfg: ScanConfig = DEFAULT_SCAN) -> ZeroBoundReport:
    if p.degree < 2:
        raise DegreeError("zero bounds need degree >= 2")
    bounds = {m: classical_zero_bound(p, m, cfg) for m in CLASSICAL_METHODS}
    bounds["new_closed"] = new_zero_bound(p, "closed", cfg)
    bounds["new_sharp"] = new_zero_bound(p, "sharp", cfg)
    roots = roots_oracle(p)
    return ZeroBoundReport(bounds, float(np.max(np.abs(roots))), float(np.max(np.abs(p(roots)))))
