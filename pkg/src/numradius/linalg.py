"""Dense complex matrix kernel.

Matrices are plain ``numpy`` complex128 arrays marked read-only; every
operation returns a fresh array. The Hermitian eigensolver is a cyclic
complex Jacobi iteration that works on a single matrix or on a stack of
matrices (leading batch axes).
"""
from __future__ import annotations

import json
from typing import Iterable, Sequence

import numpy as np

HERMITIAN_RTOL = 1e-10
JACOBI_OFF_RTOL = 1e-13
JACOBI_MAX_SWEEPS = 100


class ShapeError(ValueError):
    pass


class NotHermitianError(ValueError):
    pass


class ConvergenceError(ArithmeticError):
    def __init__(self, message, residual):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def as_matrix(data) -> np.ndarray:
    """Validate ``data`` as a finite 2-D complex matrix and return a frozen copy."""
    a = np.array(data, dtype=np.complex128)
    if a.ndim == 0:
        a = a.reshape(1, 1)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise ShapeError(f"expected a non-empty 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return _freeze(a)


def zeros(rows: int, cols: int) -> np.ndarray:
    return _freeze(np.zeros((rows, cols), dtype=np.complex128))


def identity(n: int) -> np.ndarray:
    return _freeze(np.eye(n, dtype=np.complex128))


def shift_matrix(n: int) -> np.ndarray:
    """n x n lower shift: ones on the first subdiagonal."""
    return _freeze(np.eye(n, k=-1, dtype=np.complex128))


def _square(a: np.ndarray, what: str = "matrix") -> None:
    if a.shape[-1] != a.shape[-2]:
        raise ShapeError(f"{what} must be square, got {a.shape[-2]}x{a.shape[-1]}")


def adjoint(a) -> np.ndarray:
    a = np.asarray(a)
    return _freeze(np.ascontiguousarray(np.swapaxes(a, -1, -2).conj()))


def compose(a, b, op: str = "multiply") -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if op == "multiply":
        if a.shape[1] != b.shape[0]:
            raise ShapeError(f"cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}")
        return _freeze(a @ b)
    if op in ("add", "subtract"):
        if a.shape != b.shape:
            raise ShapeError(f"cannot {op} {a.shape[0]}x{a.shape[1]} and {b.shape[0]}x{b.shape[1]}")
        return _freeze(a + b if op == "add" else a - b)
    raise ValueError(f"unknown op {op!r}")


def scale(a, lam: complex) -> np.ndarray:
    return _freeze(complex(lam) * np.asarray(a, dtype=np.complex128))


def hermitian_part(a, theta) -> np.ndarray:
    """Return Re(e^{i theta} A) = (e^{i theta} A + e^{-i theta} A*) / 2.

    ``theta`` may be a scalar or a 1-D array; an array gives a stack of
    shape ``(len(theta), n, n)``. The result is symmetrized so that it is
    Hermitian to the last bit.
    """
    a = np.asarray(a, dtype=np.complex128)
    _square(a)
    phase = np.exp(1j * np.asarray(theta, dtype=float))[..., None, None]
    h = 0.5 * (phase * a + phase.conj() * a.conj().T)
    h = 0.5 * (h + np.swapaxes(h, -1, -2).conj())
    return _freeze(h)


def _check_hermitian(h: np.ndarray) -> np.ndarray:
    _square(h)
    fro = np.linalg.norm(h, axis=(-2, -1))
    asym = np.max(np.abs(h - np.swapaxes(h, -1, -2).conj()), axis=(-2, -1))
    if np.any(asym > HERMITIAN_RTOL * fro):
        raise NotHermitianError(
            f"matrix is not Hermitian: asymmetry {np.max(asym):.3e} exceeds "
            f"{HERMITIAN_RTOL:g} x Frobenius norm"
        )
    return 0.5 * (h + np.swapaxes(h, -1, -2).conj())


def _offdiag_mass(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt(np.sum(np.abs(a[..., mask]) ** 2, axis=-1))


def jacobi_eigh(h, vectors: bool = True, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Cyclic complex Jacobi for Hermitian matrices (single or stacked).

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues ascending along
    the last axis and eigenvectors as columns (``None`` when ``vectors`` is
    false). Rotations sweep the upper triangle in row order; each one
    first removes the phase of the pivot and then applies the real
    symmetric Schur rotation.
    """
    a = _check_hermitian(np.array(h, dtype=np.complex128))
    single = a.ndim == 2
    if single:
        a = a[None]
    a = a.reshape(-1, *a.shape[-2:]).copy()
    batch, n, _ = a.shape
    v = np.broadcast_to(np.eye(n, dtype=np.complex128), a.shape).copy() if vectors else None

    fro = np.linalg.norm(a, axis=(-2, -1))
    target = JACOBI_OFF_RTOL * fro
    off = _offdiag_mass(a)
    sweeps = 0
    while np.any(off > target):
        if sweeps >= max_sweeps:
            raise ConvergenceError("Jacobi iteration did not converge", float(np.max(off - target)))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                g = np.abs(apq)
                live = g > 1e-300
                if not np.any(live):
                    continue
                gs = np.where(live, g, 1.0)
                ph = np.where(live, apq / gs, 1.0)  # e^{i phi}
                tau = (a[:, q, q].real - a[:, p, p].real) / (2.0 * gs)
                t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
                t = np.where(live, t, 0.0)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # U on coordinates (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                u_pp, u_pq = c, s
                u_qp, u_qq = -s * ph.conj(), c * ph.conj()
                colp = a[:, :, p].copy()
                colq = a[:, :, q]
                a[:, :, p] = colp * u_pp[:, None] + colq * u_qp[:, None]
                a[:, :, q] = colp * u_pq[:, None] + colq * u_qq[:, None]
                rowp = a[:, p, :].copy()
                rowq = a[:, q, :]
                a[:, p, :] = rowp * u_pp[:, None] + rowq * u_qp.conj()[:, None]
                a[:, q, :] = rowp * u_pq[:, None] + rowq * u_qq.conj()[:, None]
                a[:, p, q] = 0.0
                a[:, q, p] = 0.0
                if v is not None:
                    vp = v[:, :, p].copy()
                    vq = v[:, :, q]
                    v[:, :, p] = vp * u_pp[:, None] + vq * u_qp[:, None]
                    v[:, :, q] = vp * u_pq[:, None] + vq * u_qq[:, None]
        sweeps += 1
        off = _offdiag_mass(a)

    w = np.diagonal(a, axis1=-2, axis2=-1).real
    order = np.argsort(w, axis=-1, kind="stable")
    w = np.take_along_axis(w, order, axis=-1)
    if v is not None:
        v = np.take_along_axis(v, order[:, None, :], axis=-1)
    if single:
        w = w[0]
        v = v[0] if v is not None else None
    else:
        w = w.reshape(np.shape(h)[:-1])
        if v is not None:
            v = v.reshape(np.shape(h))
    return w, v


def hermitian_eigenvalues(h) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix (or stack) by cyclic Jacobi."""
    return jacobi_eigh(h, vectors=False)[0]


def operator_norm(a) -> float:
    """Largest singular value, as sqrt of the top eigenvalue of A*A."""
    a = np.asarray(a, dtype=np.complex128)
    size = float(np.max(np.abs(a)))
    if size == 0.0:
        return 0.0
    a = a / size  # keeps the Gram matrix clear of underflow/overflow
    gram = a.conj().T @ a
    # Gram matrix is built exactly Hermitian up to rounding.
    lam = np.linalg.eigvalsh(0.5 * (gram + gram.conj().T))[-1]
    return size * float(np.sqrt(max(lam, 0.0)))


def block_2x2(x, y, z, w) -> np.ndarray:
    """Assemble [[X, Y], [Z, W]].

    Any block may be ``None``, meaning a zero block whose shape is inferred
    from its neighbours.
    """
    blocks = [x, y, z, w]
    arr = [None if b is None else np.asarray(b, dtype=np.complex128) for b in blocks]
    x, y, z, w = arr

    def dim(*cands):
        for c in cands:
            if c is not None:
                return c
        raise ShapeError("cannot infer zero-block shape; supply at least one block per row and column")

    p = dim(x.shape[0] if x is not None else None, y.shape[0] if y is not None else None,
            x.shape[1] if x is not None else None, z.shape[1] if z is not None else None)
    q = dim(w.shape[0] if w is not None else None, z.shape[0] if z is not None else None,
            w.shape[1] if w is not None else None, y.shape[1] if y is not None else None)
    want = {"X": (p, p), "Y": (p, q), "Z": (q, p), "W": (q, q)}
    filled = []
    for name, b in zip("XYZW", arr):
        if b is None:
            b = np.zeros(want[name], dtype=np.complex128)
        if b.shape != want[name]:
            raise ShapeError(
                f"block {name} has shape {b.shape[0]}x{b.shape[1]}, expected {want[name][0]}x{want[name][1]}"
            )
        filled.append(b)
    return as_matrix(np.block([[filled[0], filled[1]], [filled[2], filled[3]]]))


def matrix_from_json(obj) -> np.ndarray:
    """Parse ``{"rows", "cols", "entries": [[[re, im], ...], ...]}``."""
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    try:
        rows, cols, entries = int(obj["rows"]), int(obj["cols"]), obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed matrix JSON: {exc}") from None
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ShapeError(f"entries do not match declared shape {rows}x{cols}")
    vals = []
    for r in entries:
        row = []
        for e in r:
            if not isinstance(e, Sequence) or len(e) != 2:
                raise ValueError(f"entry {e!r} is not a [re, im] pair")
            row.append(complex(float(e[0]), float(e[1])))
        vals.append(row)
    return as_matrix(vals)


def matrix_to_json(a) -> dict:
    a = np.asarray(a, dtype=np.complex128)
    return {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in a],
    }


def random_matrix(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    """Entries with real and imaginary parts uniform on [-1, 1]."""
    return as_matrix(rng.uniform(-1, 1, (rows, cols)) + 1j * rng.uniform(-1, 1, (rows, cols)))


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(random_matrix(rng, n, n))
    d = np.diagonal(r)
    return as_matrix(q * np.where(np.abs(d) > 0, d / np.abs(d), 1.0))


__all__: Iterable[str] = [
    "ShapeError", "NotHermitianError", "ConvergenceError", "as_matrix", "zeros", "identity",
    "shift_matrix", "adjoint", "compose", "scale", "hermitian_part", "jacobi_eigh",
    "hermitian_eigenvalues", "operator_norm", "block_2x2", "matrix_from_json", "matrix_to_json",
    "random_matrix", "random_unitary",
]
