import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from numradius.linalg import (
    ConvergenceError, NotHermitianError, ShapeError, adjoint, as_matrix, block_2x2, compose,
    hermitian_eigenvalues, hermitian_part, identity, jacobi_eigh, matrix_from_json,
    matrix_to_json, operator_norm, random_matrix, random_unitary, scale, zeros,
)

from conftest import E12, complex_matrices


def test_adjoint_examples(rng):
    np.testing.assert_array_equal(adjoint(E12), [[0, 0], [1, 0]])
    np.testing.assert_array_equal(adjoint([[1j]]), [[-1j]])
    a = random_matrix(rng, 3, 4)
    assert adjoint(a).shape == (4, 3)
    np.testing.assert_array_equal(adjoint(adjoint(a)), a)


def test_results_are_immutable(rng):
    a = random_matrix(rng, 2, 2)
    for out in (a, adjoint(a), compose(a, a), scale(a, 2), hermitian_part(a, 0.3)):
        with pytest.raises(ValueError):
            out[0, 0] = 5


def test_as_matrix_rejects_nonfinite():
    with pytest.raises(ValueError):
        as_matrix([[np.nan]])
    with pytest.raises(ValueError):
        as_matrix([[1, np.inf]])


def test_compose_examples(rng):
    a = random_matrix(rng, 3, 3)
    np.testing.assert_allclose(compose(identity(3), a), a)
    np.testing.assert_array_equal(scale(a, 0), np.zeros((3, 3)))
    np.testing.assert_array_equal(compose(E12, E12), np.zeros((2, 2)))
    np.testing.assert_allclose(compose(a, a, "subtract"), np.zeros((3, 3)))


def test_compose_shape_error_names_shapes(rng):
    with pytest.raises(ShapeError, match="2x3.*2x3"):
        compose(random_matrix(rng, 2, 3), random_matrix(rng, 2, 3))
    with pytest.raises(ShapeError, match="2x3.*3x2"):
        compose(random_matrix(rng, 2, 3), random_matrix(rng, 3, 2), "add")


@given(complex_matrices(max_dim=4, square=True), complex_matrices(max_dim=4, square=True))
def test_multiply_associative(a, b):
    n = min(a.shape[0], b.shape[0])
    a, b = a[:n, :n], b[:n, :n]
    c = a.conj().T
    lhs = compose(compose(a, b), c)
    rhs = compose(a, compose(b, c))
    assert np.linalg.norm(lhs - rhs) <= 1e-12 * (1 + np.linalg.norm(lhs))


def test_hermitian_part_examples():
    np.testing.assert_allclose(hermitian_part(E12, 0), [[0, 0.5], [0.5, 0]])
    th = 0.7
    np.testing.assert_allclose(hermitian_part(identity(2), th), np.cos(th) * np.eye(2))
    h = hermitian_part([[1, 2], [0, -1]], np.pi / 2)
    np.testing.assert_allclose(h, [[0, 1j], [-1j, 0]], atol=1e-15)


def test_hermitian_part_non_square():
    with pytest.raises(ShapeError):
        hermitian_part(np.ones((2, 3)), 0.0)


@given(complex_matrices(square=True), st.floats(-10, 10))
def test_hermitian_part_is_bit_exact_hermitian(a, theta):
    h = hermitian_part(a, theta)
    assert np.array_equal(h, h.conj().T)


def test_eigenvalue_examples():
    np.testing.assert_allclose(hermitian_eigenvalues(np.diag([3.0, 1.0, 2.0])), [1, 2, 3])
    np.testing.assert_allclose(hermitian_eigenvalues([[0, 0.5], [0.5, 0]]), [-0.5, 0.5])
    np.testing.assert_allclose(hermitian_eigenvalues([[7.0]]), [7.0])
    np.testing.assert_array_equal(hermitian_eigenvalues(np.zeros((3, 3))), [0, 0, 0])


def _quadratic_oracle(h):
    a, d, b = h[0, 0].real, h[1, 1].real, h[0, 1]
    mid, rad = (a + d) / 2, np.hypot((a - d) / 2, abs(b))
    return np.array([mid - rad, mid + rad])


def test_eigenvalues_2x2_against_quadratic_formula(rng):
    for _ in range(50):
        a = random_matrix(rng, 2, 2)
        h = a + a.conj().T
        np.testing.assert_allclose(hermitian_eigenvalues(h), _quadratic_oracle(h), atol=1e-10)


def test_eigenvalues_match_lapack_and_trace(rng):
    for n in (1, 3, 6, 12):
        a = random_matrix(rng, n, n)
        h = a + a.conj().T
        ev = hermitian_eigenvalues(h)
        assert np.all(np.diff(ev) >= 0)
        np.testing.assert_allclose(ev, np.linalg.eigvalsh(h), atol=1e-12 * n)
        assert abs(ev.sum() - np.trace(h).real) <= 1e-9 * np.linalg.norm(h)


def test_eigenvalues_unitary_invariance(rng):
    a = random_matrix(rng, 5, 5)
    h = a + a.conj().T
    u = random_unitary(rng, 5)
    np.testing.assert_allclose(hermitian_eigenvalues(u.conj().T @ h @ u), hermitian_eigenvalues(h), atol=1e-9)


def test_jacobi_eigenvectors_and_batch(rng):
    hs = np.stack([hermitian_part(random_matrix(rng, 4, 4), t) for t in (0.1, 1.0, 2.0)])
    w, v = jacobi_eigh(hs)
    assert w.shape == (3, 4) and v.shape == (3, 4, 4)
    for k in range(3):
        np.testing.assert_allclose(hs[k] @ v[k], v[k] * w[k], atol=1e-12)
        np.testing.assert_allclose(v[k].conj().T @ v[k], np.eye(4), atol=1e-12)


def test_eigenvalues_reject_non_hermitian():
    with pytest.raises(NotHermitianError):
        hermitian_eigenvalues(E12)


def test_eigenvalues_nonconvergence_reports_residual(rng):
    a = random_matrix(rng, 6, 6)
    with pytest.raises(ConvergenceError) as err:
        jacobi_eigh(a + a.conj().T, max_sweeps=1)
    assert err.value.residual > 0


def test_operator_norm_examples():
    assert operator_norm(identity(4)) == pytest.approx(1)
    assert operator_norm(E12) == pytest.approx(1)
    assert operator_norm(zeros(2, 3)) == 0


def test_operator_norm_monte_carlo_oracle(rng):
    a = random_matrix(rng, 4, 4)
    x = rng.normal(size=(100_000, 4)) + 1j * rng.normal(size=(100_000, 4))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    sample_max = np.linalg.norm(x @ a.T, axis=1).max()
    nrm = operator_norm(a)
    assert nrm >= sample_max - 1e-12
    assert nrm <= sample_max + 0.05  # 1e5 samples get close to the top singular direction
    assert nrm >= sample_max - 1e-6


def test_operator_norm_matches_top_singular_value_via_jacobi(rng):
    a = random_matrix(rng, 3, 5)
    assert operator_norm(a) == pytest.approx(np.sqrt(hermitian_eigenvalues(a.conj().T @ a)[-1]), rel=1e-12)


@given(complex_matrices(), complex_matrices())
def test_operator_norm_properties(a, b):
    assert abs(operator_norm(a) - operator_norm(adjoint(a))) <= 1e-10 * (1 + operator_norm(a))
    if a.shape[1] == b.shape[0]:
        assert operator_norm(a @ b) <= operator_norm(a) * operator_norm(b) + 1e-9


def test_block_examples(rng):
    one = [[1]]
    np.testing.assert_array_equal(block_2x2(None, one, one, None), [[0, 1], [1, 0]])
    np.testing.assert_array_equal(block_2x2(identity(1), None, None, identity(2)), np.eye(3))
    x, y, z, w = (random_matrix(rng, 2, 2) for _ in range(4))
    blk = block_2x2(x, y, z, w)
    np.testing.assert_array_equal(blk[:2, :2], x)
    np.testing.assert_array_equal(blk[:2, 2:], y)
    np.testing.assert_array_equal(blk[2:, :2], z)
    np.testing.assert_array_equal(blk[2:, 2:], w)


def test_block_rejects_bad_shapes(rng):
    with pytest.raises(ShapeError):
        block_2x2(random_matrix(rng, 2, 2), random_matrix(rng, 3, 2), None, None)


def test_matrix_json_roundtrip(rng):
    a = random_matrix(rng, 2, 3)
    np.testing.assert_array_equal(matrix_from_json(matrix_to_json(a)), a)
    with pytest.raises(ShapeError):
        matrix_from_json({"rows": 2, "cols": 2, "entries": [[[0, 0], [1, 0]]]})
    with pytest.raises(ValueError):
        matrix_from_json({"rows": 1, "cols": 1, "entries": [[[0, 0, 1]]]})
