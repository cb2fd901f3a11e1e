"""Numerical radii, Crawford numbers, 2x2 operator-matrix bounds and polynomial zero bounds."""
from .bounds import (
    BlockPair, ScalarBounds, af_baseline_upper, full_block_bounds, offdiag_lower,
    offdiag_true_radius, offdiag_upper, product_bound, scalar_bounds_report,
)
from .linalg import (
    adjoint, as_matrix, block_2x2, compose, hermitian_eigenvalues, hermitian_part,
    operator_norm, scale,
)
from .numrange import (
    ScanConfig, ScanResult, boundary_points, c_lower_value, crawford_number,
    numerical_radius, theta_scan,
)
from .poly import (
    Polynomial, ZeroBoundReport, classical_zero_bound, companion, depress, new_zero_bound,
    roots_oracle, zero_bound_report,
)

__version__ = "0.1.0"
