"""Small fixed-size linear algebra on 3-vectors and 3x3 matrices.

Everything in the toolkit lives in R^3, so all helpers validate shapes
hard: a vector is a finite float64 array of shape (3,), a matrix one of
shape (3, 3). Working with fixed dimensions keeps the invariants exact
and turns shape bugs into immediate errors.
"""

import numpy as np

# |det A| <= SINGULARITY_RTOL * ||A||_F^3 is treated as singular. The
# value is the right scale for float64 LU on well-posed 3x3 systems.
SINGULARITY_RTOL = 1e-12


class SingularMatrixError(ValueError):
    """Raised when a 3x3 solve meets a (numerically) singular matrix."""


def vec3(x) -> np.ndarray:
    """Validate and return a copy of x as a finite float64 (3,) array."""
    v = np.array(x, dtype=float).reshape(-1)
    if v.shape != (3,):
        raise ValueError(f"expected 3 components, got shape {np.shape(x)}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"vector has non-finite components: {v}")
    return v


def mat3(x) -> np.ndarray:
    """Validate and return a copy of x as a finite float64 (3, 3) array.

    Accepts a 3x3 nested structure or a row-major flat list of 9 entries.
    """
    m = np.array(x, dtype=float)
    if m.shape == (9,):
        m = m.reshape(3, 3)
    if m.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {np.shape(x)}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"matrix has non-finite entries:\n{m}")
    return m


def skew(v: np.ndarray) -> np.ndarray:
    """Skew-symmetric matrix of v, so that skew(v) @ w == cross(v, w)."""
    return np.array([
        [0.0, -v[2], v[1]],
        [v[2], 0.0, -v[0]],
        [-v[1], v[0], 0.0],
    ])


def cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vector cross product a x b."""
    return np.array([
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ])


def solve3(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve A @ x = b for a nonsingular 3x3 A.

    Uses LU with partial pivoting plus one step of iterative refinement,
    which keeps the residual ||A @ x - b|| below 1e-12 * max(1, ||b||)
    for any matrix that passes the singularity gate.

    Raises SingularMatrixError when |det A| <= SINGULARITY_RTOL times the
    cube of the Frobenius norm (the natural determinant scale).
    """
    det = np.linalg.det(A)
    scale = np.linalg.norm(A) ** 3
    if abs(det) <= SINGULARITY_RTOL * scale:
        raise SingularMatrixError(
            f"matrix is singular to working precision (|det|={abs(det):.3e}, "
            f"threshold={SINGULARITY_RTOL * scale:.3e})"
        )
    x = np.linalg.solve(A, b)
    x += np.linalg.solve(A, b - A @ x)
    return x


def is_symmetric_positive_definite(M: np.ndarray, tol: float) -> bool:
    """True iff max|M - M^T| <= tol and all leading principal minors are positive."""
    if np.max(np.abs(M - M.T)) > tol:
        return False
    m1 = M[0, 0]
    m2 = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    m3 = np.linalg.det(M)
    return m1 > 0.0 and m2 > 0.0 and m3 > 0.0
