"""Dense linear algebra on a finite-dimensional real inner-product space.

Vectors are 1-D float arrays, operators are dense square 2-D arrays.
Every routine validates shapes and finiteness; a mismatch raises instead
of broadcasting.
"""

import numpy as np

from .errors import DimensionMismatch, NotContractive, SingularOperator

# Eigenvalues below this threshold count as zero for inversion purposes.
TOL_EIG = 1e-12


def as_vector(x, dim=None):
    """Validate ``x`` as a finite 1-D float vector, optionally of length ``dim``."""
    v = np.asarray(x, dtype=float)
    if v.ndim == 0:
        v = v.reshape(1)
    if v.ndim != 1:
        raise DimensionMismatch(f"expected a 1-D vector, got shape {v.shape}")
    if dim is not None and v.shape[0] != dim:
        raise DimensionMismatch(f"expected dimension {dim}, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def as_operator(a, dim=None):
    """Validate ``a`` as a finite square matrix, optionally of size ``dim``."""
    m = np.asarray(a, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if dim is not None and m.shape[0] != dim:
        raise DimensionMismatch(f"expected size {dim}, got {m.shape[0]}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def _require_symmetric(s):
    scale = 1.0 + float(np.max(np.abs(s))) if s.size else 1.0
    if float(np.max(np.abs(s - s.T))) > 1e-12 * scale:
        raise ValueError("matrix must be symmetric")


def inner(x, y):
    """Euclidean inner product of two same-dimension vectors."""
    x = as_vector(x)
    y = as_vector(y, dim=x.shape[0])
    return float(x @ y)


def norm(x):
    """Euclidean norm."""
    return float(np.linalg.norm(as_vector(x)))


def symmetrize(a):
    """Symmetric part (A + A^T)/2; exact mirror symmetry by construction."""
    a = as_operator(a)
    return (a + a.T) / 2.0


def min_eigenvalue_sym(s):
    """Smallest eigenvalue of a symmetric matrix."""
    s = as_operator(s)
    _require_symmetric(s)
    return float(np.linalg.eigvalsh(s)[0])


def is_positive(s, tol=0.0):
    """Whether a symmetric matrix is positive semidefinite up to ``tol``."""
    return min_eigenvalue_sym(s) >= -tol


def inverse_norm(s):
    """Operator norm of the inverse of a symmetric positive definite matrix.

    Equals 1/lambda_min(S). Raises :class:`SingularOperator` when the
    smallest eigenvalue is not safely positive.
    """
    lam = min_eigenvalue_sym(s)
    if lam <= TOL_EIG:
        raise SingularOperator(f"smallest eigenvalue {lam:.3e} is not positive")
    return 1.0 / lam


def operator_norm(a):
    """Operator (spectral) norm, computed as sqrt(lambda_max(A^T A))."""
    a = as_operator(a)
    gram = a.T @ a
    lam = float(np.linalg.eigvalsh((gram + gram.T) / 2.0)[-1])
    return float(np.sqrt(max(lam, 0.0)))


def banach_inverse_bound(b):
    """Upper bound 1/(1 - ||B - I||) for ||B^-1|| when ||B - I|| < 1.

    Raises :class:`NotContractive` when the deviation from the identity is
    not strictly below one.
    """
    b = as_operator(b)
    dev = operator_norm(b - np.eye(b.shape[0]))
    if dev >= 1.0:
        raise NotContractive(f"||B - I|| = {dev:.6g} >= 1")
    return 1.0 / (1.0 - dev)
