"""Dense-matrix substrate: field tags, orthonormalization, rank and polar factors.

Everything here works on plain numpy arrays.  A matrix is "real-tagged" when
its dtype is a float type and "complex-tagged" when it is a complex type;
mixing tags in one operation raises ``FieldMismatchError`` instead of silently
promoting.  All functions are pure and never mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FieldMismatchError, SingularMatrixError, ZeroInputError

REAL = "real"
COMPLEX = "complex"

#: Default relative tolerance for rank and residual decisions. Ambient
#: dimensions stay <= 8 in double precision, which leaves several orders of
#: magnitude of headroom above roundoff.
DEFAULT_TOL = 1e-9


def as_matrix(a, field: str | None = None) -> np.ndarray:
    """Return ``a`` as a float64 or complex128 2-d array.

    ``field`` forces the tag; without it, complex input stays complex and
    everything else becomes real.  Real-tagged output with a nonzero
    imaginary part raises ``FieldMismatchError``.
    """
    m = np.asarray(a)
    if field is None:
        field = COMPLEX if np.iscomplexobj(m) else REAL
    if field == REAL:
        if np.iscomplexobj(m):
            if np.any(m.imag != 0):
                raise FieldMismatchError("complex entries in real-tagged matrix")
            m = m.real
        m = np.asarray(m, dtype=np.float64)
    elif field == COMPLEX:
        m = np.asarray(m, dtype=np.complex128)
    else:
        raise ValueError(f"unknown field tag {field!r}")
    if m.ndim != 2:
        m = np.atleast_2d(m)
    return m


def field_of(m: np.ndarray) -> str:
    """Field tag of an array, derived from its dtype."""
    return COMPLEX if np.iscomplexobj(m) else REAL


def require_same_field(*arrays: np.ndarray) -> str:
    """Check that all arrays carry one field tag and return it."""
    tags = {field_of(a) for a in arrays}
    if len(tags) > 1:
        raise FieldMismatchError("operation mixes real- and complex-tagged matrices")
    return tags.pop()


def adjoint(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(np.asarray(m)).T


def spectral_norm(m: np.ndarray) -> float:
    """Largest singular value; 0.0 for an empty matrix."""
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def orthonormalize(cols: np.ndarray, tol: float = DEFAULT_TOL) -> tuple[np.ndarray, int]:
    """Orthonormal basis for the column space of ``cols``.

    Modified Gram-Schmidt with column rejection: column k is dropped when its
    residual after projection against the columns already retained has norm
    <= ``tol`` times the largest input column norm.  Returns the retained
    orthonormal columns and their count (the numerical rank).

    Raises ``ZeroInputError`` when every input column has norm <= ``tol``.
    """
    m = np.array(cols, copy=True)
    if m.ndim != 2 or m.shape[1] < 1:
        raise ValueError("need a matrix with at least one column")
    if tol <= 0:
        raise ValueError("tol must be positive")
    norms = np.linalg.norm(m, axis=0)
    scale = float(norms.max())
    if scale <= tol:
        raise ZeroInputError("all columns are numerically zero")
    thresh = tol * scale
    kept = []
    for k in range(m.shape[1]):
        v = m[:, k]
        # project twice against the retained block; one pass loses
        # orthogonality for nearly dependent columns
        for q in kept:
            v = v - q * (np.vdot(q, v))
        for q in kept:
            v = v - q * (np.vdot(q, v))
        r = np.linalg.norm(v)
        if r > thresh:
            kept.append(v / r)
    q = np.column_stack(kept) if kept else np.zeros((m.shape[0], 0), dtype=m.dtype)
    return q, len(kept)


def rank_with_tol(m: np.ndarray, tol: float = DEFAULT_TOL) -> int:
    """Number of singular values above ``tol`` times the largest one."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(m)
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


@dataclass(frozen=True)
class PolarFactors:
    """Unitary and positive factors of an invertible square matrix."""

    unitary: np.ndarray
    positive: np.ndarray


def polar_decompose(m: np.ndarray, tol: float = DEFAULT_TOL) -> PolarFactors:
    """Factor an invertible square matrix as unitary times positive Hermitian.

    Uses the Newton iteration ``X <- (X + X^{-H}) / 2`` started from the
    (rescaled) input, which converges quadratically to the unitary factor;
    no eigensolver is involved.  Iteration stops once successive iterates
    differ by at most ``tol`` in Frobenius norm.

    Raises ``SingularMatrixError`` when the smallest singular value is
    <= ``tol`` times the largest.
    """
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("polar decomposition needs a square matrix")
    s = np.linalg.svd(a, compute_uv=False)
    if s[-1] <= tol * s[0]:
        raise SingularMatrixError("matrix is singular at the working tolerance")
    # rescaling by a positive scalar leaves the unitary factor unchanged and
    # speeds up the first Newton steps
    x = a / s[0]
    for _ in range(100):
        x_next = 0.5 * (x + adjoint(np.linalg.inv(x)))
        delta = np.linalg.norm(x_next - x)
        x = x_next
        if delta <= tol:
            break
    else:
        raise SingularMatrixError("polar iteration failed to converge")
    u = x
    p = adjoint(u) @ a
    p = 0.5 * (p + adjoint(p))
    return PolarFactors(unitary=u, positive=p)
