"""Dense Hermitian linear algebra used by the rest of the package.

Eigendecompositions run through cyclic Jacobi rotation sweeps (complex
rotations in the complex case), which keep the eigenvector matrix unitary
to machine precision at the small sizes this package targets.  The sweeps
live in a compiled kernel when available, with a pure NumPy fallback picked
at import time; everything above the sweep (validation, ordering, the tie
conventions) is shared Python.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import (
    DependentInput,
    NoConvergence,
    NotHermitian,
    NotOrthonormalInput,
    NotPSD,
    NotSquare,
    SingularForNegativePower,
)
from .tolerances import DEFAULT_TOL, ToleranceConfig

try:  # pragma: no cover - exercised indirectly via either backend
    from . import _kernels as _backend
except ImportError:  # pragma: no cover
    from . import _jacobi_py as _backend

BACKEND = _backend.BACKEND

_MAX_SWEEPS = 60
_SIGN_FLOOR = 1e-10


class HermitianEigen(NamedTuple):
    """Eigenvalues (descending) and the matching eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray


def _as_square(a) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {a.shape}")
    if np.iscomplexobj(a):
        return a.astype(np.complex128, copy=False)
    return a.astype(np.float64, copy=False)


def _check_hermitian(a, tol: ToleranceConfig):
    scale = max(1.0, float(np.linalg.norm(a)))
    dev = float(np.linalg.norm(a - a.conj().T))
    if dev > tol.eq_tol * scale:
        raise NotHermitian(f"matrix deviates from its adjoint by {dev:.3e}")


def _sign_normalize(vectors: np.ndarray) -> None:
    # Deterministic representative per eigenvector: first component larger
    # than a floor is made positive real.
    for j in range(vectors.shape[1]):
        col = vectors[:, j]
        idx = np.flatnonzero(np.abs(col) > _SIGN_FLOOR)
        if idx.size == 0:
            continue
        lead = col[idx[0]]
        if np.iscomplexobj(col):
            vectors[:, j] = col * (np.conj(lead) / abs(lead))
        elif lead < 0:
            vectors[:, j] = -col


def _lex_key(col: np.ndarray):
    rounded = np.round(col, 10)
    if np.iscomplexobj(col):
        return tuple(np.column_stack([rounded.real, rounded.imag]).ravel())
    return tuple(rounded)


def _finalize(values, vectors, tol: ToleranceConfig) -> HermitianEigen:
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]
    n = values.shape[0]
    if n == 0:
        return HermitianEigen(values, vectors)

    _sign_normalize(vectors)

    # Group numerically coincident eigenvalues, re-orthonormalize inside each
    # group, and order the group's columns lexicographically so repeated
    # eigenvalues still yield a reproducible basis.
    frob = float(np.sqrt(np.sum(values**2)))
    gap = 10.0 * tol.eig_offdiag_tol * max(frob, 1.0)
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and values[stop - 1] - values[stop] <= gap:
            stop += 1
        if stop - start > 1:
            block = vectors[:, start:stop]
            for j in range(block.shape[1]):
                col = block[:, j]
                for _ in range(2):
                    for k in range(j):
                        col = col - (block[:, k].conj() @ col) * block[:, k]
                block[:, j] = col / np.linalg.norm(col)
            _sign_normalize(block)
            cols = sorted(range(block.shape[1]), key=lambda j: _lex_key(block[:, j]), reverse=True)
            vectors[:, start:stop] = block[:, cols]
        start = stop
    return HermitianEigen(values, vectors)


def hermitian_eig(a, tol: ToleranceConfig = DEFAULT_TOL) -> HermitianEigen:
    """Full eigendecomposition of a Hermitian matrix.

    Returns eigenvalues sorted descending and orthonormal eigenvector
    columns; raises NotHermitian / NoConvergence on bad input or a sweep
    budget blowout (the latter should not happen for finite input).
    """
    a = _as_square(a)
    _check_hermitian(a, tol)
    work = (a + a.conj().T) / 2.0
    off_target = tol.eig_offdiag_tol * float(np.linalg.norm(work))
    if np.iscomplexobj(work):
        values, vectors, _, converged = _backend.jacobi_eig_complex(work, off_target, _MAX_SWEEPS)
    else:
        values, vectors, _, converged = _backend.jacobi_eig_real(work, off_target, _MAX_SWEEPS)
    if not converged:
        raise NoConvergence(f"Jacobi sweeps did not reach the off-diagonal target in {_MAX_SWEEPS} sweeps")
    return _finalize(values, vectors, tol)


def matrix_power(a, exponent: float, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Hermitian fractional power A^exponent via the spectral decomposition."""
    values, vectors = hermitian_eig(a, tol)
    if values.size == 0:
        return np.zeros_like(np.asarray(a))
    scale = float(np.max(np.abs(values)))
    if float(values[-1]) < -tol.rank_tol * max(scale, 1.0):
        raise NotPSD(f"matrix has a negative eigenvalue {values[-1]:.3e}")
    if exponent < 0 and float(values[-1]) <= tol.rank_tol * scale:
        raise SingularForNegativePower(
            f"smallest eigenvalue {values[-1]:.3e} is numerically zero; cannot invert"
        )
    clamped = np.maximum(values, 0.0)
    powered = np.power(clamped, exponent)
    result = (vectors * powered) @ vectors.conj().T
    return (result + result.conj().T) / 2.0


def operator_norm(a, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Spectral norm, computed as sqrt of the top eigenvalue of A*A."""
    a = np.asarray(a)
    if a.ndim == 1:
        a = a[:, None]
    gram = a.conj().T @ a
    gram = (gram + gram.conj().T) / 2.0
    values, _ = hermitian_eig(gram, tol)
    top = float(values[0]) if values.size else 0.0
    return float(np.sqrt(max(top, 0.0)))


def _orthogonalize_once(vec, basis_rows):
    out = vec
    for row in basis_rows:
        out = out - (row.conj() @ out) * row
    return out


def gram_schmidt(vectors, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Orthonormalize the rows of ``vectors`` in order.

    Modified Gram-Schmidt with one re-orthogonalization pass.  Raises
    DependentInput (carrying the offending row index) when a vector falls
    below rank_tol times its own norm after projection.
    """
    vectors = np.asarray(vectors)
    if vectors.ndim != 2:
        raise ValueError(f"expected a 2-d array of row vectors, got shape {vectors.shape}")
    dtype = np.complex128 if np.iscomplexobj(vectors) else np.float64
    vectors = vectors.astype(dtype, copy=False)
    basis: list[np.ndarray] = []
    for i in range(vectors.shape[0]):
        v = vectors[i]
        original = float(np.linalg.norm(v))
        r = _orthogonalize_once(v, basis)
        r = _orthogonalize_once(r, basis)
        nrm = float(np.linalg.norm(r))
        if nrm <= tol.rank_tol * original or original == 0.0:
            raise DependentInput(i)
        basis.append(r / nrm)
    return np.array(basis, dtype=dtype)


def projection_onto_span(vectors, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Orthogonal projection onto the span of the given row vectors.

    Dependent (or zero) rows are skipped rather than rejected, so any
    spanning family works.
    """
    vectors = np.asarray(vectors)
    if vectors.ndim != 2:
        raise ValueError(f"expected a 2-d array of row vectors, got shape {vectors.shape}")
    dtype = np.complex128 if np.iscomplexobj(vectors) else np.float64
    vectors = vectors.astype(dtype, copy=False)
    n = vectors.shape[1]
    basis: list[np.ndarray] = []
    for i in range(vectors.shape[0]):
        v = vectors[i]
        original = float(np.linalg.norm(v))
        if original == 0.0:
            continue
        r = _orthogonalize_once(v, basis)
        r = _orthogonalize_once(r, basis)
        nrm = float(np.linalg.norm(r))
        if nrm <= tol.rank_tol * original:
            continue
        basis.append(r / nrm)
    if not basis:
        return np.zeros((n, n), dtype=dtype)
    b = np.array(basis, dtype=dtype)
    p = b.T @ b.conj()
    return (p + p.conj().T) / 2.0


def unitary_complete(rows, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Extend K orthonormal rows of length M to an M x M unitary.

    The input rows are kept verbatim as the first K rows; the remainder is
    filled by orthogonalizing standard basis vectors against them in index
    order, skipping candidates that collapse below rank_tol.
    """
    rows = np.asarray(rows)
    if rows.ndim != 2:
        raise ValueError(f"expected a 2-d array of row vectors, got shape {rows.shape}")
    k, m = rows.shape
    if k > m:
        raise NotOrthonormalInput(f"{k} orthonormal rows cannot fit in dimension {m}")
    dtype = np.complex128 if np.iscomplexobj(rows) else np.float64
    rows = rows.astype(dtype, copy=False)
    gram = rows @ rows.conj().T
    dev = float(np.linalg.norm(gram - np.eye(k)))
    if dev > tol.eq_tol * max(1.0, float(np.linalg.norm(gram))):
        raise NotOrthonormalInput(f"rows deviate from orthonormality by {dev:.3e}")
    out = np.zeros((m, m), dtype=dtype)
    out[:k] = rows
    basis = [out[i] for i in range(k)]
    filled = k
    for j in range(m):
        if filled == m:
            break
        cand = np.zeros(m, dtype=dtype)
        cand[j] = 1.0
        r = _orthogonalize_once(cand, basis)
        r = _orthogonalize_once(r, basis)
        nrm = float(np.linalg.norm(r))
        if nrm <= tol.rank_tol:
            continue
        out[filled] = r / nrm
        basis.append(out[filled])
        filled += 1
    if filled != m:  # pragma: no cover - cannot happen for orthonormal input
        raise NotOrthonormalInput("failed to complete the unitary; input rows ill-conditioned")
    return out


def trace(a):
    """Trace of a square matrix, as a Python float (real) or complex."""
    a = _as_square(a)
    t = a.trace()
    if np.iscomplexobj(a):
        return complex(t)
    return float(t)
