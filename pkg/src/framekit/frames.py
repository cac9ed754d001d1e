"""Frames in R^N / C^N and the operators attached to them.

A frame is stored as an (M, N) array whose rows are the frame vectors.
The synthesis matrix has the vectors as columns (N x M), the analysis
operator maps x to the coefficient list <x, phi_i>, and the frame operator
is S = synthesis . analysis.  Inner products are linear in the first slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import numerics
from .errors import (
    DimMismatch,
    NotAFrame,
    NotOrthogonalRanges,
    NotParseval,
    ZeroVector,
)
from .tolerances import DEFAULT_TOL, ToleranceConfig


@dataclass(frozen=True)
class Frame:
    """An ordered family of M vectors in dimension N (rows of ``vectors``)."""

    vectors: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vectors)
        if v.ndim != 2:
            raise ValueError(f"frame vectors must form a 2-d array, got shape {v.shape}")
        if v.shape[0] < 1 or v.shape[1] < 1:
            raise ValueError(f"frame needs at least one vector in dimension >= 1, got shape {v.shape}")
        dtype = np.complex128 if np.iscomplexobj(v) else np.float64
        object.__setattr__(self, "vectors", v.astype(dtype, copy=True))

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def count(self) -> int:
        return self.vectors.shape[0]

    @property
    def field(self) -> str:
        return "complex" if np.iscomplexobj(self.vectors) else "real"

    def __len__(self) -> int:
        return self.count


class FrameBounds(NamedTuple):
    lower: float
    upper: float


@dataclass(frozen=True)
class FrameReport:
    """Summary diagnostics for one frame; see verify.frame_report."""

    bounds: FrameBounds
    eigenvalues: np.ndarray
    norms: np.ndarray
    redundancy: float
    coherence: float
    is_frame: bool
    is_tight: bool
    is_parseval: bool
    is_equal_norm: bool
    is_unit_norm: bool
    is_equiangular: bool
    equiangular_lines: bool
    is_exact: bool


def synthesis_matrix(f: Frame) -> np.ndarray:
    """N x M matrix with the frame vectors as columns."""
    return f.vectors.T.copy()


def analysis(f: Frame, x) -> np.ndarray:
    """Coefficient list <x, phi_i> for i = 1..M."""
    x = np.asarray(x)
    if x.shape != (f.dim,):
        raise DimMismatch(f"expected a vector of length {f.dim}, got shape {x.shape}")
    return f.vectors.conj() @ x


def synthesize(f: Frame, coefficients) -> np.ndarray:
    """Sum of coefficient[i] * phi_i."""
    c = np.asarray(coefficients)
    if c.shape != (f.count,):
        raise DimMismatch(f"expected {f.count} coefficients, got shape {c.shape}")
    return f.vectors.T @ c


def frame_operator(f: Frame) -> np.ndarray:
    t_star = synthesis_matrix(f)
    s = t_star @ t_star.conj().T
    return (s + s.conj().T) / 2.0


def gramian(f: Frame) -> np.ndarray:
    """M x M matrix of pairwise inner products <phi_j, phi_i>."""
    t_star = synthesis_matrix(f)
    g = t_star.conj().T @ t_star
    return (g + g.conj().T) / 2.0


def frame_spectrum(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    values, _ = numerics.hermitian_eig(frame_operator(f), tol)
    return values


def frame_bounds(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> FrameBounds:
    """Optimal frame bounds: the extreme eigenvalues of the frame operator."""
    values = frame_spectrum(f, tol)
    return FrameBounds(max(float(values[-1]), 0.0), max(float(values[0]), 0.0))


def is_frame(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    values = frame_spectrum(f, tol)
    top = float(values[0])
    return top > 0.0 and float(values[-1]) > tol.rank_tol * top


def canonical_dual(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> Frame:
    """The dual frame {S^-1 phi_i}."""
    if not is_frame(f, tol):
        raise NotAFrame("canonical dual requires a spanning family")
    s_inv = numerics.matrix_power(frame_operator(f), -1.0, tol)
    return Frame((s_inv @ synthesis_matrix(f)).T)


def canonical_parseval(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> Frame:
    """The Parseval frame {S^-1/2 phi_i}."""
    if not is_frame(f, tol):
        raise NotAFrame("canonical Parseval frame requires a spanning family")
    s_root_inv = numerics.matrix_power(frame_operator(f), -0.5, tol)
    return Frame((s_root_inv @ synthesis_matrix(f)).T)


def is_dual_pair(f: Frame, g: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True when synthesis(f) . analysis(g) is the identity."""
    if f.dim != g.dim or f.count != g.count:
        raise DimMismatch(
            f"dual candidates must match in shape; got {f.count}x{f.dim} vs {g.count}x{g.dim}"
        )
    prod = synthesis_matrix(f) @ g.vectors.conj()
    dev = float(np.linalg.norm(prod - np.eye(f.dim)))
    return dev <= tol.eq_tol * max(1.0, float(np.linalg.norm(prod)))


def make_alternate_dual(f: Frame, perturbation: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> Frame:
    """Dual frame {S^-1 phi_i + psi_i} for a range-orthogonal perturbation.

    The perturbation's analysis range must be orthogonal to the frame's,
    i.e. synthesis(f) . analysis(psi) = 0; every dual of f arises this way.
    """
    if f.dim != perturbation.dim or f.count != perturbation.count:
        raise DimMismatch(
            f"perturbation must match the frame shape {f.count}x{f.dim}, "
            f"got {perturbation.count}x{perturbation.dim}"
        )
    cross = synthesis_matrix(f) @ perturbation.vectors.conj()
    scale = numerics.operator_norm(synthesis_matrix(f), tol) * numerics.operator_norm(
        synthesis_matrix(perturbation), tol
    )
    if float(np.linalg.norm(cross)) > tol.eq_tol * max(1.0, scale):
        raise NotOrthogonalRanges(
            f"analysis ranges are not orthogonal (cross term {np.linalg.norm(cross):.3e})"
        )
    base = canonical_dual(f, tol)
    return Frame(base.vectors + perturbation.vectors)


def minimal_coefficients(f: Frame, x, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """The synthesizing coefficients of minimal l2 norm: <S^-1 x, phi_i>."""
    x = np.asarray(x)
    if x.shape != (f.dim,):
        raise DimMismatch(f"expected a vector of length {f.dim}, got shape {x.shape}")
    if not is_frame(f, tol):
        raise NotAFrame("minimal coefficients require a spanning family")
    s_inv = numerics.matrix_power(frame_operator(f), -1.0, tol)
    return analysis(f, s_inv @ x)


def apply_operator(f: Frame, op) -> Frame:
    """The frame {F phi_i} for a square operator F on the ambient space."""
    op = np.asarray(op)
    if op.shape != (f.dim, f.dim):
        raise DimMismatch(f"operator must be {f.dim}x{f.dim}, got {op.shape}")
    return Frame(f.vectors @ op.T)


def project_frame(f: Frame, subspace_vectors, tol: ToleranceConfig = DEFAULT_TOL) -> Frame:
    """Project the frame onto a subspace, expressed in an orthonormal basis of it."""
    sub = np.asarray(subspace_vectors)
    if sub.ndim != 2 or sub.shape[1] != f.dim:
        raise DimMismatch(f"subspace vectors must sit in dimension {f.dim}")
    dtype = np.complex128 if (np.iscomplexobj(sub) or f.field == "complex") else np.float64
    sub = sub.astype(dtype, copy=False)
    basis: list[np.ndarray] = []
    for i in range(sub.shape[0]):
        v = sub[i]
        original = float(np.linalg.norm(v))
        if original == 0.0:
            continue
        r = numerics._orthogonalize_once(v, basis)
        r = numerics._orthogonalize_once(r, basis)
        nrm = float(np.linalg.norm(r))
        if nrm <= tol.rank_tol * original:
            continue
        basis.append(r / nrm)
    if not basis:
        raise ZeroVector("subspace is zero-dimensional")
    b = np.array(basis)
    return Frame(f.vectors.astype(dtype, copy=False) @ b.conj().T)


def naimark_complete(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Extend a Parseval frame's synthesis rows to an M x M unitary.

    The first N rows of the result are exactly the rows of the synthesis
    matrix; the frame is the coordinate projection of the ONB formed by the
    unitary's columns.
    """
    s = frame_operator(f)
    dev = float(np.linalg.norm(s - np.eye(f.dim)))
    if dev > tol.eq_tol * max(1.0, float(np.linalg.norm(s))):
        raise NotParseval(f"frame operator deviates from the identity by {dev:.3e}")
    return numerics.unitary_complete(synthesis_matrix(f), tol)


def frame_distance(f: Frame, g: Frame) -> float:
    """Sum of squared vectorwise distances (not a metric; no square root)."""
    if f.dim != g.dim or f.count != g.count:
        raise DimMismatch(
            f"frames must match in shape; got {f.count}x{f.dim} vs {g.count}x{g.dim}"
        )
    diff = f.vectors - g.vectors
    return float(np.sum(np.abs(diff) ** 2))


def nearest_equal_norm(f: Frame) -> Frame:
    """Closest equal-norm family: common length = average of the norms."""
    norms = np.linalg.norm(f.vectors, axis=1)
    if np.any(norms == 0.0):
        raise ZeroVector(f"vector {int(np.argmin(norms))} has norm zero")
    c = float(np.mean(norms))
    return Frame(f.vectors * (c / norms)[:, None])


def nearest_parseval(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[Frame, float]:
    """Closest Parseval frame (the canonical one) plus the squared distance."""
    g = canonical_parseval(f, tol)
    return g, frame_distance(f, g)


def trace_formula_check(f: Frame, op, tol: ToleranceConfig = DEFAULT_TOL):
    """For a Parseval frame: trace of op vs the diagonal sum over the frame."""
    op = np.asarray(op)
    if op.shape != (f.dim, f.dim):
        raise DimMismatch(f"operator must be {f.dim}x{f.dim}, got {op.shape}")
    s = frame_operator(f)
    dev = float(np.linalg.norm(s - np.eye(f.dim)))
    if dev > tol.eq_tol * max(1.0, float(np.linalg.norm(s))):
        raise NotParseval(f"frame operator deviates from the identity by {dev:.3e}")
    lhs = numerics.trace(op)
    rhs = sum(np.conj(v) @ (op @ v) for v in f.vectors)
    if f.field == "complex" or np.iscomplexobj(op):
        return complex(lhs), complex(rhs)
    return float(np.real(lhs)), float(np.real(rhs))
