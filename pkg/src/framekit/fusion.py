"""Weighted subspace (fusion) frames.

A fusion frame is a family of subspaces W_i with positive weights v_i whose
weighted projections sum to an invertible operator S_W = sum v_i^2 P_i.
Subspaces are stored through orthonormal bases (orthonormalized at
ingestion); optional local frames allow the flattened-system comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import frames as fr
from . import numerics
from .errors import DimMismatch, LocalNotFrame, NotTight
from .frames import Frame
from .tolerances import DEFAULT_TOL, ToleranceConfig


class FusionBounds(NamedTuple):
    lower: float
    upper: float


class FusionFrame:
    """Subspaces with weights; optionally a local frame inside each subspace."""

    def __init__(self, subspaces, local_frames=None, tol: ToleranceConfig = DEFAULT_TOL):
        if not subspaces:
            raise ValueError("a fusion frame needs at least one subspace")
        complex_field = any(np.iscomplexobj(np.asarray(basis)) for basis, _ in subspaces)
        if local_frames is not None:
            if len(local_frames) != len(subspaces):
                raise DimMismatch(
                    f"{len(local_frames)} local frames for {len(subspaces)} subspaces"
                )
            complex_field = complex_field or any(np.iscomplexobj(np.asarray(v)) for v in local_frames)
        dtype = np.complex128 if complex_field else np.float64

        bases = []
        weights = []
        dim = None
        for basis, weight in subspaces:
            basis = np.asarray(basis, dtype=dtype)
            if basis.ndim != 2 or basis.shape[0] < 1:
                raise ValueError(f"subspace basis must be a non-empty 2-d array, got {basis.shape}")
            if dim is None:
                dim = basis.shape[1]
            elif basis.shape[1] != dim:
                raise DimMismatch(f"subspace bases disagree on dimension: {basis.shape[1]} vs {dim}")
            if not (float(weight) > 0.0):
                raise ValueError(f"weights must be positive, got {weight!r}")
            bases.append(numerics.gram_schmidt(basis, tol))
            weights.append(float(weight))

        locals_out = None
        if local_frames is not None:
            locals_out = []
            for i, vectors in enumerate(local_frames):
                vectors = np.asarray(vectors, dtype=dtype)
                if vectors.ndim != 2 or vectors.shape[1] != dim:
                    raise DimMismatch(f"local frame {i} must sit in dimension {dim}")
                p = bases[i].T @ bases[i].conj()
                for j, v in enumerate(vectors):
                    drift = float(np.linalg.norm(v - p @ v))
                    if drift > tol.eq_tol * max(1.0, float(np.linalg.norm(v))):
                        raise LocalNotFrame(
                            f"vector {j} of local frame {i} leaves its subspace by {drift:.3e}"
                        )
                locals_out.append(vectors)
            locals_out = tuple(locals_out)

        self.dim = dim
        self.bases = tuple(bases)
        self.weights = np.array(weights)
        self.local_frames = locals_out

    @property
    def subspaces(self):
        return tuple(zip(self.bases, self.weights))

    @property
    def count(self) -> int:
        return len(self.bases)

    @property
    def field(self) -> str:
        return "complex" if np.iscomplexobj(self.bases[0]) else "real"

    def subspace_dims(self):
        return tuple(b.shape[0] for b in self.bases)


def fusion_operator(ff: FusionFrame) -> np.ndarray:
    """S_W = sum of weight^2 times the subspace projections."""
    s = np.zeros((ff.dim, ff.dim), dtype=ff.bases[0].dtype)
    for basis, weight in ff.subspaces:
        s = s + (weight * weight) * (basis.T @ basis.conj())
    return (s + s.conj().T) / 2.0


def fusion_bounds(ff: FusionFrame, tol: ToleranceConfig = DEFAULT_TOL) -> FusionBounds:
    values, _ = numerics.hermitian_eig(fusion_operator(ff), tol)
    return FusionBounds(max(float(values[-1]), 0.0), max(float(values[0]), 0.0))


def tight_redundancy(ff: FusionFrame, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """For a tight fusion frame, the bound equals this dimension-count ratio."""
    lower, upper = fusion_bounds(ff, tol)
    if upper - lower > tol.eq_tol * max(upper, 1.0):
        raise NotTight(f"fusion bounds ({lower:.6g}, {upper:.6g}) are not equal")
    return float(np.sum(ff.weights**2 * np.array(ff.subspace_dims()))) / ff.dim


def fusion_analysis(ff: FusionFrame, x) -> list:
    """Weighted projections [v_i P_i x]."""
    x = np.asarray(x)
    if x.shape != (ff.dim,):
        raise DimMismatch(f"expected a vector of length {ff.dim}, got shape {x.shape}")
    return [w * (b.T @ (b.conj() @ x)) for b, w in ff.subspaces]


@dataclass(frozen=True)
class LocalGlobalReport:
    local_lower: float
    local_upper: float
    fusion_lower: float
    fusion_upper: float
    flattened_lower: float
    flattened_upper: float
    forward_lower_ok: bool
    forward_upper_ok: bool
    converse_lower_ok: bool
    converse_upper_ok: bool

    @property
    def consistent(self) -> bool:
        return (
            self.forward_lower_ok
            and self.forward_upper_ok
            and self.converse_lower_ok
            and self.converse_upper_ok
        )


def local_global_check(ff: FusionFrame, tol: ToleranceConfig = DEFAULT_TOL) -> LocalGlobalReport:
    """Cross-check fusion bounds against the flattened weighted local system.

    With local bounds A <= A_i, B_i <= B and fusion bounds (C, D), the
    flattened family {v_i phi_ij} must have bounds inside [A*C, B*D], and
    conversely the fusion bounds are trapped by the flattened ones scaled
    by the local bounds.
    """
    if ff.local_frames is None:
        raise LocalNotFrame("no local frames attached to this fusion frame")
    local_lower = np.inf
    local_upper = 0.0
    for i, vectors in enumerate(ff.local_frames):
        coords = vectors @ ff.bases[i].conj().T
        local = Frame(coords)
        if not fr.is_frame(local, tol):
            raise LocalNotFrame(f"local frame {i} does not span its subspace")
        lo, hi = fr.frame_bounds(local, tol)
        local_lower = min(local_lower, lo)
        local_upper = max(local_upper, hi)

    fusion_lower, fusion_upper = fusion_bounds(ff, tol)
    flattened = Frame(
        np.vstack([w * vectors for vectors, w in zip(ff.local_frames, ff.weights)])
    )
    flat_lower, flat_upper = fr.frame_bounds(flattened, tol)

    slack = tol.eq_tol * max(1.0, flat_upper, local_upper * fusion_upper)
    return LocalGlobalReport(
        local_lower=float(local_lower),
        local_upper=float(local_upper),
        fusion_lower=fusion_lower,
        fusion_upper=fusion_upper,
        flattened_lower=flat_lower,
        flattened_upper=flat_upper,
        forward_lower_ok=local_lower * fusion_lower <= flat_lower + slack,
        forward_upper_ok=flat_upper <= local_upper * fusion_upper + slack,
        converse_lower_ok=flat_lower / local_upper <= fusion_lower + slack,
        converse_upper_ok=fusion_upper <= flat_upper / local_lower + slack,
    )
