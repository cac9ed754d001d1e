"""Frame constructions: tight frames, prescribed spectra and norms, scalings.

The two workhorses here are the greedy two-row tight-frame construction
(spectral_tetris) and the rotation-chain construction of a Hermitian matrix
with prescribed spectrum and diagonal, which together with the Gramian
factorization yields frames with any feasible (spectrum, norms) pair.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import frames as fr
from . import numerics
from .errors import (
    DependentInput,
    InsufficientRedundancy,
    MajorizationFails,
    NotPSD,
    WrongRank,
)
from .frames import Frame
from .nnls import nnls
from .tolerances import DEFAULT_TOL, ToleranceConfig


class ScalingSolution(NamedTuple):
    feasible: bool
    scales: np.ndarray
    residual: float


def _spectrum_array(spectrum) -> np.ndarray:
    arr = np.asarray(spectrum, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("spectrum must be a non-empty 1-d sequence")
    if np.any(arr <= 0.0):
        raise ValueError("spectrum entries must be positive")
    if np.any(arr[:-1] < arr[1:]):
        raise ValueError("spectrum must be sorted descending")
    return arr


def _norms_squared_array(norms_squared) -> np.ndarray:
    arr = np.asarray(norms_squared, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("squared norms must be a non-empty 1-d sequence")
    if np.any(arr <= 0.0):
        raise ValueError("squared norms must be positive")
    if np.any(arr[:-1] < arr[1:]):
        raise ValueError("squared norms must be sorted descending")
    return arr


def spectral_tetris(dim: int, count: int, tol: ToleranceConfig = DEFAULT_TOL) -> Frame:
    """Unit-norm tight frame of `count` vectors in R^dim, count >= 2*dim.

    Fills the synthesis matrix row by row.  While the running row weight
    allows it, weight-1 singleton columns are placed; a fractional remainder
    x is finished with the two-column block

        [ sqrt(x/2)    sqrt(x/2)  ]
        [ sqrt(1-x/2) -sqrt(1-x/2)]

    whose rows contribute x and 2-x while its columns stay unit norm and
    pairwise orthogonal.  Row weights are tracked in exact rational
    arithmetic so branch decisions never suffer roundoff.
    """
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if count < 2 * dim:
        raise InsufficientRedundancy(
            f"the construction needs count >= 2*dim; got count={count}, dim={dim}"
        )
    target = Fraction(count, dim)
    t = np.zeros((dim, count))
    col = 0
    carry = Fraction(0)
    for row in range(dim):
        rem = target - carry
        carry = Fraction(0)
        while rem > 0:
            if rem >= 1:
                t[row, col] = 1.0
                col += 1
                rem -= 1
            else:
                assert row + 1 < dim, "fractional remainder reached the last row"
                x = rem
                top = math.sqrt(float(x / 2))
                bottom = math.sqrt(float(1 - x / 2))
                t[row, col] = top
                t[row, col + 1] = top
                t[row + 1, col] = bottom
                t[row + 1, col + 1] = -bottom
                col += 2
                carry = 2 - x
                rem = Fraction(0)
    assert col == count and carry == 0
    return Frame(t.T)


def tight_completion(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> Frame:
    """Append at most dim-1 vectors along deficient eigendirections to make f tight."""
    values, vectors = numerics.hermitian_eig(fr.frame_operator(f), tol)
    top = float(values[0])
    added = []
    for j in range(1, values.size):
        gap = top - float(values[j])
        if gap > tol.eq_tol * max(top, 1.0):
            added.append(np.sqrt(gap) * vectors[:, j])
    if not added:
        return Frame(f.vectors)
    return Frame(np.vstack([f.vectors, np.array(added)]))


def majorization_feasible(spectrum, norms_squared, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether a frame with the given frame-operator spectrum and squared
    norms exists: partial sums of the norms must stay under those of the
    spectrum, with equal totals."""
    lam = _spectrum_array(spectrum)
    a2 = _norms_squared_array(norms_squared)
    n, m = lam.size, a2.size
    if m < n:
        return False
    total_l = float(lam.sum())
    total_a = float(a2.sum())
    scale = max(1.0, total_l)
    if abs(total_a - total_l) > tol.eq_tol * scale:
        return False
    run_l = np.cumsum(lam)
    run_a = np.cumsum(a2[:n])
    return bool(np.all(run_a <= run_l + tol.eq_tol * scale))


def tight_spec_feasible(norms_squared, dim: int, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether a tight frame for H^dim with the given squared norms exists."""
    a2 = _norms_squared_array(norms_squared)
    if a2.size < dim:
        return False
    total = float(a2.sum())
    return total >= dim * float(a2[0]) - tol.eq_tol * max(1.0, total)


def _hermitian_with_diagonal(values_desc: np.ndarray, targets_desc: np.ndarray) -> np.ndarray:
    """Symmetric matrix with the given spectrum and diagonal (targets sorted
    descending, majorized by the values).

    Walks the targets in order.  For each target t it picks, among the
    not-yet-fixed diagonal entries, the closest value above and the closest
    value below t (no active value lies between them), and applies a plane
    rotation sending one diagonal entry exactly to t.  The rotated partner
    absorbs the leftover, the fixed position drops out, and the active
    diagonal stays diagonal throughout.
    """
    m = targets_desc.size
    a = np.diag(values_desc.astype(np.float64, copy=True))
    active = list(range(m))
    fixed_order = []
    for t in targets_desc:
        diag = [a[i, i] for i in active]
        lo, hi = min(diag), max(diag)
        t_eff = min(max(float(t), lo), hi)
        p = q = -1
        best_above = best_below = None
        for pos in active:
            d = a[pos, pos]
            if d >= t_eff and (best_above is None or d < best_above):
                best_above, p = d, pos
            if d <= t_eff and (best_below is None or d > best_below):
                best_below, q = d, pos
        if p == -1:
            p = q
        if q == -1:
            q = p
        dp, dq = a[p, p], a[q, q]
        if p != q and dp - dq > 0.0:
            c2 = min(max((t_eff - dq) / (dp - dq), 0.0), 1.0)
            c = math.sqrt(c2)
            s = math.sqrt(1.0 - c2)
            colp = a[:, p].copy()
            colq = a[:, q].copy()
            a[:, p] = c * colp + s * colq
            a[:, q] = -s * colp + c * colq
            rowp = a[p, :].copy()
            rowq = a[q, :].copy()
            a[p, :] = c * rowp + s * rowq
            a[q, :] = -s * rowp + c * rowq
            a[p, p] = t_eff
            a[q, q] = dp + dq - t_eff
        fixed_order.append(p)
        active.remove(p)
    out = a[np.ix_(fixed_order, fixed_order)]
    return (out + out.T) / 2.0


def frame_with_spectrum_and_norms(
    spectrum,
    norms_squared,
    field: str = "real",
    tol: ToleranceConfig = DEFAULT_TOL,
) -> Frame:
    """Frame whose frame operator has the given spectrum and whose vector
    norms match the given squared norms (both sorted descending)."""
    lam = _spectrum_array(spectrum)
    a2 = _norms_squared_array(norms_squared)
    if not majorization_feasible(lam, a2, tol):
        raise MajorizationFails(
            "no frame exists with this spectrum/norm pair (partial sum condition fails)"
        )
    padded = np.zeros(a2.size)
    padded[: lam.size] = lam
    gram = _hermitian_with_diagonal(padded, a2)
    f = gramian_factor_frame(gram, lam.size, tol)
    if field == "complex":
        return Frame(f.vectors.astype(np.complex128))
    if field != "real":
        raise ValueError(f"unknown field {field!r}")
    return f


def equal_norm_with_operator(
    spectrum, count: int, field: str = "real", tol: ToleranceConfig = DEFAULT_TOL
) -> Frame:
    """Equal-norm frame of `count` vectors with the prescribed spectrum."""
    lam = _spectrum_array(spectrum)
    if count < lam.size:
        raise MajorizationFails(f"need at least {lam.size} vectors, got {count}")
    a2 = np.full(count, float(lam.sum()) / count)
    return frame_with_spectrum_and_norms(lam, a2, field, tol)


def _seeded_normal(seed: int, shape) -> np.ndarray:
    """Deterministic standard normals: PCG64 uniform bits through Box-Muller.

    Pinned to the PCG64 bit stream plus an explicit transform so the same
    seed reproduces the same frame on any platform.
    """
    gen = np.random.Generator(np.random.PCG64(seed))
    total = int(np.prod(shape))
    pairs = (total + 1) // 2
    u1 = 1.0 - gen.random(pairs)
    u2 = gen.random(pairs)
    radius = np.sqrt(-2.0 * np.log(u1))
    z = np.concatenate([radius * np.cos(2.0 * np.pi * u2), radius * np.sin(2.0 * np.pi * u2)])
    return z[:total].reshape(shape)


def random_parseval(
    dim: int,
    count: int,
    seed: int,
    field: str = "real",
    tol: ToleranceConfig = DEFAULT_TOL,
) -> Frame:
    """Seeded random Parseval frame: orthonormalize the rows of a random
    square matrix and keep the first `dim` coordinate rows."""
    if dim < 1 or count < dim:
        raise ValueError(f"need count >= dim >= 1, got dim={dim}, count={count}")
    if field not in ("real", "complex"):
        raise ValueError(f"unknown field {field!r}")
    for attempt in range(8):
        z = _seeded_normal(seed + attempt, (2, count, count))
        mat = z[0] + 1j * z[1] if field == "complex" else z[0]
        try:
            unitary = numerics.gram_schmidt(mat, tol)
        except DependentInput:  # pragma: no cover - measure-zero event
            continue
        return Frame(unitary[:dim].T)
    raise DependentInput(0, "random draws kept collapsing; seed pathological")  # pragma: no cover


def simplex_frame(dim: int, tol: ToleranceConfig = DEFAULT_TOL) -> Frame:
    """The regular simplex: dim+1 unit vectors in R^dim with pairwise inner
    products -1/dim (an equiangular tight frame)."""
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    n = dim
    ones_dir = np.ones((1, n + 1)) / math.sqrt(n + 1.0)
    basis = numerics.unitary_complete(ones_dir, tol)[1:]
    verts = np.eye(n + 1) - np.ones((n + 1, n + 1)) / (n + 1.0)
    coords = verts @ basis.T
    norms = np.linalg.norm(coords, axis=1)
    return Frame(coords / norms[:, None])


def gramian_factor_frame(gram, rank: int, tol: ToleranceConfig = DEFAULT_TOL) -> Frame:
    """Factor an M x M PSD matrix of rank N into a frame of M vectors in H^N
    whose Gramian it is."""
    values, vectors = numerics.hermitian_eig(gram, tol)
    m = values.size
    if rank < 1 or rank > m:
        raise WrongRank(f"rank must lie in 1..{m}, got {rank}")
    top = max(float(values[0]), 0.0)
    if float(values[-1]) < -tol.rank_tol * max(top, 1.0):
        raise NotPSD(f"matrix has a negative eigenvalue {values[-1]:.3e}")
    numeric_rank = int(np.sum(values > tol.rank_tol * max(top, 1e-300)))
    if numeric_rank != rank:
        raise WrongRank(f"matrix has numerical rank {numeric_rank}, expected {rank}")
    lam = np.maximum(values[:rank], 0.0)
    u = vectors[:, :rank]
    return Frame(u.conj() * np.sqrt(lam)[None, :])


def scale_to_parseval(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> ScalingSolution:
    """Nonnegative scales making {s_i phi_i} Parseval, when they exist.

    Solves for w_i = s_i^2 with sum_i w_i phi_i phi_i* = Id as a
    nonnegative least-squares problem over the vectorized Hermitian
    equations.  A small ridge term pulls toward unit scales so that inputs
    that are already Parseval come back with scales identically one even
    when the system is degenerate; the reported residual is the true
    Frobenius defect of the returned scaling.
    """
    m, n = f.count, f.dim
    outers = np.einsum("ik,il->ikl", f.vectors, f.vectors.conj())
    flat = outers.reshape(m, n * n).T
    eye = np.eye(n).ravel()
    if f.field == "complex":
        design = np.vstack([flat.real, flat.imag])
        b = np.concatenate([eye, np.zeros(n * n)])
    else:
        design = flat
        b = eye
    col_scale = float(np.median(np.linalg.norm(design, axis=0)))
    # The ridge must be strong enough that its pull toward w = 1 clears the
    # active-set solver's gradient tolerance, or degenerate systems come back
    # needlessly sparse; the polish below removes the bias it introduces.
    ridge = 1e-3 * max(col_scale, 1e-300)
    a_aug = np.vstack([design, ridge * np.eye(m)])
    b_aug = np.concatenate([b, ridge * np.ones(m)])
    w, _ = nnls(a_aug, b_aug)

    # Polish on the discovered support: among the support's least-squares
    # minimizers take the one nearest all-ones, provided it stays >= 0.
    support = w > 0.0
    if support.any():
        sub = design[:, support]
        delta, *_ = np.linalg.lstsq(sub, b - sub @ np.ones(int(support.sum())), rcond=None)
        cand = 1.0 + delta
        if np.all(cand >= -1e-12):
            w = np.zeros(m)
            w[support] = np.maximum(cand, 0.0)
    residual = float(np.linalg.norm(design @ w - b))

    # If the biased support missed the true optimum, fall back to the plain
    # problem so the reported residual stays the honest minimum.
    w_plain, _ = nnls(design, b)
    plain_residual = float(np.linalg.norm(design @ w_plain - b))
    if residual > plain_residual + 1e-12 * max(1.0, plain_residual):
        w, residual = w_plain, plain_residual
    return ScalingSolution(residual <= tol.eq_tol, np.sqrt(w), residual)
