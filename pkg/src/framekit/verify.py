"""Frame diagnostics: reports, optimality bounds, and structure checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import frames as fr
from . import numerics
from .errors import (
    BadParams,
    ComplexUnsupported,
    DegenerateAlpha,
    NotAFrame,
    NotOrthonormalInput,
    NotUnitNorm,
    TooLarge,
    TooManyPermutations,
)
from .frames import Frame, FrameBounds, FrameReport
from .numerics import _backend
from .tolerances import DEFAULT_TOL, ToleranceConfig


def _offdiag_abs(g: np.ndarray):
    m = g.shape[0]
    mask = ~np.eye(m, dtype=bool)
    return np.abs(g[mask])


def coherence(f: Frame) -> float:
    """Largest |<phi_i, phi_j>| / (|phi_i| |phi_j|) over distinct pairs."""
    norms = np.linalg.norm(f.vectors, axis=1)
    keep = norms > 0.0
    if int(keep.sum()) < 2:
        return 0.0
    unit = f.vectors[keep] / norms[keep][:, None]
    return float(_offdiag_abs(unit.conj() @ unit.T).max())


def is_exact(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True when removing any single vector destroys the spanning property."""
    if not fr.is_frame(f, tol):
        raise NotAFrame("exactness is defined for frames only")
    s = fr.frame_operator(f)
    for i in range(f.count):
        v = f.vectors[i]
        sub = s - np.outer(v, v.conj())
        values, _ = numerics.hermitian_eig((sub + sub.conj().T) / 2.0, tol)
        top = max(float(values[0]), 0.0)
        if top > 0.0 and float(values[-1]) > tol.rank_tol * top:
            return False
    return True


def frame_report(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> FrameReport:
    """One-stop diagnostic summary of a frame."""
    values = fr.frame_spectrum(f, tol)
    top = max(float(values[0]), 0.0)
    low = max(float(values[-1]), 0.0)
    bounds = FrameBounds(low, top)
    norms = np.linalg.norm(f.vectors, axis=1)

    frame_flag = top > 0.0 and float(values[-1]) > tol.rank_tol * top
    tight = frame_flag and (top - low) <= tol.eq_tol * max(top, 1.0)
    parseval = abs(top - 1.0) <= tol.eq_tol and abs(low - 1.0) <= tol.eq_tol
    nmax, nmin = float(norms.max()), float(norms.min())
    equal_norm = (nmax - nmin) <= tol.eq_tol * max(nmax, 1.0)
    unit_norm = abs(nmax - 1.0) <= tol.eq_tol and abs(nmin - 1.0) <= tol.eq_tol

    equi = False
    equi_lines = False
    if f.count >= 2:
        raw = _offdiag_abs(fr.gramian(f))
        equi = unit_norm and float(raw.max() - raw.min()) <= tol.eq_tol
        if np.all(norms > 0.0):
            unit_vectors = f.vectors / norms[:, None]
            scaled = _offdiag_abs(unit_vectors.conj() @ unit_vectors.T)
            equi_lines = float(scaled.max() - scaled.min()) <= tol.eq_tol

    return FrameReport(
        bounds=bounds,
        eigenvalues=values,
        norms=norms,
        redundancy=f.count / f.dim,
        coherence=coherence(f),
        is_frame=frame_flag,
        is_tight=tight,
        is_parseval=parseval,
        is_equal_norm=equal_norm,
        is_unit_norm=unit_norm,
        is_equiangular=equi,
        equiangular_lines=equi_lines,
        is_exact=is_exact(f, tol) if frame_flag else False,
    )


def welch_bound(count: int, dim: int) -> float:
    """Lower bound on the coherence of `count` unit vectors in dimension `dim`."""
    if dim < 1 or count < dim or count < 2:
        raise BadParams(f"need count >= dim >= 1 and count >= 2, got count={count}, dim={dim}")
    return float(np.sqrt((count - dim) / (dim * (count - 1.0))))


def welch_equality_check(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether a unit-norm frame meets the coherence lower bound with equality."""
    norms = np.linalg.norm(f.vectors, axis=1)
    if float(np.max(np.abs(norms - 1.0))) > tol.eq_tol:
        raise NotUnitNorm("vectors must be unit norm")
    return abs(coherence(f) - welch_bound(f.count, f.dim)) <= tol.eq_tol


def gerzon_bound(dim: int, field: str = "real") -> int:
    """Most unit vectors admitting a constant pairwise angle in dimension `dim`."""
    if dim < 1:
        raise BadParams(f"dimension must be >= 1, got {dim}")
    if field == "real":
        return dim * (dim + 1) // 2
    if field == "complex":
        return dim * dim
    raise BadParams(f"unknown field {field!r}")


@dataclass(frozen=True)
class ETFParams:
    dim: int
    count: int
    alpha: float

    def __post_init__(self):
        if self.dim < 1 or self.count <= self.dim:
            raise BadParams(f"need count > dim >= 1, got count={self.count}, dim={self.dim}")
        if self.alpha <= 1.0:
            raise BadParams(f"alpha must exceed 1, got {self.alpha}")


@dataclass(frozen=True)
class ETFCheckItem:
    name: str
    applicable: bool
    passed: bool
    detail: str


@dataclass(frozen=True)
class ETFParamReport:
    items: tuple
    consistent: bool


def _is_integer(x: float, tol: float = 1e-9) -> bool:
    return abs(x - round(x)) <= tol


def _two_squares(k: int) -> bool:
    a = 0
    while a * a <= k:
        b = k - a * a
        root = int(round(np.sqrt(b)))
        if root * root == b:
            return True
        a += 1
    return False


def etf_param_check(params: ETFParams, tol: ToleranceConfig = DEFAULT_TOL) -> ETFParamReport:
    """Arithmetic consistency checks an equiangular tight frame's
    (dim, count, 1/angle) parameters must satisfy."""
    n, m, alpha = params.dim, params.count, params.alpha
    a2 = alpha * alpha
    if abs(a2 - n) <= tol.eq_tol * max(1.0, a2):
        raise DegenerateAlpha(f"alpha^2 = {a2} coincides with the dimension")

    items = []

    expected_m = (a2 - 1.0) * n / (a2 - n)
    items.append(
        ETFCheckItem(
            "count-formula",
            True,
            abs(m - expected_m) <= tol.eq_tol * max(1.0, abs(expected_m)),
            f"count {m} vs (alpha^2-1)dim/(alpha^2-dim) = {expected_m:.12g}",
        )
    )
    items.append(
        ETFCheckItem(
            "alpha-range",
            True,
            alpha <= n + tol.eq_tol and n <= a2 - 2.0 + tol.eq_tol,
            f"alpha={alpha:.12g}, dim={n}, alpha^2-2={a2 - 2.0:.12g}",
        )
    )
    items.append(
        ETFCheckItem(
            "dim-equals-alpha",
            True,
            (abs(alpha - n) <= tol.eq_tol) == (m == n + 1),
            f"dim == alpha is {abs(alpha - n) <= tol.eq_tol}; count == dim+1 is {m == n + 1}",
        )
    )
    items.append(
        ETFCheckItem(
            "dim-at-gerzon",
            True,
            (abs(n - (a2 - 2.0)) <= tol.eq_tol) == (m == n * (n + 1) // 2),
            f"dim == alpha^2-2 is {abs(n - (a2 - 2.0)) <= tol.eq_tol}; "
            f"count == dim(dim+1)/2 is {m == n * (n + 1) // 2}",
        )
    )
    midpoint = m == 2 * n
    alpha_mid = abs(a2 - (2 * n - 1)) <= tol.eq_tol
    mid_ok = (not midpoint and not alpha_mid) or (midpoint and alpha_mid and _two_squares(2 * n - 1))
    items.append(
        ETFCheckItem(
            "midpoint-two-squares",
            True,
            mid_ok,
            f"count == 2 dim is {midpoint}; alpha^2 == 2 dim - 1 is {alpha_mid}",
        )
    )

    generic = m not in (n + 1, 2 * n)
    odd_integer = _is_integer(alpha) and int(round(alpha)) % 2 == 1
    items.append(
        ETFCheckItem("alpha-odd-integer", generic, (not generic) or odd_integer, f"alpha={alpha:.12g}")
    )
    items.append(ETFCheckItem("count-even", generic, (not generic) or m % 2 == 0, f"count={m}"))
    divides = _is_integer((m - 1) / alpha) if alpha else False
    items.append(
        ETFCheckItem(
            "alpha-divides-count-minus-one",
            generic,
            (not generic) or divides,
            f"(count-1)/alpha = {(m - 1) / alpha:.12g}",
        )
    )
    comp_ok = False
    if generic:
        beta = (m - 1) / alpha
        b2 = beta * beta
        comp_dim = m - n
        if abs(b2 - comp_dim) > tol.eq_tol * max(1.0, b2):
            comp_m = (b2 - 1.0) * comp_dim / (b2 - comp_dim)
            comp_ok = abs(m - comp_m) <= max(tol.eq_tol * max(1.0, abs(comp_m)), 1e-6)
    items.append(
        ETFCheckItem(
            "complement-angle",
            generic,
            (not generic) or comp_ok,
            f"beta = (count-1)/alpha = {(m - 1) / alpha:.12g} should parametrize the "
            f"complementary frame in dimension {m - n}",
        )
    )

    consistent = all(item.passed for item in items if item.applicable)
    return ETFParamReport(tuple(items), consistent)


def _spectrum_extremes(s: np.ndarray, tol: ToleranceConfig):
    off_target = tol.eig_offdiag_tol * float(np.linalg.norm(s))
    if np.iscomplexobj(s):
        values, _, _, _ = _backend.jacobi_eig_complex(s, off_target, 60)
    else:
        values, _, _, _ = _backend.jacobi_eig_real(s, off_target, 60)
    return float(values.min()), float(values.max())


def _spans(outers: np.ndarray, indices, dim: int, tol: ToleranceConfig) -> bool:
    if len(indices) < dim:
        return False
    s = outers[indices].sum(axis=0)
    low, top = _spectrum_extremes(s, tol)
    return top > 0.0 and low > tol.rank_tol * top


def _complement_search(f: Frame, subset_limit: int, tol: ToleranceConfig):
    m, n = f.count, f.dim
    if m > subset_limit:
        raise TooLarge(f"exhaustive subset search capped at {subset_limit} vectors, got {m}")
    if m <= 2 * n - 2:
        # With so few vectors some split leaves both halves short of spanning.
        return False, tuple(range((m + 1) // 2))
    outers = np.einsum("ik,il->ikl", f.vectors, f.vectors.conj())
    all_indices = list(range(m))
    # Enumerate splits once each: the last index always sits in the complement.
    for bits in range(2 ** (m - 1)):
        inside = [j for j in range(m - 1) if (bits >> j) & 1]
        outside = [j for j in all_indices if not (j < m - 1 and (bits >> j) & 1)]
        first, second = (outside, inside) if len(outside) >= len(inside) else (inside, outside)
        if _spans(outers, first, n, tol) or _spans(outers, second, n, tol):
            continue
        return False, tuple(inside)
    return True, None


def complement_property(f: Frame, subset_limit: int = 22, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether every split of the frame leaves at least one spanning side."""
    result, _ = _complement_search(f, subset_limit, tol)
    return result


def does_phase_retrieval_real(
    f: Frame, subset_limit: int = 22, tol: ToleranceConfig = DEFAULT_TOL
) -> bool:
    """Whether real measurement magnitudes |<x, phi_i>| pin down x up to sign."""
    if f.field == "complex":
        raise ComplexUnsupported("the magnitude-measurement criterion applies to real frames")
    return complement_property(f, subset_limit, tol)


class SparsityResult(NamedTuple):
    ordering: tuple
    total_nonzeros: int
    basis: np.ndarray


def _nonzero_count(vec: np.ndarray, reference: Optional[np.ndarray], tol: ToleranceConfig) -> int:
    coords = reference.conj() @ vec if reference is not None else vec
    return int(np.sum(np.abs(coords) > tol.eq_tol * float(np.linalg.norm(vec))))


def sparse_gs_search(
    f: Frame,
    reference_basis=None,
    mode: str = "exhaustive",
    tol: ToleranceConfig = DEFAULT_TOL,
) -> SparsityResult:
    """Order the vectors so their orthonormalization is as sparse as possible.

    Sparsity is the total number of coordinates (w.r.t. ``reference_basis``,
    default the standard one) exceeding eq_tol across the orthonormal basis
    produced by gram_schmidt under that ordering.  Exhaustive mode explores
    orderings depth-first with branch-and-bound and is capped at 9 vectors;
    greedy picks the sparsest next vector each step (ties to lowest index).
    """
    numerics.gram_schmidt(f.vectors, tol)  # raises DependentInput with the index
    k = f.count
    reference = None
    if reference_basis is not None:
        reference = np.asarray(reference_basis)
        if reference.shape != (f.dim, f.dim):
            raise ValueError(f"reference basis must be {f.dim}x{f.dim}, got {reference.shape}")
        dev = float(np.linalg.norm(reference @ reference.conj().T - np.eye(f.dim)))
        if dev > tol.eq_tol * f.dim:
            raise NotOrthonormalInput(f"reference basis deviates from orthonormal by {dev:.3e}")

    def extend(basis_rows, index):
        v = f.vectors[index]
        r = numerics._orthogonalize_once(v, basis_rows)
        r = numerics._orthogonalize_once(r, basis_rows)
        e = r / np.linalg.norm(r)
        return e, _nonzero_count(e, reference, tol)

    if mode == "greedy":
        remaining = list(range(k))
        ordering, basis_rows, total = [], [], 0
        while remaining:
            best_index, best_cost, best_vec = None, None, None
            for i in remaining:
                e, cost = extend(basis_rows, i)
                if best_cost is None or cost < best_cost:
                    best_index, best_cost, best_vec = i, cost, e
            ordering.append(best_index)
            remaining.remove(best_index)
            basis_rows.append(best_vec)
            total += best_cost
        return SparsityResult(tuple(ordering), total, np.array(basis_rows))

    if mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")
    if k > 9:
        raise TooManyPermutations(f"exhaustive search is capped at 9 vectors, got {k}")

    best = {"order": None, "total": None}

    def dfs(order, basis_rows, total):
        depth = len(order)
        if best["total"] is not None and total + (k - depth) >= best["total"] and depth < k:
            return
        if depth == k:
            if best["total"] is None or total < best["total"]:
                best["order"], best["total"] = tuple(order), total
            return
        for i in range(k):
            if i in order_set:
                continue
            e, cost = extend(basis_rows, i)
            order.append(i)
            order_set.add(i)
            basis_rows.append(e)
            dfs(order, basis_rows, total + cost)
            basis_rows.pop()
            order_set.remove(i)
            order.pop()

    order_set: set = set()
    dfs([], [], 0)
    ordering = best["order"]
    basis = numerics.gram_schmidt(f.vectors[list(ordering)], tol)
    return SparsityResult(ordering, best["total"], basis)


@dataclass(frozen=True)
class AuditEntry:
    name: str
    applicable: bool
    lhs: float
    rhs: float
    passed: bool


def constants_audit(f: Frame, tol: ToleranceConfig = DEFAULT_TOL) -> list:
    """Numeric identities tying eigenvalues, norms, and bounds together.

    Each entry reports both sides of one identity; identities that assume
    structure (tightness, equal norms, ...) are marked inapplicable rather
    than failed when the structure is absent.
    """
    report = frame_report(f, tol)
    values = report.eigenvalues
    norms2 = report.norms**2
    m, n = f.count, f.dim
    sum_eigs = float(values.sum())
    sum_norms = float(norms2.sum())
    c2 = float(norms2.mean())
    a = report.bounds.upper

    def entry(name, applicable, lhs, rhs):
        ok = abs(lhs - rhs) <= tol.eq_tol * max(1.0, abs(lhs), abs(rhs))
        return AuditEntry(name, applicable, lhs, rhs, applicable and ok)

    audits = [
        entry("eigenvalue-sum-vs-norms", True, sum_eigs, sum_norms),
        entry("equal-norm-trace", report.is_equal_norm, sum_eigs, m * c2),
        entry("tight-trace", report.is_tight, n * a, sum_norms),
        entry("parseval-dimension", report.is_parseval, float(n), sum_norms),
        entry(
            "equal-norm-tight-bound",
            report.is_tight and report.is_equal_norm,
            a,
            m * c2 / n,
        ),
        entry(
            "equal-norm-parseval-count",
            report.is_parseval and report.is_equal_norm,
            float(n),
            m * c2,
        ),
    ]
    return audits
