"""Frame operators, duals, reconstruction, and distances."""

import numpy as np
import pytest

from conftest import random_spanning_frame
from framekit import frames, numerics
from framekit.errors import (
    DimMismatch,
    NotAFrame,
    NotOrthogonalRanges,
    NotParseval,
    ZeroVector,
)
from framekit.frames import Frame


def kernel_vector(f):
    """A unit vector annihilated by the synthesis operator (needs M > N)."""
    t = frames.synthesis_matrix(f)
    _, _, vh = np.linalg.svd(t)
    return vh[-1].conj()


def test_frame_shape_and_field():
    f = Frame(np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]))
    assert (f.dim, f.count, len(f)) == (2, 3, 3)
    assert f.field == "real"
    g = Frame(np.array([[1.0 + 0.0j, 0.0]]))
    assert g.field == "complex"
    with pytest.raises(ValueError):
        Frame(np.zeros((0, 2)))
    with pytest.raises(ValueError):
        Frame(np.zeros(3))


def test_mercedes_benz_is_parseval(mercedes_benz):
    s = frames.frame_operator(mercedes_benz)
    assert np.allclose(s, np.eye(2), atol=1e-14)
    lo, hi = frames.frame_bounds(mercedes_benz)
    assert lo == pytest.approx(1.0, abs=1e-12)
    assert hi == pytest.approx(1.0, abs=1e-12)
    assert frames.is_frame(mercedes_benz)
    # squared norms are dim/count for an equal-norm Parseval family
    assert np.allclose(np.sum(mercedes_benz.vectors**2, axis=1), 2.0 / 3.0)


def test_analysis_synthesis_are_adjoint():
    rng = np.random.default_rng(101)
    for trial in range(20):
        complex_field = bool(trial % 2)
        f = random_spanning_frame(rng, 5, 3, complex_field)
        x = rng.standard_normal(3) + (1j * rng.standard_normal(3) if complex_field else 0)
        c = rng.standard_normal(5) + (1j * rng.standard_normal(5) if complex_field else 0)
        lhs = np.vdot(c, frames.analysis(f, x))
        rhs = np.vdot(frames.synthesize(f, c), x)
        assert lhs == pytest.approx(rhs, abs=1e-10)


def test_frame_operator_factors_through_analysis():
    rng = np.random.default_rng(103)
    f = random_spanning_frame(rng, 6, 4)
    s = frames.frame_operator(f)
    x = rng.standard_normal(4)
    assert np.allclose(s @ x, frames.synthesize(f, frames.analysis(f, x)), atol=1e-12)
    g = frames.gramian(f)
    assert g.shape == (6, 6)
    # Gramian and frame operator share their nonzero spectrum
    eig_s = np.sort(np.linalg.eigvalsh(s))[::-1]
    eig_g = np.sort(np.linalg.eigvalsh(g))[::-1]
    assert np.allclose(eig_g[:4], eig_s, atol=1e-10)
    assert np.allclose(eig_g[4:], 0.0, atol=1e-10)


def test_frame_bounds_are_rayleigh_extremes():
    rng = np.random.default_rng(107)
    f = random_spanning_frame(rng, 7, 3)
    lo, hi = frames.frame_bounds(f)
    for _ in range(50):
        x = rng.standard_normal(3)
        ratio = np.sum(np.abs(frames.analysis(f, x)) ** 2) / (x @ x)
        assert lo - 1e-9 <= ratio <= hi + 1e-9


def test_not_a_frame_when_vectors_do_not_span():
    f = Frame(np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [1.0, 1.0, 0.0]]))
    assert not frames.is_frame(f)
    with pytest.raises(NotAFrame):
        frames.canonical_dual(f)
    with pytest.raises(NotAFrame):
        frames.canonical_parseval(f)


def test_canonical_dual_reconstructs():
    rng = np.random.default_rng(109)
    for trial in range(20):
        complex_field = bool(trial % 2)
        f = random_spanning_frame(rng, 7, 4, complex_field)
        dual = frames.canonical_dual(f)
        x = rng.standard_normal(4) + (1j * rng.standard_normal(4) if complex_field else 0)
        assert np.allclose(frames.synthesize(dual, frames.analysis(f, x)), x, atol=1e-9)
        assert np.allclose(frames.synthesize(f, frames.analysis(dual, x)), x, atol=1e-9)
        assert frames.is_dual_pair(f, dual)
        # dual of the dual returns the original family
        back = frames.canonical_dual(dual)
        assert np.allclose(back.vectors, f.vectors, atol=1e-9)


def test_canonical_dual_operator_is_inverse():
    rng = np.random.default_rng(113)
    f = random_spanning_frame(rng, 6, 3)
    s = frames.frame_operator(f)
    s_dual = frames.frame_operator(frames.canonical_dual(f))
    assert np.allclose(s_dual @ s, np.eye(3), atol=1e-10)


def test_canonical_parseval():
    rng = np.random.default_rng(127)
    for trial in range(10):
        f = random_spanning_frame(rng, 8, 5, bool(trial % 2))
        p = frames.canonical_parseval(f)
        assert np.allclose(frames.frame_operator(p), np.eye(5), atol=1e-10)
        # same span vector by vector: p_i = S^{-1/2} f_i
        root = numerics.matrix_power(frames.frame_operator(f), -0.5)
        assert np.allclose(p.vectors, f.vectors @ root.T, atol=1e-10)


def test_orthonormal_basis_is_self_dual():
    f = Frame(np.eye(4))
    dual = frames.canonical_dual(f)
    assert np.allclose(dual.vectors, f.vectors, atol=1e-14)
    assert frames.is_dual_pair(f, f)


def test_alternate_dual_and_minimal_coefficients():
    rng = np.random.default_rng(131)
    for trial in range(10):
        complex_field = bool(trial % 2)
        f = random_spanning_frame(rng, 6, 3, complex_field)
        k = kernel_vector(f)
        z = rng.standard_normal(3) + (1j * rng.standard_normal(3) if complex_field else 0)
        pert = Frame(np.outer(k.conj(), z))
        g = frames.make_alternate_dual(f, pert)
        assert frames.is_dual_pair(f, g)

        x = rng.standard_normal(3) + (1j * rng.standard_normal(3) if complex_field else 0)
        b = frames.analysis(g, x)
        c = frames.minimal_coefficients(f, x)
        assert np.allclose(frames.synthesize(f, b), x, atol=1e-9)
        assert np.allclose(frames.synthesize(f, c), x, atol=1e-9)
        # any dual's coefficients split into the minimal ones plus an
        # orthogonal remainder, so the norms satisfy Pythagoras
        lhs = np.sum(np.abs(b) ** 2)
        rhs = np.sum(np.abs(c) ** 2) + np.sum(np.abs(b - c) ** 2)
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-12)
        assert np.sum(np.abs(c) ** 2) <= lhs + 1e-12


def test_alternate_dual_rejects_overlapping_ranges():
    rng = np.random.default_rng(137)
    f = random_spanning_frame(rng, 5, 3)
    bad = Frame(rng.standard_normal((5, 3)))
    with pytest.raises(NotOrthogonalRanges):
        frames.make_alternate_dual(f, bad)


def test_minimal_coefficients_match_dual_analysis():
    rng = np.random.default_rng(139)
    f = random_spanning_frame(rng, 7, 4)
    x = rng.standard_normal(4)
    expected = frames.analysis(frames.canonical_dual(f), x)
    assert np.allclose(frames.minimal_coefficients(f, x), expected, atol=1e-11)


def test_apply_operator_conjugates_frame_operator():
    rng = np.random.default_rng(149)
    f = random_spanning_frame(rng, 6, 3)
    op = rng.standard_normal((3, 3)) + 3.0 * np.eye(3)
    g = frames.apply_operator(f, op)
    s = frames.frame_operator(f)
    assert np.allclose(frames.frame_operator(g), op @ s @ op.T, atol=1e-10)
    with pytest.raises(DimMismatch):
        frames.apply_operator(f, np.eye(4))


def test_project_frame(mercedes_benz):
    rng = np.random.default_rng(151)
    f = random_spanning_frame(rng, 6, 4)
    sub = rng.standard_normal((2, 4))
    g = frames.project_frame(f, sub)
    assert g.vectors.shape == (6, 2)
    # inner products agree with the ambient projections, so the subspace
    # coordinates are just a change of basis
    p = numerics.projection_onto_span(sub)
    ambient = f.vectors @ p.T
    assert np.allclose(frames.gramian(g), ambient @ ambient.T, atol=1e-11)
    # a Parseval frame projects to a Parseval frame of the subspace
    line = frames.project_frame(mercedes_benz, np.array([[1.0, 0.0]]))
    assert np.allclose(frames.frame_operator(line), np.eye(1), atol=1e-12)
    with pytest.raises(ZeroVector):
        frames.project_frame(f, np.zeros((1, 4)))


def test_naimark_completion():
    rng = np.random.default_rng(157)
    from framekit import construct

    for trial in range(6):
        field = "complex" if trial % 2 else "real"
        f = construct.random_parseval(3, 7, seed=trial, field=field)
        u = frames.naimark_complete(f)
        assert u.shape == (7, 7)
        assert np.array_equal(u[:3], frames.synthesis_matrix(f).astype(u.dtype))
        assert np.linalg.norm(u @ u.conj().T - np.eye(7)) < 1e-10

    not_parseval = random_spanning_frame(rng, 5, 2)
    with pytest.raises(NotParseval):
        frames.naimark_complete(not_parseval)


def test_frame_distance_and_nearest_equal_norm():
    f = Frame(np.array([[3.0, 0.0], [0.0, 1.0]]))
    g = Frame(np.array([[3.0, 4.0], [0.0, 1.0]]))
    assert frames.frame_distance(f, g) == pytest.approx(16.0)
    with pytest.raises(DimMismatch):
        frames.frame_distance(f, Frame(np.eye(3)))

    eq = frames.nearest_equal_norm(f)
    norms = np.linalg.norm(eq.vectors, axis=1)
    assert np.allclose(norms, 2.0)  # average of 3 and 1
    assert np.allclose(eq.vectors, np.array([[2.0, 0.0], [0.0, 2.0]]))
    with pytest.raises(ZeroVector):
        frames.nearest_equal_norm(Frame(np.array([[1.0, 0.0], [0.0, 0.0]])))


def test_nearest_parseval_minimizes_among_candidates():
    rng = np.random.default_rng(163)
    f = random_spanning_frame(rng, 5, 3)
    best, d = frames.nearest_parseval(f)
    assert np.allclose(frames.frame_operator(best), np.eye(3), atol=1e-10)
    assert d == pytest.approx(frames.frame_distance(f, best), abs=1e-12)
    # random competing Parseval frames never do better
    from framekit import construct

    for seed in range(8):
        other = construct.random_parseval(3, 5, seed=seed)
        assert frames.frame_distance(f, other) >= d - 1e-9


def test_trace_formula_on_parseval(mercedes_benz):
    rng = np.random.default_rng(167)
    op = rng.standard_normal((2, 2))
    lhs, rhs = frames.trace_formula_check(mercedes_benz, op)
    assert lhs == pytest.approx(rhs, abs=1e-12)
    assert lhs == pytest.approx(op[0, 0] + op[1, 1], abs=1e-12)
    f = Frame(np.array([[2.0, 0.0], [0.0, 1.0]]))
    with pytest.raises(NotParseval):
        frames.trace_formula_check(f, op)


def test_frame_spectrum_descending():
    f = Frame(np.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))
    values = frames.frame_spectrum(f)
    assert np.allclose(values, [2.0, 1.0], atol=1e-14)
