"""Acceptance suite: ten gate criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Every criterion recomputes its own reference values (brute-force
oracles, LAPACK cross-checks, frozen matrices) rather than trusting the
library under test.
"""

import math
import time

import numpy as np

from framekit import construct, frames, fusion, numerics, verify
from framekit.frames import Frame
from framekit.fusion import FusionFrame
from framekit.tolerances import DEFAULT_TOL


def _report(number, label, failures, started):
    elapsed = time.perf_counter() - started
    status = "PASS" if not failures else "FAIL"
    detail = "" if not failures else f" — {failures[0]}"
    print(f"{status} criterion {number:2d}: {label} ({elapsed:.2f}s){detail}", flush=True)
    assert not failures, "\n".join(failures)


# ---------------------------------------------------------------- criterion 1

# Sparse unit-norm tight frame for (dim, count) = (4, 11), frozen from an
# independent exact-arithmetic simulation of the greedy block construction.
R38, R58 = math.sqrt(3.0 / 8.0), math.sqrt(5.0 / 8.0)
R28, R68 = math.sqrt(2.0 / 8.0), math.sqrt(6.0 / 8.0)
R18, R78 = math.sqrt(1.0 / 8.0), math.sqrt(7.0 / 8.0)
TETRIS_4_11 = np.array(
    [
        [1.0, 1.0, R38, R38, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, R58, -R58, 1.0, R28, R28, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, R68, -R68, 1.0, R18, R18, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, R78, -R78, 1.0],
    ]
)


def test_criterion_01_spectral_tetris_golden_matrix():
    started = time.perf_counter()
    failures = []

    f = construct.spectral_tetris(4, 11)
    synthesis = frames.synthesis_matrix(f)
    entry_gap = float(np.max(np.abs(synthesis - TETRIS_4_11)))
    if entry_gap > 1e-12:
        failures.append(f"synthesis entries off by {entry_gap:.3g} > 1e-12")

    s = frames.frame_operator(f)
    operator_gap = float(np.max(np.abs(s - (11.0 / 4.0) * np.eye(4))))
    if operator_gap > 1e-9:
        failures.append(f"frame operator off (11/4)I by {operator_gap:.3g} > 1e-9")

    elapsed = time.perf_counter() - started
    if elapsed >= 1.0:
        failures.append(f"construction took {elapsed:.2f}s >= 1s")
    _report(1, "spectral tetris (4, 11) golden matrix, tight operator, runtime", failures, started)


# ---------------------------------------------------------------- criterion 2


def test_criterion_02_random_parseval_suite():
    started = time.perf_counter()
    failures = []
    shapes = np.random.default_rng(20260814)

    for seed in range(100):
        n = int(shapes.integers(1, 9))
        m = int(shapes.integers(n, 25))
        field = "complex" if seed % 2 else "real"
        f = construct.random_parseval(n, m, seed=seed, field=field)

        s = frames.frame_operator(f)
        s_gap = float(np.linalg.norm(s - np.eye(n)))
        if s_gap > 1e-10:
            failures.append(f"seed {seed}: |S - I|_F = {s_gap:.3g} > 1e-10")

        norm_gap = abs(n - float(np.sum(np.abs(f.vectors) ** 2)))
        if norm_gap > 1e-9:
            failures.append(f"seed {seed}: |N - sum norms^2| = {norm_gap:.3g} > 1e-9")

        g = frames.gramian(f)
        idem_gap = float(np.linalg.norm(g @ g - g))
        if idem_gap > 1e-9:
            failures.append(f"seed {seed}: |G^2 - G|_F = {idem_gap:.3g} > 1e-9")

    _report(2, "100 random Parseval frames: S = I, trace identity, Gramian projection", failures, started)


# ---------------------------------------------------------------- criterion 3


def test_criterion_03_canonical_dual_machinery():
    started = time.perf_counter()
    failures = []
    rng = np.random.default_rng(3030)

    produced = 0
    while produced < 100:
        n = int(rng.integers(1, 9))
        m = int(rng.integers(n, 21))
        field = "complex" if produced % 2 else "real"
        vectors = rng.standard_normal((m, n))
        if field == "complex":
            vectors = vectors + 1j * rng.standard_normal((m, n))
        f = Frame(vectors)
        lo, hi = frames.frame_bounds(f)
        if hi <= 0.0 or lo / hi <= 1e-6:
            continue
        produced += 1

        x = rng.standard_normal(n)
        if field == "complex":
            x = x + 1j * rng.standard_normal(n)

        dual = frames.canonical_dual(f)
        rebuilt = frames.synthesis_matrix(f) @ frames.analysis(dual, x)
        rec_gap = float(np.linalg.norm(rebuilt - x) / max(np.linalg.norm(x), 1e-30))
        if rec_gap > 1e-8:
            failures.append(f"frame {produced}: reconstruction error {rec_gap:.3g} > 1e-8")

        plo, phi = frames.frame_bounds(frames.canonical_parseval(f))
        if abs(plo - 1.0) > 1e-8 or abs(phi - 1.0) > 1e-8:
            failures.append(f"frame {produced}: canonical Parseval bounds ({plo}, {phi})")

        # minimal-moment identity against representations shifted into the
        # kernel of the synthesis map
        c = frames.minimal_coefficients(f, x)
        syn = frames.synthesis_matrix(f)
        _, svals, vh = np.linalg.svd(syn, full_matrices=True)
        rank = int(np.sum(svals > 1e-10 * max(svals[0], 1.0)))
        kernel = vh[rank:].conj()
        for _ in range(10):
            mix = rng.standard_normal(kernel.shape[0])
            if field == "complex":
                mix = mix + 1j * rng.standard_normal(kernel.shape[0])
            b = c if kernel.shape[0] == 0 else c + mix @ kernel
            if float(np.linalg.norm(syn @ b - x)) > 1e-8 * max(np.linalg.norm(x), 1.0):
                failures.append(f"frame {produced}: alternate coefficients do not synthesize x")
                continue
            lhs = float(np.sum(np.abs(b) ** 2))
            rhs = float(np.sum(np.abs(c) ** 2) + np.sum(np.abs(b - c) ** 2))
            if abs(lhs - rhs) > 1e-8 * max(1.0, lhs):
                failures.append(f"frame {produced}: moment identity off by {abs(lhs - rhs):.3g}")

    _report(3, "100 random frames: reconstruction, canonical Parseval, moment identity", failures, started)


# ---------------------------------------------------------------- criterion 4


def _partial_sum_oracle(spectrum, norms_squared, eq_tol=1e-9):
    """Brute-force feasibility: sorted partial-sum dominance, equal totals."""
    lam = np.sort(np.asarray(spectrum, dtype=float))[::-1]
    a = np.sort(np.asarray(norms_squared, dtype=float))[::-1]
    if lam.size == 0 or a.size < lam.size:
        return False
    if np.any(lam < 0.0) or np.any(a < 0.0):
        return False
    padded = np.concatenate([lam, np.zeros(a.size - lam.size)])
    slack = eq_tol * max(1.0, float(np.sum(padded)))
    cums_a, cums_l = np.cumsum(a), np.cumsum(padded)
    if abs(cums_a[-1] - cums_l[-1]) > slack:
        return False
    return bool(np.all(cums_a <= cums_l + slack))


def test_criterion_04_schur_horn_construction():
    started = time.perf_counter()
    failures = []
    rng = np.random.default_rng(4040)

    feasible_done = infeasible_done = 0
    while feasible_done < 50 or infeasible_done < 50:
        n = int(rng.integers(1, 7))
        m = int(rng.integers(n, 13))
        flavor = int(rng.integers(0, 3))
        if flavor == 0:
            # spectrum/norms read off an actual random frame: feasible
            vectors = rng.standard_normal((m, n)) + 0.1
            s = vectors.T @ vectors
            spectrum = np.sort(np.linalg.eigvalsh(s))[::-1]
            norms_squared = np.sort(np.sum(vectors**2, axis=1))[::-1]
        elif flavor == 1:
            # equal totals but independently random shapes: usually infeasible
            spectrum = np.sort(rng.uniform(0.1, 3.0, size=n))[::-1]
            norms_squared = rng.uniform(0.1, 3.0, size=m)
            norms_squared *= np.sum(spectrum) / np.sum(norms_squared)
            norms_squared = np.sort(norms_squared)[::-1]
        else:
            # mismatched totals: always infeasible
            spectrum = np.sort(rng.uniform(0.1, 3.0, size=n))[::-1]
            norms_squared = np.sort(rng.uniform(0.1, 3.0, size=m))[::-1]
            if abs(np.sum(spectrum) - np.sum(norms_squared)) < 1e-3:
                continue

        expected = _partial_sum_oracle(spectrum, norms_squared)
        claimed = construct.majorization_feasible(spectrum, norms_squared)
        if claimed != expected:
            failures.append(
                f"feasibility mismatch: library {claimed}, oracle {expected} "
                f"for spectrum {spectrum.tolist()}, norms^2 {norms_squared.tolist()}"
            )
            continue

        if expected and feasible_done < 50:
            feasible_done += 1
            f = construct.frame_with_spectrum_and_norms(spectrum, norms_squared)
            got_spec = np.sort(np.linalg.eigvalsh(frames.frame_operator(f)))[::-1]
            got_norms = np.sort(np.sum(np.abs(f.vectors) ** 2, axis=1))[::-1]
            scale = max(1.0, float(spectrum[0]))
            if float(np.max(np.abs(got_spec - spectrum))) > 1e-8 * scale:
                failures.append(f"spectrum missed: wanted {spectrum.tolist()}, got {got_spec.tolist()}")
            if float(np.max(np.abs(got_norms - norms_squared))) > 1e-8 * scale:
                failures.append(f"norms missed: wanted {norms_squared.tolist()}, got {got_norms.tolist()}")
        elif not expected and infeasible_done < 50:
            infeasible_done += 1

    _report(4, "50 feasible + 50 infeasible spectrum/norm pairs vs partial-sum oracle", failures, started)


# ---------------------------------------------------------------- criterion 5


def test_criterion_05_welch_and_etf_parameters():
    started = time.perf_counter()
    failures = []

    for n in range(1, 7):
        f = construct.simplex_frame(n)
        coh = verify.coherence(f)
        bound = verify.welch_bound(n + 1, n)
        if abs(coh - bound) > 1e-12:
            failures.append(f"simplex({n}): coherence {coh!r} vs Welch bound {bound!r}")
        if not verify.welch_equality_check(f):
            failures.append(f"simplex({n}): equality check refused")
        lo, hi = frames.frame_bounds(f)
        target = (n + 1.0) / n
        if abs(lo - target) > 1e-10 or abs(hi - target) > 1e-10:
            failures.append(f"simplex({n}): bounds ({lo}, {hi}) vs {target}")

    for n, m, alpha in ((2, 3, 2), (3, 4, 3)):
        if m * (alpha * alpha - n) != (alpha * alpha - 1) * n:
            failures.append(f"({n},{m},{alpha}): integer count formula fails")
        report = verify.etf_param_check(verify.ETFParams(n, m, float(alpha)))
        if not report.consistent:
            bad = [item.name for item in report.items if item.applicable and not item.passed]
            failures.append(f"({n},{m},{alpha}): inconsistent parameter report {bad}")

    _report(5, "simplex Welch equality and tight bound, ETF parameter arithmetic", failures, started)


# ---------------------------------------------------------------- criterion 6


def test_criterion_06_complement_property_search():
    started = time.perf_counter()
    failures = []

    mb = Frame(
        math.sqrt(2.0 / 3.0)
        * np.array([[0.0, 1.0], [-math.sqrt(3.0) / 2.0, -0.5], [math.sqrt(3.0) / 2.0, -0.5]])
    )
    cases = [
        ("mercedes-benz", mb, True),
        ("onb R^2", Frame(np.eye(2)), False),
        ("onb R^4", Frame(np.eye(4)), False),
        ("e1,e1,e2", Frame(np.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0]])), False),
    ]
    rng = np.random.default_rng(606)
    for n in (3, 4):
        generic = Frame(rng.standard_normal((2 * n - 1, n)))
        cases.append((f"generic {2 * n - 1} vectors in R^{n}", generic, True))
    cases.append(("random parseval (4, 16)", construct.random_parseval(4, 16, seed=6), True))

    for label, f, expected in cases:
        got = verify.complement_property(f, subset_limit=16)
        if got != expected:
            failures.append(f"{label}: expected {expected}, got {got}")

    elapsed = time.perf_counter() - started
    if elapsed >= 10.0:
        failures.append(f"exhaustive searches took {elapsed:.2f}s >= 10s")
    _report(6, "complement property by exhaustive split search up to 16 vectors", failures, started)


# ---------------------------------------------------------------- criterion 7


def test_criterion_07_naimark_completion():
    started = time.perf_counter()
    failures = []
    shapes = np.random.default_rng(707)

    for trial in range(50):
        n = int(shapes.integers(1, 7))
        m = int(shapes.integers(n, n + 11))
        field = "complex" if trial % 2 else "real"
        f = construct.random_parseval(n, m, seed=trial, field=field)
        u = frames.naimark_complete(f)

        if u.shape != (m, m):
            failures.append(f"trial {trial}: completion shape {u.shape}, wanted ({m}, {m})")
            continue
        gap = float(np.linalg.norm(u.conj().T @ u - np.eye(m)))
        if gap > 1e-10:
            failures.append(f"trial {trial}: |U*U - I|_F = {gap:.3g} > 1e-10")
        if not np.array_equal(u[:n], frames.synthesis_matrix(f)):
            failures.append(f"trial {trial}: first {n} rows differ from synthesis rows")

    _report(7, "50 Parseval frames: unitary Naimark completion keeps synthesis rows", failures, started)


# ---------------------------------------------------------------- criterion 8


def _random_orthonormal(rng, n, complex_field):
    a = rng.standard_normal((n, n))
    if complex_field:
        a = a + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))[None, :]


def test_criterion_08_fusion_frames():
    started = time.perf_counter()
    failures = []

    overlap = FusionFrame(
        [
            (np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]), 1.0),
            (np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]), 1.0),
        ]
    )
    if not np.array_equal(fusion.fusion_operator(overlap), np.diag([1.0, 2.0, 1.0])):
        failures.append("overlapping planes: operator is not exactly diag(1, 2, 1)")
    lo, hi = fusion.fusion_bounds(overlap)
    if abs(lo - 1.0) > 1e-12 or abs(hi - 2.0) > 1e-12:
        failures.append(f"overlapping planes: bounds ({lo}, {hi}) vs (1, 2)")

    rng = np.random.default_rng(808)
    for trial in range(20):
        n = int(rng.integers(2, 7))
        basis = _random_orthonormal(rng, n, bool(trial % 2)).T
        subspaces = []
        expected = 0.0
        for w in rng.uniform(0.5, 2.0, size=int(rng.integers(1, 4))):
            cut = int(rng.integers(1, n))
            subspaces.append((basis[:cut], float(w)))
            subspaces.append((basis[cut:], float(w)))
            expected += float(w) * float(w)
        ff = FusionFrame(subspaces)
        tight_lo, tight_hi = fusion.fusion_bounds(ff)
        value = fusion.tight_redundancy(ff)
        for name, got in (("redundancy", value), ("lower", tight_lo), ("upper", tight_hi)):
            if abs(got - expected) > 1e-10 * max(1.0, expected):
                failures.append(f"tight system {trial}: {name} {got} vs {expected}")

    for trial in range(20):
        n = int(rng.integers(3, 7))
        complex_field = bool(trial % 2)
        subspaces, locals_ = [], []
        for _ in range(int(rng.integers(2, 5))):
            d = int(rng.integers(1, n - 1))
            sub = rng.standard_normal((d, n))
            if complex_field:
                sub = sub + 1j * rng.standard_normal((d, n))
            subspaces.append((sub, float(rng.uniform(0.5, 2.0))))
            k = d + int(rng.integers(1, 3))
            coeffs = rng.standard_normal((k, d))
            if complex_field:
                coeffs = coeffs + 1j * rng.standard_normal((k, d))
            q, _ = np.linalg.qr(sub.conj().T)
            locals_.append(coeffs @ q.conj().T)
        ff = FusionFrame(subspaces, local_frames=locals_)
        report = fusion.local_global_check(ff)
        slack = 1e-9 * max(1.0, report.flattened_upper)
        if report.local_lower * report.fusion_lower > report.flattened_lower + slack:
            failures.append(f"system {trial}: lower inequality violated: {report}")
        if report.flattened_upper > report.local_upper * report.fusion_upper + slack:
            failures.append(f"system {trial}: upper inequality violated: {report}")
        if not report.consistent:
            failures.append(f"system {trial}: local/global report inconsistent: {report}")

    _report(8, "fusion operator exactness, tight redundancy formula, local-global bounds", failures, started)


# ---------------------------------------------------------------- criterion 9


def test_criterion_09_numerics_floor():
    started = time.perf_counter()
    failures = []
    rng = np.random.default_rng(909)

    worst = 0.0
    for trial in range(1000):
        n = int(rng.integers(1, 13))
        a = rng.standard_normal((n, n))
        if trial % 2:
            a = a + 1j * rng.standard_normal((n, n))
        a = (a + a.conj().T) / 2.0
        values, vectors = numerics.hermitian_eig(a)
        residual = float(np.linalg.norm(vectors @ np.diag(values) @ vectors.conj().T - a))
        scale = max(float(np.linalg.norm(a)), 1e-30)
        worst = max(worst, residual / scale)
        if residual > 1e-11 * scale:
            failures.append(f"trial {trial}: residual {residual:.3g} > 1e-11 * |A|_F")
            break

    exponents = (0.5, -0.5, 1.0, 2.0)
    for trial in range(40):
        n = int(rng.integers(1, 9))
        q = _random_orthonormal(rng, n, bool(trial % 2))
        t = q @ np.diag(rng.uniform(0.5, 2.0, size=n)) @ q.conj().T
        t = (t + t.conj().T) / 2.0
        powers = {e: numerics.matrix_power(t, e) for e in exponents}
        for ea in exponents:
            for eb in exponents:
                combined = numerics.matrix_power(t, ea + eb)
                gap = float(np.linalg.norm(powers[ea] @ powers[eb] - combined))
                if gap > 1e-9 * max(1.0, float(np.linalg.norm(combined))):
                    failures.append(f"trial {trial}: T^{ea} T^{eb} != T^{ea + eb} (gap {gap:.3g})")

    _report(
        9,
        f"1000 Hermitian eigendecompositions (worst residual {worst:.2e}) and power semigroup",
        failures,
        started,
    )


# --------------------------------------------------------------- criterion 10


def test_criterion_10_scaling_solver():
    started = time.perf_counter()
    failures = []

    doubled = Frame(np.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))
    solution = construct.scale_to_parseval(doubled)
    if not solution.feasible:
        failures.append("{e1, e1, e2} reported infeasible")
    else:
        scaled = Frame(doubled.vectors * solution.scales[:, None])
        gap = float(np.linalg.norm(frames.frame_operator(scaled) - np.eye(2)))
        if gap > 1e-9:
            failures.append(f"{{e1, e1, e2}} rescaling leaves |S - I|_F = {gap:.3g} > 1e-9")

    sheared = Frame(np.array([[1.0, 0.0], [1.0, 1.0]]))
    solution = construct.scale_to_parseval(sheared)
    if solution.feasible:
        failures.append("{e1, e1+e2} reported feasible")
    elif solution.residual <= 1e-3:
        failures.append(f"{{e1, e1+e2}} residual witness {solution.residual:.3g} <= 1e-3")

    shapes = np.random.default_rng(1010)
    for trial in range(20):
        n = int(shapes.integers(1, 6))
        m = int(shapes.integers(n, n + 9))
        field = "complex" if trial % 2 else "real"
        f = construct.random_parseval(n, m, seed=trial, field=field)
        solution = construct.scale_to_parseval(f)
        if not solution.feasible:
            failures.append(f"Parseval input {trial}: reported infeasible")
        elif float(np.max(np.abs(solution.scales - 1.0))) > 1e-9:
            failures.append(f"Parseval input {trial}: scales stray from 1 by "
                            f"{float(np.max(np.abs(solution.scales - 1.0))):.3g}")

    _report(10, "Parseval rescaling: feasible witness, infeasible residual, fixed points", failures, started)
