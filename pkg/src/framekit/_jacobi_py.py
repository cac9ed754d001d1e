"""Cyclic Jacobi eigendecomposition, pure NumPy backend.

Reference implementation of the rotation sweeps; the compiled module
``framekit._kernels`` exposes the same two functions with identical
semantics.  Either backend returns ``(values, vectors, sweeps, converged)``
with unsorted eigenvalues and eigenvectors in the matching columns.

A rotation annihilating the (p, q) entry of a Hermitian matrix is built by
splitting off the phase of a_pq and then applying the classical symmetric
2x2 Jacobi rotation: with r = |a_pq|, tau = (a_qq - a_pp) / (2 r), the
tangent t = -sign(tau) / (|tau| + sqrt(1 + tau^2)) solves
t^2 - 2 tau t - 1 = 0, and c = 1/sqrt(1+t^2), s = t*c zero the entry.
"""

import math

import numpy as np

BACKEND = "python"


def _offdiag_norm(a):
    # Sequential accumulation in row-major order; the compiled backend sums
    # in exactly this order, and the two must agree to the last bit.
    n = a.shape[0]
    acc = 0.0
    if np.iscomplexobj(a):
        for i in range(n):
            for j in range(n):
                if i != j:
                    z = a[i, j]
                    acc += z.real * z.real + z.imag * z.imag
    else:
        for i in range(n):
            for j in range(n):
                if i != j:
                    acc += a[i, j] * a[i, j]
    return math.sqrt(acc)


def _tangent(tau):
    if tau >= 0.0:
        return -1.0 / (tau + np.sqrt(1.0 + tau * tau))
    return 1.0 / (-tau + np.sqrt(1.0 + tau * tau))


def jacobi_eig_real(a, off_target, max_sweeps):
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    skip = off_target / (10.0 * n) if n else 0.0
    sweeps = 0
    while sweeps < max_sweeps:
        if _offdiag_norm(a) <= off_target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                ph = apq / r
                tau = (a[q, q] - a[p, p]) / (2.0 * r)
                t = _tangent(tau)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp + s * ph * colq
                a[:, q] = -s * ph * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp + s * ph * rowq
                a[q, :] = -s * ph * rowp + c * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp + s * ph * vq
                v[:, q] = -s * ph * vp + c * vq
        sweeps += 1
    converged = _offdiag_norm(a) <= off_target
    return np.diag(a).copy(), v, sweeps, converged


def jacobi_eig_complex(a, off_target, max_sweeps):
    # All rotation arithmetic runs on separate real/imaginary planes.
    # NumPy's complex multiply fuses operations differently from plain C,
    # so staying in real arithmetic (one rounding per written operation) is
    # what lets the compiled backend reproduce these results exactly.
    a = np.array(a, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    are, aim = a.real, a.imag
    vre, vim = v.real, v.imag
    skip = off_target / (10.0 * n) if n else 0.0
    sweeps = 0
    while sweeps < max_sweeps:
        if _offdiag_norm(a) <= off_target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                r = np.hypot(are[p, q], aim[p, q])
                if r <= skip:
                    continue
                phr = are[p, q] / r
                phi = aim[p, q] / r
                tau = (are[q, q] - are[p, p]) / (2.0 * r)
                t = _tangent(tau)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                spr = s * phr
                spi = s * phi

                upre = are[:, p].copy()
                upim = aim[:, p].copy()
                wqre = are[:, q].copy()
                wqim = aim[:, q].copy()
                are[:, p] = c * upre + (spr * wqre + spi * wqim)
                aim[:, p] = c * upim + (spr * wqim - spi * wqre)
                are[:, q] = c * wqre - (spr * upre - spi * upim)
                aim[:, q] = c * wqim - (spr * upim + spi * upre)

                upre = are[p, :].copy()
                upim = aim[p, :].copy()
                wqre = are[q, :].copy()
                wqim = aim[q, :].copy()
                are[p, :] = c * upre + (spr * wqre - spi * wqim)
                aim[p, :] = c * upim + (spr * wqim + spi * wqre)
                are[q, :] = c * wqre - (spr * upre + spi * upim)
                aim[q, :] = c * wqim - (spr * upim - spi * upre)

                aim[p, p] = 0.0
                aim[q, q] = 0.0
                are[p, q] = 0.0
                aim[p, q] = 0.0
                are[q, p] = 0.0
                aim[q, p] = 0.0

                upre = vre[:, p].copy()
                upim = vim[:, p].copy()
                wqre = vre[:, q].copy()
                wqim = vim[:, q].copy()
                vre[:, p] = c * upre + (spr * wqre + spi * wqim)
                vim[:, p] = c * upim + (spr * wqim - spi * wqre)
                vre[:, q] = c * wqre - (spr * upre - spi * upim)
                vim[:, q] = c * wqim - (spr * upim + spi * upre)
        sweeps += 1
    converged = _offdiag_norm(a) <= off_target
    return np.diag(a).real.copy(), v, sweeps, converged
