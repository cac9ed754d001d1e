# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Cyclic Jacobi eigendecomposition kernels (compiled backend).

Same contract as framekit._jacobi_py; see that module for the rotation
derivation.  Kept to plain element loops so the C the compiler sees is a
pair of tight BLAS-1 style updates per rotation.
"""

import numpy as np

from libc.math cimport fabs, hypot, sqrt

BACKEND = "cython"


cdef double _offdiag_norm_real(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += a[i, j] * a[i, j]
    return sqrt(acc)


cdef double _offdiag_norm_complex(double[:, :, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += a[i, j, 0] * a[i, j, 0] + a[i, j, 1] * a[i, j, 1]
    return sqrt(acc)


cdef inline double _tangent(double tau) noexcept nogil:
    if tau >= 0.0:
        return -1.0 / (tau + sqrt(1.0 + tau * tau))
    return 1.0 / (-tau + sqrt(1.0 + tau * tau))


def jacobi_eig_real(a_in, double off_target, int max_sweeps):
    a_arr = np.array(a_in, dtype=np.float64, order="C")
    cdef double[:, ::1] a = a_arr
    cdef Py_ssize_t n = a.shape[0]
    v_arr = np.eye(n)
    cdef double[:, ::1] v = v_arr
    cdef double skip = 0.0
    if n > 0:
        skip = off_target / (10.0 * n)
    cdef int sweeps = 0
    cdef Py_ssize_t p, q, k
    cdef double apq, r, ph, tau, t, c, s, akp, akq
    while sweeps < max_sweeps:
        if _offdiag_norm_real(a, n) <= off_target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = fabs(apq)
                if r <= skip:
                    continue
                ph = apq / r
                tau = (a[q, q] - a[p, p]) / (2.0 * r)
                t = _tangent(tau)
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp + s * ph * akq
                    a[k, q] = -s * ph * akp + c * akq
                for k in range(n):
                    akp = a[p, k]
                    akq = a[q, k]
                    a[p, k] = c * akp + s * ph * akq
                    a[q, k] = -s * ph * akp + c * akq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    akp = v[k, p]
                    akq = v[k, q]
                    v[k, p] = c * akp + s * ph * akq
                    v[k, q] = -s * ph * akp + c * akq
        sweeps += 1
    converged = _offdiag_norm_real(a, n) <= off_target
    return np.diag(a_arr).copy(), v_arr, sweeps, bool(converged)


def jacobi_eig_complex(a_in, double off_target, int max_sweeps):
    # The complex planes are processed as an interleaved (n, n, 2) real
    # array, with one rounding per written operation, mirroring the NumPy
    # fallback expression for expression so both backends agree bitwise.
    a_arr = np.array(a_in, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = a_arr.shape[0]
    v_arr = np.eye(n, dtype=np.complex128)
    cdef double[:, :, ::1] a = a_arr.view(np.float64).reshape(n, n, 2)
    cdef double[:, :, ::1] v = v_arr.view(np.float64).reshape(n, n, 2)
    cdef double skip = 0.0
    if n > 0:
        skip = off_target / (10.0 * n)
    cdef int sweeps = 0
    cdef Py_ssize_t p, q, k
    cdef double r, phr, phi, tau, t, c, s, spr, spi
    cdef double upre, upim, wqre, wqim
    while sweeps < max_sweeps:
        if _offdiag_norm_complex(a, n) <= off_target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                r = hypot(a[p, q, 0], a[p, q, 1])
                if r <= skip:
                    continue
                phr = a[p, q, 0] / r
                phi = a[p, q, 1] / r
                tau = (a[q, q, 0] - a[p, p, 0]) / (2.0 * r)
                t = _tangent(tau)
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                spr = s * phr
                spi = s * phi
                for k in range(n):
                    upre = a[k, p, 0]
                    upim = a[k, p, 1]
                    wqre = a[k, q, 0]
                    wqim = a[k, q, 1]
                    a[k, p, 0] = c * upre + (spr * wqre + spi * wqim)
                    a[k, p, 1] = c * upim + (spr * wqim - spi * wqre)
                    a[k, q, 0] = c * wqre - (spr * upre - spi * upim)
                    a[k, q, 1] = c * wqim - (spr * upim + spi * upre)
                for k in range(n):
                    upre = a[p, k, 0]
                    upim = a[p, k, 1]
                    wqre = a[q, k, 0]
                    wqim = a[q, k, 1]
                    a[p, k, 0] = c * upre + (spr * wqre - spi * wqim)
                    a[p, k, 1] = c * upim + (spr * wqim + spi * wqre)
                    a[q, k, 0] = c * wqre - (spr * upre + spi * upim)
                    a[q, k, 1] = c * wqim - (spr * upim - spi * upre)
                a[p, p, 1] = 0.0
                a[q, q, 1] = 0.0
                a[p, q, 0] = 0.0
                a[p, q, 1] = 0.0
                a[q, p, 0] = 0.0
                a[q, p, 1] = 0.0
                for k in range(n):
                    upre = v[k, p, 0]
                    upim = v[k, p, 1]
                    wqre = v[k, q, 0]
                    wqim = v[k, q, 1]
                    v[k, p, 0] = c * upre + (spr * wqre + spi * wqim)
                    v[k, p, 1] = c * upim + (spr * wqim - spi * wqre)
                    v[k, q, 0] = c * wqre - (spr * upre - spi * upim)
                    v[k, q, 1] = c * wqim - (spr * upim + spi * upre)
        sweeps += 1
    converged = _offdiag_norm_complex(a, n) <= off_target
    return np.diag(a_arr).real.copy(), v_arr, sweeps, bool(converged)
