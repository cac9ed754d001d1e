"""Shared generators for the test suite (seeded, numpy-only)."""

import math

import numpy as np
import pytest

from framekit import Frame


def random_hermitian(rng, n, complex_field=False):
    a = rng.standard_normal((n, n))
    if complex_field:
        a = a + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2.0


def random_spanning_frame(rng, count, dim, complex_field=False):
    """Random frame of `count` vectors spanning dimension `dim`.

    Draws until the smallest singular value clears a safe margin so the
    frame bounds are comfortably positive.
    """
    while True:
        v = rng.standard_normal((count, dim))
        if complex_field:
            v = v + 1j * rng.standard_normal((count, dim))
        if np.linalg.svd(v, compute_uv=False)[-1] > 1e-3:
            return Frame(v)


def random_orthonormal(rng, n, complex_field=False):
    a = rng.standard_normal((n, n))
    if complex_field:
        a = a + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))[None, :]


@pytest.fixture
def mercedes_benz():
    """Three unit-spaced vectors in the plane forming a tight frame."""
    c = math.sqrt(2.0 / 3.0)
    return Frame(
        c
        * np.array(
            [
                [0.0, 1.0],
                [-math.sqrt(3.0) / 2.0, -0.5],
                [math.sqrt(3.0) / 2.0, -0.5],
            ]
        )
    )
