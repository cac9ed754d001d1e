"""Dense nonnegative least squares (Lawson-Hanson active set).

Solves min ||a x - b||_2 subject to x >= 0 for small dense systems.  The
passive set grows by the most positive gradient coordinate; inner steps
clip variables that would go negative back onto the boundary.
"""

import numpy as np


def nnls(a, b, max_iter=None):
    """Return ``(x, rnorm)`` with x >= 0 minimizing ||a x - b||_2.

    Parameters
    ----------
    a : (m, n) array_like
    b : (m,) array_like
    max_iter : int, optional
        Cap on active-set changes; defaults to 3 * n.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 2 or b.ndim != 1 or a.shape[0] != b.shape[0]:
        raise ValueError(f"incompatible shapes {a.shape} and {b.shape}")
    m, n = a.shape
    if max_iter is None:
        max_iter = 3 * max(n, 1)

    x = np.zeros(n)
    passive = np.zeros(n, dtype=bool)
    resid = b.copy()
    w = a.T @ resid
    gtol = 10.0 * np.finfo(float).eps * max(m, n) * max(float(np.abs(a).max(initial=0.0)), 1.0)

    outer = 0
    while not passive.all() and np.max(np.where(passive, -np.inf, w)) > gtol:
        j = int(np.argmax(np.where(passive, -np.inf, w)))
        passive[j] = True
        while True:
            z = np.zeros(n)
            sol, *_ = np.linalg.lstsq(a[:, passive], b, rcond=None)
            z[passive] = sol
            if np.all(z[passive] > 0.0):
                x = z
                break
            # Step as far toward z as nonnegativity allows, then drop the
            # variables that landed on the boundary.
            blocking = passive & (z <= 0.0)
            steps = x[blocking] / (x[blocking] - z[blocking])
            alpha = float(np.min(steps))
            x = x + alpha * (z - x)
            drop = passive & (x <= 1e-14 * max(float(np.abs(x).max(initial=0.0)), 1.0))
            x[drop] = 0.0
            passive &= ~drop
            if not passive.any():
                break
        resid = b - a @ x
        w = a.T @ resid
        outer += 1
        if outer >= max_iter:
            break
    return x, float(np.linalg.norm(resid))
