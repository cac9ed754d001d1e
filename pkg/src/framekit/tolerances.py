"""Shared tolerance configuration.

All comparisons in the package go through a single ToleranceConfig so that
callers (and the CLI ``--tol`` flag) can tighten or loosen every check in one
place.  The three knobs:

* ``eq_tol`` -- relative tolerance for equality of scalars/matrices,
* ``eig_offdiag_tol`` -- convergence target for the Jacobi eigensolver,
  relative to the Frobenius norm of the input,
* ``rank_tol`` -- relative threshold under which singular directions are
  treated as zero (rank decisions, dependence tests).
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class ToleranceConfig:
    eq_tol: float = 1e-9
    eig_offdiag_tol: float = 1e-12
    rank_tol: float = 1e-10

    def __post_init__(self):
        for name in ("eq_tol", "eig_offdiag_tol", "rank_tol"):
            value = getattr(self, name)
            if not (value > 0.0):
                raise ValueError(f"{name} must be positive, got {value!r}")

    def with_eq_tol(self, eq_tol):
        return replace(self, eq_tol=eq_tol)


DEFAULT_TOL = ToleranceConfig()
