"""Finite frame toolkit: constructions, duals, verification, fusion frames.

The heavy eigensolver kernel is compiled when the C extension is available;
`framekit.BACKEND` reports which implementation is active.
"""

from .numerics import (
    BACKEND,
    gram_schmidt,
    hermitian_eig,
    matrix_power,
    operator_norm,
    projection_onto_span,
    unitary_complete,
)
from .tolerances import DEFAULT_TOL, ToleranceConfig
from .frames import (
    Frame,
    FrameBounds,
    analysis,
    canonical_dual,
    canonical_parseval,
    frame_bounds,
    frame_operator,
    frame_spectrum,
    gramian,
    is_dual_pair,
    is_frame,
    make_alternate_dual,
    minimal_coefficients,
    naimark_complete,
    nearest_parseval,
    synthesis_matrix,
    synthesize,
)
from .construct import (
    equal_norm_with_operator,
    frame_with_spectrum_and_norms,
    majorization_feasible,
    random_parseval,
    scale_to_parseval,
    simplex_frame,
    spectral_tetris,
    tight_completion,
    tight_spec_feasible,
)
from .verify import (
    coherence,
    complement_property,
    constants_audit,
    etf_param_check,
    frame_report,
    gerzon_bound,
    sparse_gs_search,
    welch_bound,
    welch_equality_check,
)
from .fusion import (
    FusionFrame,
    fusion_analysis,
    fusion_bounds,
    fusion_operator,
    local_global_check,
    tight_redundancy,
)
from .errors import FramekitError

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DEFAULT_TOL",
    "Frame",
    "FrameBounds",
    "FramekitError",
    "FusionFrame",
    "ToleranceConfig",
    "analysis",
    "canonical_dual",
    "canonical_parseval",
    "coherence",
    "complement_property",
    "constants_audit",
    "equal_norm_with_operator",
    "etf_param_check",
    "frame_bounds",
    "frame_operator",
    "frame_report",
    "frame_spectrum",
    "frame_with_spectrum_and_norms",
    "fusion_analysis",
    "fusion_bounds",
    "fusion_operator",
    "gerzon_bound",
    "gram_schmidt",
    "gramian",
    "hermitian_eig",
    "is_dual_pair",
    "is_frame",
    "local_global_check",
    "majorization_feasible",
    "make_alternate_dual",
    "matrix_power",
    "minimal_coefficients",
    "naimark_complete",
    "nearest_parseval",
    "operator_norm",
    "projection_onto_span",
    "random_parseval",
    "scale_to_parseval",
    "simplex_frame",
    "sparse_gs_search",
    "spectral_tetris",
    "synthesis_matrix",
    "synthesize",
    "tight_completion",
    "tight_redundancy",
    "tight_spec_feasible",
    "unitary_complete",
    "welch_bound",
    "welch_equality_check",
]
