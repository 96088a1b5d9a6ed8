"""Zero distributions of polynomial sequences from quadratic-denominator generating functions."""

from . import errors
from .classic import (
    NamedSequence,
    SequenceKind,
    SzegoFigure,
    chebyshev_u,
    cube_term_sequence,
    cube_term_zero_check,
    exp_taylor_section,
    fibonacci,
    reciprocal_taylor_seq,
    square_term_sequence,
    square_term_zeros,
    szego_demo,
)
from .limitset import (
    ClassificationReason,
    ExpSumForm,
    ExpSumTerm,
    LimitClassification,
    LimitReport,
    build_expsum,
    convergence_report,
    hausdorff_to_circle,
    limit_circle,
    radial_spread,
    sokal_classify,
)
from .rootfind import (
    Annulus,
    RootSet,
    SolverConfig,
    find_roots,
    kakeya_annulus,
    kakeya_signed,
)
from .seqcore import (
    ArithmeticMode,
    QuadraticGF,
    ZPolynomial,
    expand_closed_form,
    expand_recurrence,
    factorization_identity_residual,
    normalize,
    quad_roots,
    verify_scaling,
)
from .theorems import (
    DiskVerdict,
    TheoremCase,
    classify_case,
    midpoint_exclusion,
    predicted_radius,
    verify_disk,
)

__version__ = "0.1.0"

__all__ = [
    "Annulus",
    "ArithmeticMode",
    "ClassificationReason",
    "DiskVerdict",
    "ExpSumForm",
    "ExpSumTerm",
    "LimitClassification",
    "LimitReport",
    "NamedSequence",
    "QuadraticGF",
    "RootSet",
    "SequenceKind",
    "SolverConfig",
    "SzegoFigure",
    "TheoremCase",
    "ZPolynomial",
    "build_expsum",
    "chebyshev_u",
    "classify_case",
    "convergence_report",
    "cube_term_sequence",
    "cube_term_zero_check",
    "errors",
    "exp_taylor_section",
    "expand_closed_form",
    "expand_recurrence",
    "factorization_identity_residual",
    "fibonacci",
    "find_roots",
    "hausdorff_to_circle",
    "kakeya_annulus",
    "kakeya_signed",
    "limit_circle",
    "midpoint_exclusion",
    "normalize",
    "predicted_radius",
    "quad_roots",
    "radial_spread",
    "reciprocal_taylor_seq",
    "sokal_classify",
    "square_term_sequence",
    "square_term_zeros",
    "szego_demo",
    "verify_disk",
    "verify_scaling",
]
