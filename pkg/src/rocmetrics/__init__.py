"""Discriminatory-power metrics for scoring and rating models.

The package computes the Gini accuracy ratio (AR) and its two second-order
companions: the left-hand accuracy ratio (LAR, skill at flagging bad
objects) and the right-hand accuracy ratio (RAR, skill at confirming good
ones).  Metrics can be estimated three ways - from binary default data, from
a calibrated rating-grade table, and analytically from continuous ROC-curve
families - and the estimates compared to validate a model's calibration.
"""

from .curves import (
    BurgtCurve,
    BurgtSweepPoint,
    CurveModel,
    DegenerateCurveError,
    DegenerateTrapezoidError,
    InfeasibleMetricError,
    MirroredCurve,
    PiecewiseLinearCurve,
    TrapezoidDecomposition,
    TriangularCurve,
    burgt_ar,
    burgt_k,
    burgt_preference_sweep,
    lar_integral,
    lar_rar_bounds,
    lauc_integral,
    mirror,
    multipliers,
    rar_integral,
    rauc_integral,
    sample_from_curve,
    solve_triangle_a,
    trapezoid_decomposition,
    triangle_lar,
    triangle_rar,
    unified_multiplier,
)
from .empirical import (
    MetricReport,
    RocPolyline,
    ScoreSample,
    ar_from_cap,
    ar_mann_whitney,
    binary_report,
    cap_curve,
    concordance_credit,
    empirical_roc,
    lar_discrete,
    pd_profile,
    rar_discrete,
    sigma_ar,
    thin,
)
from .imputed import (
    Grade,
    GradeTable,
    ImputedRoc,
    ar_imputed,
    grade_table_from_curve,
    imputed_report,
    imputed_roc,
    lar_imputed,
    rar_imputed,
    sample_from_table,
)
from .validation import ValidationVerdict, classify_preference, validate

__version__ = "0.1.0"

__all__ = [
    "BurgtCurve",
    "BurgtSweepPoint",
    "CurveModel",
    "DegenerateCurveError",
    "DegenerateTrapezoidError",
    "Grade",
    "GradeTable",
    "ImputedRoc",
    "InfeasibleMetricError",
    "MetricReport",
    "MirroredCurve",
    "PiecewiseLinearCurve",
    "RocPolyline",
    "ScoreSample",
    "TrapezoidDecomposition",
    "TriangularCurve",
    "ValidationVerdict",
    "ar_from_cap",
    "ar_imputed",
    "ar_mann_whitney",
    "binary_report",
    "burgt_ar",
    "burgt_k",
    "burgt_preference_sweep",
    "cap_curve",
    "classify_preference",
    "concordance_credit",
    "empirical_roc",
    "grade_table_from_curve",
    "imputed_report",
    "imputed_roc",
    "lar_discrete",
    "lar_imputed",
    "lar_integral",
    "lar_rar_bounds",
    "lauc_integral",
    "mirror",
    "multipliers",
    "pd_profile",
    "rar_discrete",
    "rar_imputed",
    "rar_integral",
    "rauc_integral",
    "sample_from_curve",
    "sample_from_table",
    "sigma_ar",
    "solve_triangle_a",
    "thin",
    "trapezoid_decomposition",
    "triangle_lar",
    "triangle_rar",
    "unified_multiplier",
    "validate",
]
