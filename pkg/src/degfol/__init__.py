"""Exact analysis of codimension-one foliations on P^n with degenerate Gauss maps."""

__version__ = "0.1.0"

from .polycore import MultiPoly, JetScalar, parse_poly  # noqa: E402
from .forms import OneForm, validate, from_first_integral, pullback_linear  # noqa: E402
from .gauss import generic_rank, fiber_direction, verify_fiber_linearity  # noqa: E402
from .focal import check_focal_theorem  # noqa: E402
from .classify import classify_p3, analyze_p4, detect_tangency_center  # noqa: E402

__all__ = [
    "MultiPoly",
    "JetScalar",
    "parse_poly",
    "OneForm",
    "validate",
    "from_first_integral",
    "pullback_linear",
    "generic_rank",
    "fiber_direction",
    "verify_fiber_linearity",
    "check_focal_theorem",
    "classify_p3",
    "analyze_p4",
    "detect_tangency_center",
]
