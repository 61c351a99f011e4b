"""Lojasiewicz exponents at infinity for plane polynomial gradients and pairs,
computed from Newton-polygon combinatorics with exact nondegeneracy
certification and a numeric Puiseux-branch oracle."""

from .exponents import (
    ExponentResult,
    SixQuantities,
    loj_gradient,
    loj_pair,
    reduction_identities,
    relative_bound,
    six_quantities,
)
from .geometry import (
    Diagram,
    Segment,
    SidePolygon,
    axis_intercept,
    declivity,
    is_exceptional,
    label_edges,
    newton_diagram,
    side_polygon,
    weighted_intercept,
)
from .initial_forms import (
    classify_derivative_polygon,
    initial_form,
    pair_nondegenerate,
    poly_nondegenerate_at_infinity,
    segment_nondegenerate,
)
from .oracle import (
    Branch,
    OracleConfig,
    OracleError,
    branch_leading_terms,
    estimate_loj,
    estimate_relative,
    substitution_degree,
)
from .poly import PolyParseError, SparsePoly, parse_polynomial
from .rational import NEG_INF, POS_INF, ExtRational, GaussianRational
from .svg import render_diagram_svg

__version__ = "1.0.0"

__all__ = [
    "Branch",
    "Diagram",
    "ExponentResult",
    "ExtRational",
    "GaussianRational",
    "NEG_INF",
    "OracleConfig",
    "OracleError",
    "POS_INF",
    "PolyParseError",
    "Segment",
    "SidePolygon",
    "SixQuantities",
    "SparsePoly",
    "axis_intercept",
    "branch_leading_terms",
    "classify_derivative_polygon",
    "declivity",
    "estimate_loj",
    "estimate_relative",
    "initial_form",
    "is_exceptional",
    "label_edges",
    "loj_gradient",
    "loj_pair",
    "newton_diagram",
    "pair_nondegenerate",
    "parse_polynomial",
    "poly_nondegenerate_at_infinity",
    "reduction_identities",
    "relative_bound",
    "render_diagram_svg",
    "segment_nondegenerate",
    "side_polygon",
    "six_quantities",
    "substitution_degree",
    "weighted_intercept",
]
