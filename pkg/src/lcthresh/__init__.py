"""Exact log canonical thresholds via Newton polyhedra, plus the
threshold-set machinery built on top of them."""

from .engine import (
    ThresholdReport,
    check_restriction,
    check_subadditivity,
    lct_diagonal,
    lct_direct_sum,
    lct_newton,
    lct_univariate,
    multiplicity_bounds,
    truncation_bound,
)
from .errors import PolyParseError, ResourceCapExceeded, ValidationFailure
from .newton import Facet, NewtonPolyhedron, diagonal_parameter, face_bound, facets, newton_polyhedron
from .parsing import parse_poly, poly_to_string, variable_names
from .polynomials import Poly, ThresholdValue
from .threshold_sets import (
    AccumulationInterval,
    FamilyCheck,
    GapResult,
    RationalValues,
    ThresholdSetSample,
    accumulation_scan,
    epsilon_candidate,
    family_limit_check,
    gap_search,
    ht1,
    ht2_enumerate,
    sylvester_sequence,
    toric_sample,
)

__all__ = [
    "AccumulationInterval",
    "Facet",
    "FamilyCheck",
    "GapResult",
    "NewtonPolyhedron",
    "Poly",
    "PolyParseError",
    "RationalValues",
    "ResourceCapExceeded",
    "ThresholdReport",
    "ThresholdSetSample",
    "ThresholdValue",
    "ValidationFailure",
    "accumulation_scan",
    "check_restriction",
    "check_subadditivity",
    "diagonal_parameter",
    "epsilon_candidate",
    "face_bound",
    "facets",
    "family_limit_check",
    "gap_search",
    "ht1",
    "ht2_enumerate",
    "lct_diagonal",
    "lct_direct_sum",
    "lct_newton",
    "lct_univariate",
    "multiplicity_bounds",
    "newton_polyhedron",
    "parse_poly",
    "poly_to_string",
    "sylvester_sequence",
    "toric_sample",
    "truncation_bound",
    "variable_names",
]

__version__ = "0.1.0"
