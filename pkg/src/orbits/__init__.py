"""Orbits of the rank-two reflection groups A2, C2, G2, H2 and their products."""
from .decomposition import Decomposition, Term
from .errors import DomainError, InconsistencyError
from .formulas import decompose_formula, raw_terms
from .groups import (
    GroupId, Point, congruence, negate_orbit_dominant, orbit_points, orbit_size, reflect,
    to_dominant,
)
from .limits import LimitSpec, continuity_check, orbit_limit, product_limit
from .oracle import decompose_oracle
from .scalar import TAU, Scalar, parse_scalar
from .special import special_case

__version__ = "0.1.0"

__all__ = [
    "Decomposition", "Term", "DomainError", "InconsistencyError", "decompose_formula",
    "raw_terms", "GroupId", "Point", "congruence", "negate_orbit_dominant", "orbit_points",
    "orbit_size", "reflect", "to_dominant", "LimitSpec", "continuity_check", "orbit_limit",
    "product_limit", "decompose_oracle", "TAU", "Scalar", "parse_scalar", "special_case",
    "__version__",
]
