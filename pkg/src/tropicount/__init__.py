"""Counting proper and admissible interval systems of lattice polygons."""

__version__ = "0.1.0"

from .errors import ConsistencyError, InfeasibleError, ParameterError, ParseError, ResourceLimitError
from .geometry import FAMILIES, PolygonSpec, SigmaProfile, boundary_integer_length, sigma_profile
from .systems import MarkedSystem, ProperSystem, is_admissible, validate_proper

__all__ = [
    "FAMILIES",
    "ConsistencyError",
    "InfeasibleError",
    "MarkedSystem",
    "ParameterError",
    "ParseError",
    "PolygonSpec",
    "ProperSystem",
    "ResourceLimitError",
    "SigmaProfile",
    "boundary_integer_length",
    "is_admissible",
    "sigma_profile",
    "validate_proper",
]
