"""Finite fields, planes, Hadamard and Steiner designs, validators, exact rank."""

from .fields import FiniteField, field_make, is_prime, prime_power
from .geometry import affine_plane, projective_plane
from .hadamard import UnsupportedOrder, hadamard_design, hadamard_matrix, is_constructible
from .incidence import (
    DesignParams,
    GeometryCheck,
    IncidenceStructure,
    PartialGeometryParams,
    infer_partial_geometry,
    load_incidence_structure,
    parse_incidence_structure,
    save_incidence_structure,
    validate_partial_geometry,
    validate_t_design,
)
from .linalg import rank_and_det
from .resolving import (
    geometry_lines_as_resolving_set,
    resolving_by_rank,
    steiner_blocks_as_resolving_set,
)
from .steiner import steiner_triple_system

__all__ = [
    "DesignParams",
    "FiniteField",
    "GeometryCheck",
    "IncidenceStructure",
    "PartialGeometryParams",
    "UnsupportedOrder",
    "affine_plane",
    "field_make",
    "geometry_lines_as_resolving_set",
    "hadamard_design",
    "hadamard_matrix",
    "infer_partial_geometry",
    "is_constructible",
    "is_prime",
    "load_incidence_structure",
    "parse_incidence_structure",
    "prime_power",
    "projective_plane",
    "rank_and_det",
    "resolving_by_rank",
    "save_incidence_structure",
    "steiner_blocks_as_resolving_set",
    "steiner_triple_system",
    "validate_partial_geometry",
    "validate_t_design",
]
