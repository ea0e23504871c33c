"""Resolving sets and metric dimension of Johnson and Kneser graphs."""

from .bounds import (
    BoundRecord,
    SolveResult,
    bound_table,
    determining_lower_bound,
    exact_metric_dimension,
    format_bound_table,
    greedy_resolving_set,
    k2_exact,
)
from .constructions import (
    ConstructionPlan,
    construct,
    johnson_partition,
    kneser_diam3,
    kneser_partition,
    matrix_basic,
    toroidal_paths,
)
from .exceptions import FormatError, GroundSetMismatch, InstanceTooLarge, ParameterError
from .graphs import Family, GraphInstance, bfs_distance, diameter, distance
from .subsets import GroundSetPartition, KSubset, enumerate_k_subsets, rank_colex, unrank_colex
from .verify import (
    VerificationReport,
    kneser_set_resolves_johnson,
    load_candidate_set,
    parse_candidate_set,
    verify_resolving,
    write_candidate_set,
)

__version__ = "0.1.0"

__all__ = [
    "BoundRecord",
    "ConstructionPlan",
    "Family",
    "FormatError",
    "GraphInstance",
    "GroundSetMismatch",
    "GroundSetPartition",
    "InstanceTooLarge",
    "KSubset",
    "ParameterError",
    "SolveResult",
    "VerificationReport",
    "bfs_distance",
    "bound_table",
    "construct",
    "determining_lower_bound",
    "diameter",
    "distance",
    "enumerate_k_subsets",
    "exact_metric_dimension",
    "format_bound_table",
    "greedy_resolving_set",
    "johnson_partition",
    "k2_exact",
    "kneser_diam3",
    "kneser_partition",
    "kneser_set_resolves_johnson",
    "load_candidate_set",
    "matrix_basic",
    "parse_candidate_set",
    "rank_colex",
    "toroidal_paths",
    "unrank_colex",
    "verify_resolving",
    "write_candidate_set",
]
