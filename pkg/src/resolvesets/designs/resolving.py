"""Turning designs and geometries into resolving-set candidates."""

from __future__ import annotations

from typing import Sequence

from ..exceptions import ParameterError
from ..graphs import GraphInstance
from ..subsets import KSubset, incidence_rows
from .incidence import IncidenceStructure, validate_partial_geometry, validate_t_design
from .linalg import rank_and_det


def resolving_by_rank(subsets: Sequence[KSubset], n: int) -> bool:
    """Sufficient test for resolving J(n, k): the incidence matrix has rank n.

    False means the test is inconclusive, not that the set fails to resolve.
    """
    subsets = list(subsets)
    if not subsets:
        return False
    if len({s.k for s in subsets}) != 1:
        raise ParameterError("subsets must all have the same size")
    rank, _ = rank_and_det(incidence_rows(subsets, n))
    return rank == n


def geometry_lines_as_resolving_set(
    ic: IncidenceStructure, s: int, t: int, alpha: int
) -> tuple[list[KSubset], GraphInstance]:
    """Lines of a validated pg(s, t, alpha) with t > s, as landmarks for K(v, s+1)."""
    if t <= s:
        raise ParameterError(
            f"lines resolve K(v, s+1) only when t > s (got s={s}, t={t}); "
            "projective planes (t = s) fail for every order q > 2"
        )
    check = validate_partial_geometry(ic, s, t, alpha)
    if not check:
        raise ParameterError(f"not a pg({s},{t},{alpha}): axiom ({check.failed_axiom}) {check.detail}")
    return list(ic.blocks), GraphInstance.kneser(ic.n_points, s + 1)


def steiner_blocks_as_resolving_set(
    ic: IncidenceStructure, k: int | None = None
) -> tuple[list[KSubset], GraphInstance]:
    """Blocks of an S(k-1, k, n) with n >= 4k - 2, as landmarks for K(n, k)."""
    size = ic.block_size
    if size is None:
        raise ParameterError("blocks are not all the same size")
    k = size if k is None else k
    if size != k:
        raise ParameterError(f"blocks have size {size}, expected {k}")
    n = ic.n_points
    if n < 4 * k - 2:
        raise ParameterError(f"needs n >= 4k - 2 = {4 * k - 2}, got n={n}")
    ok, _ = validate_t_design(ic, k - 1, 1)
    if not ok:
        raise ParameterError(f"blocks do not form a Steiner system S({k - 1},{k},{n})")
    return list(ic.blocks), GraphInstance.kneser(n, k)
