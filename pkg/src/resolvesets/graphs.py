"""Distance oracles for Johnson graphs J(n,k) and Kneser graphs K(n,k).

Both families have the k-subsets of [n] as vertices and distances that depend
only on the intersection size s = |U & W|:

* Johnson: d = k - s.
* Kneser, n = 2k + b: d = min(2*ceil((k - s)/b), 2*ceil(s/b) + 1), and 0 when U == W.

The breadth-first oracles here ignore those formulas entirely and walk the
graph through its adjacency rule, so they can be used to check them.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

import numpy as np

from .exceptions import GroundSetMismatch, InstanceTooLarge, ParameterError
from .subsets import MAX_N, KSubset, intersection_size, rank_colex, subset_array

#: Default vertex limit for the breadth-first oracle.
BFS_VERTEX_LIMIT = 200_000


class Family(str, enum.Enum):
    JOHNSON = "johnson"
    KNESER = "kneser"

    @classmethod
    def parse(cls, value: "str | Family") -> "Family":
        if isinstance(value, Family):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ParameterError(f"unknown graph family {value!r} (johnson or kneser)") from None


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class GraphInstance:
    family: Family
    n: int
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family.parse(self.family))
        if self.n > MAX_N:
            raise ParameterError(f"n={self.n} exceeds capacity {MAX_N}")
        if self.k < 1:
            raise ParameterError(f"k={self.k} must be at least 1")
        if self.family is Family.JOHNSON and self.n < 2 * self.k:
            raise ParameterError(f"J(n,k) needs n >= 2k, got n={self.n}, k={self.k}")
        if self.family is Family.KNESER and self.n <= 2 * self.k:
            raise ParameterError(
                f"K(n,k) is disconnected unless n > 2k, got n={self.n}, k={self.k}"
            )

    @classmethod
    def johnson(cls, n: int, k: int) -> "GraphInstance":
        return cls(Family.JOHNSON, n, k)

    @classmethod
    def kneser(cls, n: int, k: int) -> "GraphInstance":
        return cls(Family.KNESER, n, k)

    @property
    def b(self) -> int:
        return self.n - 2 * self.k

    @property
    def is_odd_graph(self) -> bool:
        return self.family is Family.KNESER and self.n == 2 * self.k + 1

    @property
    def num_vertices(self) -> int:
        return comb(self.n, self.k)

    @cached_property
    def distance_by_intersection(self) -> tuple[int, ...]:
        """``table[s]`` is the distance between two vertices meeting in s points."""
        if self.family is Family.JOHNSON:
            return tuple(self.k - s for s in range(self.k + 1))
        k, b = self.k, self.b
        table = [min(2 * _ceil_div(k - s, b), 2 * _ceil_div(s, b) + 1) for s in range(k)]
        return tuple(table) + (0,)

    @property
    def diameter(self) -> int:
        return diameter(self)

    def __str__(self) -> str:
        letter = "J" if self.family is Family.JOHNSON else "K"
        return f"{letter}({self.n},{self.k})"


def _check_vertex(g: GraphInstance, u: KSubset) -> None:
    if u.n != g.n:
        raise GroundSetMismatch(f"vertex {u} lives on n={u.n}, graph {g} has n={g.n}")
    if u.k != g.k:
        raise ParameterError(f"{u} is not a {g.k}-subset, so not a vertex of {g}")


def johnson_distance(g: GraphInstance, u: KSubset, w: KSubset) -> int:
    if g.family is not Family.JOHNSON:
        raise ParameterError(f"johnson_distance called on {g}")
    _check_vertex(g, u)
    _check_vertex(g, w)
    return g.k - intersection_size(u, w)


def kneser_distance(g: GraphInstance, u: KSubset, w: KSubset) -> int:
    if g.family is not Family.KNESER:
        raise ParameterError(f"kneser_distance called on {g}")
    _check_vertex(g, u)
    _check_vertex(g, w)
    if u == w:
        return 0
    s = intersection_size(u, w)
    return min(2 * _ceil_div(g.k - s, g.b), 2 * _ceil_div(s, g.b) + 1)


def odd_graph_distance(k: int, u: KSubset, w: KSubset) -> int:
    """Distance in K(2k+1, k) from the parity rule.

    d = 2r exactly when |U & W| = k - r, and d = 2r + 1 exactly when
    |U & W| = r.  Each intersection size is hit by one even and at most one
    odd candidate; the graph distance is the smaller of the two.
    """
    if u.n != 2 * k + 1 or w.n != 2 * k + 1:
        raise ParameterError(f"odd graph O_{k + 1} needs n = {2 * k + 1}")
    if u.k != k or w.k != k:
        raise ParameterError(f"vertices of O_{k + 1} are {k}-subsets")
    s = intersection_size(u, w)
    even = 2 * (k - s)
    odd = 2 * s + 1
    return min(even, odd)


def distance(g: GraphInstance, u: KSubset, w: KSubset) -> int:
    if g.family is Family.JOHNSON:
        return johnson_distance(g, u, w)
    return kneser_distance(g, u, w)


def diameter(g: GraphInstance) -> int:
    return max(g.distance_by_intersection)


# ---------------------------------------------------------------------------
# breadth-first reference oracle


def _check_bfs_limit(g: GraphInstance, limit: int | None) -> None:
    limit = BFS_VERTEX_LIMIT if limit is None else limit
    if g.num_vertices > limit:
        raise InstanceTooLarge(
            f"{g} has {g.num_vertices} vertices, above the BFS oracle limit {limit}"
        )


def _neighbours(g: GraphInstance, bits: int) -> list[int]:
    outside = [e for e in range(1, g.n + 1) if not bits >> e & 1]
    if g.family is Family.JOHNSON:
        inside = [e for e in range(1, g.n + 1) if bits >> e & 1]
        return [bits ^ (1 << i) ^ (1 << j) for i in inside for j in outside]
    out = []
    for combo in combinations(outside, g.k):
        v = 0
        for e in combo:
            v |= 1 << e
        out.append(v)
    return out


def bfs_distance(
    g: GraphInstance, u: KSubset, w: KSubset, *, limit: int | None = None
) -> int:
    """Shortest-path distance found by breadth-first search from ``u``."""
    _check_bfs_limit(g, limit)
    _check_vertex(g, u)
    _check_vertex(g, w)
    if u == w:
        return 0
    seen = {u.bits: 0}
    queue = deque([u.bits])
    while queue:
        x = queue.popleft()
        dx = seen[x]
        for y in _neighbours(g, x):
            if y in seen:
                continue
            if y == w.bits:
                return dx + 1
            seen[y] = dx + 1
            queue.append(y)
    raise AssertionError(f"{w} unreachable from {u} in {g}")  # connected by construction


def adjacency_lists(g: GraphInstance, *, limit: int | None = None) -> list[np.ndarray]:
    """Neighbour ranks of every vertex, vertices indexed by colex rank."""
    _check_bfs_limit(g, limit)
    elements = subset_array(g.n, g.k)
    index = {}
    for r, row in enumerate(elements):
        v = 0
        for e in row:
            v |= 1 << int(e)
        index[v] = r
    out = []
    for row in elements:
        v = 0
        for e in row:
            v |= 1 << int(e)
        out.append(np.fromiter((index[y] for y in _neighbours(g, v)), dtype=np.int64))
    return out


def bfs_distances_from(
    g: GraphInstance,
    source: KSubset,
    *,
    limit: int | None = None,
    adjacency: list[np.ndarray] | None = None,
) -> np.ndarray:
    """Distances from ``source`` to every vertex, indexed by colex rank."""
    _check_vertex(g, source)
    adj = adjacency if adjacency is not None else adjacency_lists(g, limit=limit)
    dist = np.full(len(adj), -1, dtype=np.int64)
    start = rank_colex(source)
    dist[start] = 0
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(int(y))
    return dist


def bfs_distance_matrix(g: GraphInstance, *, limit: int | None = None) -> np.ndarray:
    """All-pairs distances by level-synchronous BFS from every vertex at once."""
    adj = adjacency_lists(g, limit=limit)
    n = len(adj)
    a = np.zeros((n, n), dtype=np.float32)
    for x, nbrs in enumerate(adj):
        a[x, nbrs] = 1.0
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n, dtype=np.float32)
    level = 0
    while True:
        level += 1
        reached = (frontier @ a) > 0
        new = reached & (dist < 0)
        if not new.any():
            break
        dist[new] = level
        frontier = new.astype(np.float32)
    return dist
