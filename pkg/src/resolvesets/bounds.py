"""Exact metric dimension at desk scale, plus closed-form bounds.

The exact solver treats metric dimension as a hitting-set problem: every
unresolved vertex pair must be hit by one landmark that sees the two at
different distances.  Search is depth-first branch-and-bound:

* state: the classes of vertices not yet told apart (singletons dropped);
* branching: the unresolved pair with the fewest allowed resolvers, one child
  per resolver in colex order, each later child forbidding the earlier ones;
* pruning: two counting bounds, ``ceil(log_{D+1} |class|)`` for the largest
  class (D is the diameter) and a greedy packing of pairs with disjoint
  resolver sets.

Resolver sets are Python-int bitsets over vertex ranks.

Optional symmetry reduction (``symmetry=True``; off by default so the plain
search stays easy to audit): Sym(n) acts transitively on k-sets, so some
optimum contains {1..k}.  Its stabiliser has one orbit per intersection size with {1..k}, so
the second landmark is one representative per size t; branch t also forbids
vertices meeting {1..k} in fewer than t points, which earlier branches cover.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .constructions import TOROIDAL_MIN_SIDE, diam3_window
from .designs.fields import MAX_ORDER, prime_power
from .designs.hadamard import is_constructible
from .exceptions import InstanceTooLarge, ParameterError
from .graphs import Family, GraphInstance
from .subsets import KSubset, subset_array, unrank_colex

#: Vertex limit of the exact solver.
SOLVER_LIMIT = 20_000
#: Default per-instance time limit, seconds.
SOLVER_TIMEOUT = 60.0
#: Unresolved pairs examined per node for branching and the packing bound.
PAIR_SCAN = 4000


@dataclass(frozen=True)
class SolveResult:
    dimension: int
    basis: tuple[KSubset, ...]
    nodes_explored: int
    proof: str  # "exhaustive" or "timeout-partial"
    elapsed: float = 0.0

    @property
    def exhaustive(self) -> bool:
        return self.proof == "exhaustive"

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "basis": [str(x) for x in self.basis],
            "nodes_explored": self.nodes_explored,
            "proof": self.proof,
            "elapsed": round(self.elapsed, 3),
        }


def distance_matrix(g: GraphInstance) -> np.ndarray:
    """All-pairs distances from the intersection-size formula, colex order."""
    elements = subset_array(g.n, g.k).astype(np.intp)
    inc = np.zeros((elements.shape[0], g.n + 1), dtype=np.float32)
    np.put_along_axis(inc, elements, 1.0, axis=1)
    inter = np.rint(inc @ inc.T).astype(np.intp)
    table = np.array(g.distance_by_intersection, dtype=np.uint8)
    return table[inter]


class _Timeout(Exception):
    pass


class _Optimal(Exception):
    pass


def _levels(size: int, base: int) -> int:
    """Fewest landmarks that can split ``size`` vertices into singletons."""
    need, reach = 0, 1
    while reach < size:
        reach *= base
        need += 1
    return need


def _split(classes: list[tuple[int, ...]], row: np.ndarray) -> list[tuple[int, ...]]:
    out = []
    for cls in classes:
        groups: dict[int, list[int]] = {}
        for v in cls:
            groups.setdefault(int(row[v]), []).append(v)
        out.extend(tuple(grp) for grp in groups.values() if len(grp) > 1)
    return out


def _greedy_indices(dist: np.ndarray, base: int, deadline: float | None) -> list[int]:
    n = dist.shape[0]
    labels = np.zeros(n, dtype=np.int64)
    chosen: list[int] = []
    while True:
        counts = np.bincount(labels)
        live = np.flatnonzero(counts > 1)
        if live.size == 0:
            return chosen
        if deadline is not None and time.monotonic() > deadline:
            raise _Timeout
        remaining = np.zeros(n, dtype=np.int64)
        for lab in live:
            idx = np.flatnonzero(labels == lab)
            sub = dist[:, idx]
            for t in range(base):
                c = (sub == t).sum(axis=1, dtype=np.int64)
                remaining += c * (c - 1) // 2
        x = int(np.argmin(remaining))
        chosen.append(x)
        _, labels = np.unique(labels * base + dist[x], return_inverse=True)
        labels = labels.ravel()


def _check_size(g: GraphInstance, limit: int | None) -> None:
    limit = SOLVER_LIMIT if limit is None else limit
    if g.num_vertices > limit:
        raise InstanceTooLarge(f"{g} has {g.num_vertices} vertices, solver limit is {limit}")


def greedy_resolving_set(g: GraphInstance, *, limit: int | None = None) -> list[KSubset]:
    """Repeatedly add the vertex that resolves the most open pairs (ties: colex-least)."""
    _check_size(g, limit)
    dist = distance_matrix(g)
    return [unrank_colex(g.n, g.k, i) for i in _greedy_indices(dist, g.diameter + 1, None)]


class _Search:
    def __init__(self, dist: np.ndarray, base: int, deadline: float, floor: int):
        self.dist = dist
        self.base = base
        self.deadline = deadline
        self.floor = floor
        self.nodes = 0
        self.best: list[int] = []
        self.best_size = 0
        self._resolvers: dict[tuple[int, int], int] = {}

    def resolvers(self, u: int, v: int) -> int:
        key = (u, v)
        got = self._resolvers.get(key)
        if got is None:
            diff = self.dist[u] != self.dist[v]
            got = int.from_bytes(np.packbits(diff, bitorder="little").tobytes(), "little")
            self._resolvers[key] = got
        return got

    def run(self, classes: list[tuple[int, ...]], chosen: list[int], allowed: int) -> None:
        self.nodes += 1
        if self.nodes & 63 == 0 and time.monotonic() > self.deadline:
            raise _Timeout
        if not classes:
            self.best = list(chosen)
            self.best_size = len(chosen)
            if self.best_size <= self.floor:
                raise _Optimal
            return
        budget = self.best_size - len(chosen) - 1
        if budget <= 0:
            return
        if max(_levels(len(c), self.base) for c in classes) > budget:
            return

        pairs = []
        for cls in sorted(classes, key=len):
            for i, u in enumerate(cls):
                for v in cls[i + 1:]:
                    hit = self.resolvers(u, v) & allowed
                    if not hit:
                        return
                    pairs.append((hit.bit_count(), u, v, hit))
                if len(pairs) >= PAIR_SCAN:
                    break
            if len(pairs) >= PAIR_SCAN:
                break
        pairs.sort(key=lambda p: (p[0], p[1], p[2]))

        union, packed = 0, 0
        for _, _, _, hit in pairs:
            if not hit & union:
                packed += 1
                union |= hit
                if packed > budget:
                    return

        hit = pairs[0][3]
        local = allowed
        while hit:
            low = hit & -hit
            x = low.bit_length() - 1
            hit ^= low
            if len(chosen) + 1 >= self.best_size:
                break
            local &= ~low
            chosen.append(x)
            self.run(_split(classes, self.dist[x]), chosen, local)
            chosen.pop()


def determining_lower_bound(n: int, k: int) -> int | None:
    """The determining number d when the known closed form applies, else None.

    Applies when n > C(k+1, 2) and some d >= k+1 >= 3 satisfies
    floor((d-1)(k+1)/2) < n-1 <= floor(d(k+1)/2).  The intervals for
    consecutive d tile the integers, so d is unique when it exists.
    """
    if k < 2 or n <= comb(k + 1, 2):
        return None
    d = k + 1
    while (d - 1) * (k + 1) // 2 < n - 1:
        if n - 1 <= d * (k + 1) // 2:
            return d
        d += 1
    return None


def k2_exact(n: int) -> int:
    """Metric dimension of J(n,2) and K(n,2) for n >= 6."""
    if n < 6:
        raise ParameterError(f"the k = 2 closed form needs n >= 6, got n={n}")
    i = n % 3
    return 2 * (n - i) // 3 + i


def exact_metric_dimension(
    g: GraphInstance,
    *,
    timeout: float | None = None,
    limit: int | None = None,
    use_formula_bound: bool = True,
    symmetry: bool = False,
) -> SolveResult:
    """Minimum resolving set by branch-and-bound.

    Seeded with the greedy set as incumbent.  With ``use_formula_bound`` the
    search stops as soon as it meets the determining-number lower bound; turn
    it off to get a solver whose answer does not rely on that formula.
    ``symmetry`` fixes the first two landmarks up to Sym(n) (much faster,
    same dimension; the basis may differ).
    On timeout the best set found so far is returned with
    ``proof="timeout-partial"``.
    """
    _check_size(g, limit)
    start = time.monotonic()
    deadline = start + (SOLVER_TIMEOUT if timeout is None else timeout)
    dist = distance_matrix(g)
    n_vertices = dist.shape[0]
    base = g.diameter + 1
    floor = 1
    if use_formula_bound:
        floor = max(floor, determining_lower_bound(g.n, g.k) or 0)

    search = _Search(dist, base, deadline, floor)
    try:
        incumbent = _greedy_indices(dist, base, deadline)
    except _Timeout:
        incumbent = list(range(n_vertices))
        search.best, search.best_size = incumbent, n_vertices
        return _result(g, search, "timeout-partial", start)
    search.best, search.best_size = sorted(incumbent), len(incumbent)

    proof = "exhaustive"
    if search.best_size > floor:
        try:
            if symmetry:
                _search_from_roots(g, search)
            else:
                search.run([tuple(range(n_vertices))], [], (1 << n_vertices) - 1)
        except _Optimal:
            pass
        except _Timeout:
            proof = "timeout-partial"
    return _result(g, search, proof, start)


def _search_from_roots(g: GraphInstance, search: _Search) -> None:
    dist = search.dist
    n_vertices = dist.shape[0]
    if n_vertices < 3:
        search.run([tuple(range(n_vertices))], [], (1 << n_vertices) - 1)
        return
    # intersection size of every vertex with vertex 0 = {1..k}
    meet = (subset_array(g.n, g.k) <= g.k).sum(axis=1)
    everything = (1 << n_vertices) - 1
    first = _split([tuple(range(n_vertices))], dist[0])
    for t in range(max(0, 2 * g.k - g.n), g.k):
        members = np.flatnonzero(meet == t)
        if members.size == 0 or search.best_size <= 2:
            continue
        w = int(members[0])
        allowed = everything & ~1
        for x in np.flatnonzero(meet < t):
            allowed &= ~(1 << int(x))
        allowed &= ~(1 << w)
        search.run(_split(first, dist[w]), [0, w], allowed)


def _result(g: GraphInstance, search: _Search, proof: str, start: float) -> SolveResult:
    basis = tuple(sorted(unrank_colex(g.n, g.k, i) for i in search.best))
    return SolveResult(
        dimension=len(basis),
        basis=basis,
        nodes_explored=search.nodes,
        proof=proof,
        elapsed=time.monotonic() - start,
    )


# ---------------------------------------------------------------------------
# bound summary


@dataclass(frozen=True)
class BoundRecord:
    name: str
    value: int | None
    direction: str  # "upper", "lower" or "exact"
    source: str
    applicable: bool
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "direction": self.direction,
            "source": self.source,
            "applicable": self.applicable,
            "reason": self.reason,
        }


def _rec(name, direction, source, value=None, reason=""):
    return BoundRecord(name, value, direction, source, value is not None, reason)


def _prime_power_root(n: int, power: int) -> int | None:
    q = round(n ** (1 / power))
    for cand in (q - 1, q, q + 1):
        if cand >= 2 and cand**power == n and prime_power(cand):
            return cand
    return None


def _toroidal_sides(n: int, k: int) -> tuple[int, int] | None:
    least = TOROIDAL_MIN_SIDE.get(k)
    if least is None:
        return None
    a = least
    while a * a <= n:
        if n % a == 0 and n // a >= least:
            return a, n // a
        a += 1
    return None


def bound_table(family: str | Family, n: int, k: int) -> list[BoundRecord]:
    """Every bound row for (family, n, k), with the reason when one does not apply."""
    g = GraphInstance(Family.parse(family), n, k)
    johnson = g.family is Family.JOHNSON
    out: list[BoundRecord] = []

    if k == 2 and n >= 6:
        out.append(_rec("k2-exact", "exact", "exact values for k = 2, by n mod 3", k2_exact(n)))
    else:
        out.append(_rec("k2-exact", "exact", "exact values for k = 2, by n mod 3",
                        reason="needs k = 2 and n >= 6"))

    src = "partition of [n] into (k+1)-sets"
    if johnson:
        if k >= 2:
            out.append(_rec("johnson-partition", "upper", src, k * (n + 1) // (k + 1)))
        else:
            out.append(_rec("johnson-partition", "upper", src, reason="needs k >= 2"))
    elif g.is_odd_graph and k >= 2:
        out.append(_rec("odd-graph-partition", "upper", src + " (odd graph shares J(2k+1,k) bound)", 2 * k))
    else:
        out.append(_rec("odd-graph-partition", "upper", src, reason="needs K(2k+1,k)"))

    if not johnson:
        src = "partition of [n] into (2k-1)-sets"
        if k >= 2:
            out.append(_rec("kneser-partition", "upper", src, -(-n // (2 * k - 1)) * (comb(2 * k - 1, k) - 1)))
        else:
            out.append(_rec("kneser-partition", "upper", src, reason="needs k >= 2"))
        lo, hi = diam3_window(k)
        src = "two overlapping windows, diameter-3 Kneser graphs"
        if lo <= n <= hi:
            out.append(_rec("kneser-diam3", "upper", src, 2 * comb(n - k, k)))
        else:
            out.append(_rec("kneser-diam3", "upper", src, reason=f"needs {lo} <= n <= {hi}"))

    src = "k-set system with invertible incidence matrix"
    if johnson and k >= 2:
        out.append(_rec("matrix", "upper", src, n))
    elif g.is_odd_graph and k >= 2:
        out.append(_rec("matrix", "upper", src + " (odd graph equals J(2k+1,k))", n))
    else:
        out.append(_rec("matrix", "upper", src, reason="Johnson graphs and odd graphs with k >= 2 only"))

    src = "projective plane of order q as symmetric design"
    q = k - 1
    if johnson and q >= 2 and n == q * q + q + 1 and prime_power(q) and q <= MAX_ORDER:
        out.append(_rec("projective-plane", "upper", src, n))
    else:
        out.append(_rec("projective-plane", "upper", src,
                        reason="needs J(q^2+q+1, q+1) with q a prime power <= 64"))

    src = "Hadamard (4m-1, 2m-1, m-1) design"
    if (n + 1) % 4 == 0 and k == (n - 1) // 2 and n >= 7 and is_constructible(n + 1):
        out.append(_rec("hadamard-design", "upper", src, n))
    else:
        out.append(_rec("hadamard-design", "upper", src,
                        reason="needs (n,k) = (4m-1, 2m-1) with an order-4m Hadamard matrix in reach"))

    src = "Steiner system S(k-1,k,n)"
    if johnson:
        out.append(_rec("steiner-system", "upper", src, reason="Kneser graphs only"))
    elif k != 3:
        out.append(_rec("steiner-system", "upper", src, reason="only Steiner triple systems (k = 3) are built"))
    elif n % 6 not in (1, 3) or n < 13:
        out.append(_rec("steiner-system", "upper", src, reason="needs n = 1, 3 (mod 6) and n >= 13"))
    else:
        out.append(_rec("steiner-system", "upper", src, n * (n - 1) // 6))

    src = "lines of the affine plane of order q"
    q = k
    if not johnson and q >= 3 and n == q * q and prime_power(q) and q <= MAX_ORDER:
        out.append(_rec("affine-plane", "upper", src, q * (q + 1)))
    else:
        out.append(_rec("affine-plane", "upper", src, reason="needs K(q^2, q), q >= 3 a prime power"))

    src = "straight k-paths of a toroidal grid"
    sides = None if johnson else _toroidal_sides(n, k)
    if sides:
        out.append(_rec("toroidal", "upper", src + f" C_{sides[0]} x C_{sides[1]}", 2 * n))
    else:
        out.append(_rec("toroidal", "upper", src,
                        reason="needs K(ab, k), k in 4..6, a and b at least 10/13/16"))

    d = determining_lower_bound(n, k)
    src = "determining number (base size of Sym(n) on k-sets)"
    if d is not None:
        out.append(_rec("determining-number", "lower", src, d))
    else:
        out.append(_rec("determining-number", "lower", src,
                        reason="closed form needs n > C(k+1,2) and a solution d >= k+1"))
    return out


def format_bound_table(records: list[BoundRecord]) -> str:
    rows = [("name", "direction", "value", "source / reason")]
    for r in records:
        rows.append((r.name, r.direction, "-" if r.value is None else str(r.value),
                     r.source if r.applicable else f"n/a: {r.reason}"))
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    lines = [
        f"{a:<{widths[0]}}  {b:<{widths[1]}}  {c:>{widths[2]}}  {d}" for a, b, c, d in rows
    ]
    return "\n".join(lines) + "\n"
