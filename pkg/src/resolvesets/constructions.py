"""Generic resolving-set constructions for Johnson and Kneser graphs.

Each builder returns a :class:`ConstructionPlan` recording the parts of [n]
it used, the size predicted by the matching bound, and the emitted subsets.
The plain-list functions (``johnson_partition`` etc.) return only the subsets.

Partition constructions drop one k-subset per part.  The choice is not free:
in J(n,2) the set {1, x} from the remainder family cannot separate {1,2} from
{3, x} once {1,2} is dropped, and in K(n,k) dropping {1..k} from both N_1 and
the overlapping part leaves that vertex unseparated.  So Johnson parts drop
their colex-greatest subset, Kneser parts N_1..N_r their colex-least and the
overlapping part its colex-greatest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .exceptions import ParameterError
from .graphs import Family, GraphInstance
from .subsets import GroundSetPartition, KSubset

TOROIDAL_MIN_SIDE = {4: 10, 5: 13, 6: 16}


@dataclass(frozen=True)
class ConstructionPlan:
    method: str
    n: int
    k: int
    family: Family
    predicted_size: int
    subsets: tuple[KSubset, ...]
    partition: GroundSetPartition | None = None
    params: dict = field(default_factory=dict)
    #: sum of the per-part family sizes before removing subsets shared by parts
    family_count: int | None = None

    @property
    def size(self) -> int:
        return len(self.subsets)

    @property
    def instance(self) -> GraphInstance:
        return GraphInstance(self.family, self.n, self.k)


def _subsets_of(part: tuple[int, ...], k: int, n: int, drop: str | None) -> list[KSubset]:
    # combinations() of a sorted part runs in lex order; sort to colex instead
    subs = sorted(KSubset.from_elements(c, n) for c in combinations(part, k))
    if drop == "least":
        return subs[1:]
    if drop == "greatest":
        return subs[:-1]
    return subs


def _dedupe(families: list[list[KSubset]]) -> tuple[KSubset, ...]:
    seen: set[int] = set()
    out = []
    for fam in families:
        for s in fam:
            if s.bits not in seen:
                seen.add(s.bits)
                out.append(s)
    return tuple(out)


def plan_johnson_partition(n: int, k: int) -> ConstructionPlan:
    if k < 2 or n < 2 * k:
        raise ParameterError(f"Johnson partition needs k >= 2 and n >= 2k, got n={n}, k={k}")
    r, j = divmod(n, k + 1)
    parts = [tuple(range(i * (k + 1) + 1, (i + 1) * (k + 1) + 1)) for i in range(r)]
    families = [_subsets_of(p, k, n, "greatest") for p in parts]
    tail = tuple(range(n - j + 1, n + 1))
    if j:
        base = list(range(1, k))
        families.append([KSubset.from_elements(base + [x], n) for x in tail])
        parts.append(tail)
    subsets = _dedupe(families)
    return ConstructionPlan(
        method="johnson_partition",
        n=n,
        k=k,
        family=Family.JOHNSON,
        predicted_size=k * (n + 1) // (k + 1),
        subsets=subsets,
        partition=GroundSetPartition(n, tuple(parts)),
        params={"r": r, "j": j},
        family_count=sum(map(len, families)),
    )


def plan_kneser_partition(n: int, k: int) -> ConstructionPlan:
    if k < 2 or n <= 2 * k:
        raise ParameterError(f"Kneser partition needs k >= 2 and n > 2k, got n={n}, k={k}")
    size = 2 * k - 1
    r, j = divmod(n, size)
    parts = [tuple(range(i * size + 1, (i + 1) * size + 1)) for i in range(r)]
    if j:
        parts.append(tuple(range(1, 2 * k - j)) + tuple(range(n - j + 1, n + 1)))
    families = [_subsets_of(p, k, n, "least") for p in parts[:r]]
    if j:
        families.append(_subsets_of(parts[r], k, n, "greatest"))
    return ConstructionPlan(
        method="kneser_partition",
        n=n,
        k=k,
        family=Family.KNESER,
        predicted_size=-(-n // size) * (comb(size, k) - 1),
        subsets=_dedupe(families),
        partition=GroundSetPartition(n, tuple(parts), overlapping=bool(j)),
        params={"r": r, "j": j},
        family_count=sum(map(len, families)),
    )


def diam3_window(k: int) -> tuple[int, int]:
    """Admissible n for the diameter-3 construction: floor(5k/2) <= n <= 3k-2."""
    return 5 * k // 2, 3 * k - 2


def plan_kneser_diam3(n: int, k: int) -> ConstructionPlan:
    lo, hi = diam3_window(k)
    if not lo <= n <= hi:
        raise ParameterError(
            f"diameter-3 construction for k={k} needs {lo} <= n <= {hi}, got n={n}"
        )
    first = tuple(range(1, n - k + 1))
    second = tuple(range(k + 1, n + 1))
    families = [_subsets_of(first, k, n, None), _subsets_of(second, k, n, None)]
    return ConstructionPlan(
        method="kneser_diam3",
        n=n,
        k=k,
        family=Family.KNESER,
        predicted_size=2 * comb(n - k, k),
        subsets=_dedupe(families),
        partition=GroundSetPartition(n, (first, second), overlapping=True),
        family_count=sum(map(len, families)),
    )


def plan_matrix_basic(n: int, k: int) -> ConstructionPlan:
    """n subsets whose incidence matrix is [[J-I, 0], [B, I]], determinant (-1)^k k.

    Row order matters for the sign: {1..k+1} minus i for i = 1..k+1, then
    {1..k-1, x} for x = k+2..n.
    """
    if k < 2 or n < k + 2:
        raise ParameterError(f"matrix construction needs k >= 2 and n >= k+2, got n={n}, k={k}")
    head = [KSubset.from_elements([e for e in range(1, k + 2) if e != i], n) for i in range(1, k + 2)]
    tail = [KSubset.from_elements(list(range(1, k)) + [x], n) for x in range(k + 2, n + 1)]
    subsets = tuple(head + tail)
    return ConstructionPlan(
        method="matrix_basic",
        n=n,
        k=k,
        family=Family.JOHNSON,
        predicted_size=n,
        subsets=subsets,
        family_count=len(subsets),
    )


def toroidal_element(row: int, col: int, b: int) -> int:
    """Ground element of grid vertex (row, col), both 1-based, row-major."""
    return (row - 1) * b + col


def plan_toroidal(a: int, b: int, k: int) -> ConstructionPlan:
    """All 2ab straight k-paths of the torus C_a x C_b.

    Rows run over C_a and columns over C_b.  Horizontal paths (fixed row,
    ``k`` consecutive columns, wrapping) come first, then vertical ones; both
    are listed by starting vertex in row-major order.
    """
    if k not in TOROIDAL_MIN_SIDE:
        raise ParameterError(
            f"straight paths only resolve K(n,k) for k in 4..6, got k={k}; "
            "for k >= 7 there are vertex pairs no straight path separates"
        )
    least = TOROIDAL_MIN_SIDE[k]
    if a < least or b < least:
        raise ParameterError(f"k={k} needs a, b >= {least}, got a={a}, b={b}")
    n = a * b
    horizontal = [
        KSubset.from_elements([toroidal_element(r, (c - 1 + i) % b + 1, b) for i in range(k)], n)
        for r in range(1, a + 1)
        for c in range(1, b + 1)
    ]
    vertical = [
        KSubset.from_elements([toroidal_element((r - 1 + i) % a + 1, c, b) for i in range(k)], n)
        for r in range(1, a + 1)
        for c in range(1, b + 1)
    ]
    subsets = tuple(horizontal + vertical)
    return ConstructionPlan(
        method="toroidal",
        n=n,
        k=k,
        family=Family.KNESER,
        predicted_size=2 * n,
        subsets=subsets,
        params={"a": a, "b": b},
        family_count=len(subsets),
    )


def toroidal_ground_map(a: int, b: int) -> dict[tuple[int, int], int]:
    return {(r, c): toroidal_element(r, c, b) for r in range(1, a + 1) for c in range(1, b + 1)}


def johnson_partition(n: int, k: int) -> list[KSubset]:
    return list(plan_johnson_partition(n, k).subsets)


def kneser_partition(n: int, k: int) -> list[KSubset]:
    return list(plan_kneser_partition(n, k).subsets)


def kneser_diam3(n: int, k: int) -> list[KSubset]:
    return list(plan_kneser_diam3(n, k).subsets)


def matrix_basic(n: int, k: int) -> list[KSubset]:
    return list(plan_matrix_basic(n, k).subsets)


def toroidal_paths(a: int, b: int, k: int) -> tuple[dict[tuple[int, int], int], list[KSubset]]:
    return toroidal_ground_map(a, b), list(plan_toroidal(a, b, k).subsets)


METHODS = {
    "johnson_partition": plan_johnson_partition,
    "kneser_partition": plan_kneser_partition,
    "kneser_diam3": plan_kneser_diam3,
    "matrix_basic": plan_matrix_basic,
}


def construct(method: str, n: int | None = None, k: int | None = None, *, a: int | None = None,
              b: int | None = None) -> ConstructionPlan:
    """Dispatch by method name (dashes or underscores)."""
    method = method.replace("-", "_")
    if method == "toroidal":
        if a is None or b is None or k is None:
            raise ParameterError("toroidal construction needs a, b and k")
        if n is not None and n != a * b:
            raise ParameterError(f"toroidal grid {a}x{b} has n = {a * b}, not {n}")
        return plan_toroidal(a, b, k)
    if method not in METHODS:
        raise ParameterError(f"unknown construction {method!r}")
    if n is None or k is None:
        raise ParameterError(f"{method} needs n and k")
    return METHODS[method](n, k)
