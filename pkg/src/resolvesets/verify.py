"""Exhaustive resolving-set verification.

A landmark list S resolves a graph when the signature map
``U -> (d(U, X) for X in S)`` is injective on the vertices.  Vertices are
processed as a colex-ordered numpy array and signatures are never stored
whole: the vertex set is partitioned by a few landmarks at a time, each batch
packed into one int64 key per vertex together with the current class label,
and relabelled with ``np.unique``.  Memory stays O(vertices) however many
landmarks there are.

For Kneser graphs of diameter 2 every non-zero distance is 1 (disjoint) or 2
(intersecting), so a first pass uses one bit per landmark; only the vertices
that collide on those bits are re-examined with exact distances.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .exceptions import FormatError, GroundSetMismatch, InstanceTooLarge, ParameterError
from .graphs import Family, GraphInstance, adjacency_lists, bfs_distances_from
from .subsets import KSubset, subset_array, unrank_colex

#: Default vertex budget for formula-oracle verification.
VERIFY_BUDGET = 1 << 23

_KEY_BITS = 62


@dataclass(frozen=True)
class VerificationReport:
    resolved: bool
    witness: tuple[KSubset, KSubset] | None
    landmarks_used: int
    vertices_checked: int
    oracle: str
    instance: str = ""

    def __post_init__(self) -> None:
        if self.resolved != (self.witness is None):
            raise ValueError("a report has a witness exactly when it is unresolved")

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "resolved": self.resolved,
            "witness": None if self.witness is None else [str(u) for u in self.witness],
            "witness_n": None if self.witness is None else self.witness[0].n,
            "landmarks_used": self.landmarks_used,
            "vertices_checked": self.vertices_checked,
            "oracle": self.oracle,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"instance={d['instance']}", f"resolved={str(d['resolved']).lower()}"]
        if self.witness is None:
            lines.append("witness=none")
        else:
            lines.append(f"witness={d['witness'][0]} | {d['witness'][1]}")
            lines.append(f"witness_n={d['witness_n']}")
        lines += [
            f"landmarks_used={self.landmarks_used}",
            f"vertices_checked={self.vertices_checked}",
            f"oracle={self.oracle}",
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        witness = None
        if d.get("witness"):
            n = int(d["witness_n"])
            u, w = (KSubset.parse(t, n) for t in d["witness"])
            witness = (u, w)
        return cls(
            resolved=bool(d["resolved"]),
            witness=witness,
            landmarks_used=int(d["landmarks_used"]),
            vertices_checked=int(d["vertices_checked"]),
            oracle=str(d["oracle"]),
            instance=str(d.get("instance", "")),
        )


def parse_report(text: str) -> VerificationReport:
    """Read a report written by ``to_json`` or ``to_text``."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return VerificationReport.from_dict(json.loads(stripped))
    d: dict = {}
    for lineno, line in enumerate(stripped.splitlines(), 1):
        if not line.strip():
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise FormatError(f"expected key=value, got {line!r}", lineno)
        d[key.strip()] = value.strip()
    try:
        d["resolved"] = {"true": True, "false": False}[d["resolved"]]
        if d.get("witness", "none") == "none":
            d["witness"] = None
        else:
            d["witness"] = [part.strip() for part in d["witness"].split("|")]
    except KeyError as exc:
        raise FormatError(f"missing or malformed field {exc}") from None
    return VerificationReport.from_dict(d)


# ---------------------------------------------------------------------------
# partition refinement


def _refine(labels: np.ndarray, columns: Iterable[np.ndarray], base: int) -> np.ndarray:
    """Split classes by successive columns, packing as many per pass as fit."""
    labels = labels.astype(np.int64, copy=False)
    n_classes = int(labels.max()) + 1 if labels.size else 0
    key = labels.copy()
    capacity = max(n_classes, 1)
    pending = 0
    for col in columns:
        if capacity * base >= 1 << _KEY_BITS:
            _, labels = np.unique(key, return_inverse=True)
            labels = labels.astype(np.int64).ravel()
            n_classes = int(labels.max()) + 1
            if n_classes == labels.size:
                return labels
            key, capacity, pending = labels.copy(), n_classes, 0
        key *= base
        key += col
        capacity *= base
        pending += 1
    if pending:
        _, labels = np.unique(key, return_inverse=True)
        labels = labels.astype(np.int64).ravel()
    return labels


def _first_collision(labels: np.ndarray) -> tuple[int, int] | None:
    """Colex-least colliding pair: least first vertex, then least partner."""
    order = np.argsort(labels, kind="stable")
    sorted_labels = labels[order]
    same_next = sorted_labels[1:] == sorted_labels[:-1]
    if not same_next.any():
        return None
    # a vertex collides when its class has at least one other member; within a
    # class the stable sort keeps ranks increasing, so class heads are minima
    starts = np.flatnonzero(np.r_[True, ~same_next])
    sizes = np.diff(np.r_[starts, labels.size])
    heads = starts[sizes > 1]
    first = order[heads]
    best = int(np.argmin(first))
    h = heads[best]
    return int(order[h]), int(order[h + 1])


def _landmark_masks(g: GraphInstance, landmarks: Sequence[KSubset]) -> np.ndarray:
    masks = np.zeros((len(landmarks), g.n + 1), dtype=np.uint8)
    for i, x in enumerate(landmarks):
        masks[i, list(x.elements())] = 1
    return masks


def _intersections(elements: np.ndarray, mask: np.ndarray) -> np.ndarray:
    s = mask[elements[:, 0]].copy()
    for c in range(1, elements.shape[1]):
        s += mask[elements[:, c]]
    return s


def _check_landmarks(g: GraphInstance, landmarks: Sequence[KSubset]) -> None:
    for x in landmarks:
        if x.n != g.n:
            raise GroundSetMismatch(f"landmark {x} lives on n={x.n}, graph {g} has n={g.n}")
        if x.k != g.k:
            raise ParameterError(f"landmark {x} is not a vertex of {g}")


def signature_classes(
    g: GraphInstance,
    landmarks: Sequence[KSubset],
    *,
    oracle: str = "formula",
    budget: int | None = None,
    elements: np.ndarray | None = None,
) -> np.ndarray:
    """Class label of every vertex (colex rank order) under the landmark signature."""
    _check_landmarks(g, landmarks)
    budget = VERIFY_BUDGET if budget is None else budget
    if g.num_vertices > budget:
        raise InstanceTooLarge(f"{g} has {g.num_vertices} vertices, budget is {budget}")
    n_vertices = g.num_vertices
    labels = np.zeros(n_vertices, dtype=np.int64)
    if not landmarks or n_vertices == 1:
        return labels

    if oracle == "bfs":
        adj = adjacency_lists(g, limit=budget)
        columns = (bfs_distances_from(g, x, adjacency=adj) for x in landmarks)
        return _refine(labels, columns, g.diameter + 1)
    if oracle != "formula":
        raise ParameterError(f"unknown oracle {oracle!r} (formula or bfs)")

    if elements is None:
        elements = subset_array(g.n, g.k)
    masks = _landmark_masks(g, landmarks)
    table = np.array(g.distance_by_intersection, dtype=np.uint8)

    def exact_columns(rows: np.ndarray):
        for m in masks:
            yield table[_intersections(rows, m)]

    if g.family is Family.KNESER and g.diameter == 2:
        adjacency_bits = (
            (_intersections(elements, m) == 0).view(np.uint8) for m in masks
        )
        labels = _refine(labels, adjacency_bits, 2)
        counts = np.bincount(labels)
        clash = np.flatnonzero(counts[labels] > 1)
        if clash.size:
            sub = _refine(labels[clash], exact_columns(elements[clash]), g.diameter + 1)
            labels = labels.copy()
            labels[clash] = labels.max() + 1 + sub
        return labels

    return _refine(labels, exact_columns(elements), g.diameter + 1)


def verify_resolving(
    g: GraphInstance,
    landmarks: Sequence[KSubset],
    oracle: str = "formula",
    *,
    budget: int | None = None,
) -> VerificationReport:
    """Decide exhaustively whether ``landmarks`` resolves ``g``.

    On failure the witness is the colliding pair whose first vertex is
    colex-least, paired with the colex-least vertex sharing its signature.
    """
    landmarks = list(landmarks)
    labels = signature_classes(g, landmarks, oracle=oracle, budget=budget)
    pair = _first_collision(labels)
    witness = None
    if pair is not None:
        witness = (unrank_colex(g.n, g.k, pair[0]), unrank_colex(g.n, g.k, pair[1]))
    return VerificationReport(
        resolved=witness is None,
        witness=witness,
        landmarks_used=len(landmarks),
        vertices_checked=g.num_vertices,
        oracle=oracle,
        instance=str(g),
    )


#: Cap on the number of disjoint set pairs ``verify_johnson_by_pairs`` will scan.
PAIR_BUDGET = 5_000_000


def _disjoint_equal_pairs(n: int, k: int):
    """Disjoint non-empty U, W with |U| = |W| <= k, U holding the least element."""
    for m in range(1, min(k, n // 2) + 1):
        for union in combinations(range(1, n + 1), 2 * m):
            head, rest = union[0], union[1:]
            for u_rest in combinations(rest, m - 1):
                u = (head,) + u_rest
                w = tuple(e for e in rest if e not in u_rest)
                yield u, w


def verify_johnson_by_pairs(n: int, k: int, landmarks: Sequence[KSubset]) -> VerificationReport:
    """Johnson check through disjoint set pairs instead of vertex signatures.

    S resolves J(n,k) iff every pair of disjoint non-empty equal-size sets U, W
    of size at most k is separated by some X in S (|X & U| != |X & W|).  The
    witness, if any, is that (U, W) pair, not a pair of vertices.
    """
    g = GraphInstance.johnson(n, k)
    landmarks = list(landmarks)
    _check_landmarks(g, landmarks)
    total = sum(comb(n, 2 * m) * comb(2 * m, m) // 2 for m in range(1, min(k, n // 2) + 1))
    if total > PAIR_BUDGET:
        raise InstanceTooLarge(f"{total} set pairs for J({n},{k}), budget is {PAIR_BUDGET}")
    incidence = np.zeros((len(landmarks), n + 1), dtype=np.int64)
    for i, x in enumerate(landmarks):
        incidence[i, list(x.elements())] = 1
    checked = 0
    for u, w in _disjoint_equal_pairs(n, k):
        checked += 1
        diff = incidence[:, list(u)].sum(axis=1) - incidence[:, list(w)].sum(axis=1)
        if not diff.any():
            return VerificationReport(
                resolved=False,
                witness=(KSubset.from_elements(u, n), KSubset.from_elements(w, n)),
                landmarks_used=len(landmarks),
                vertices_checked=checked,
                oracle="pairs",
                instance=str(g),
            )
    return VerificationReport(True, None, len(landmarks), checked, "pairs", str(g))


def kneser_set_resolves_johnson(n: int, k: int, landmarks: Sequence[KSubset]) -> bool:
    """Truth of "S resolves K(n,k) implies S resolves J(n,k)" for this S."""
    landmarks = list(landmarks)
    if not verify_resolving(GraphInstance.kneser(n, k), landmarks).resolved:
        return True
    return verify_resolving(GraphInstance.johnson(n, k), landmarks).resolved


# ---------------------------------------------------------------------------
# candidate-set files


def format_candidate_set(g: GraphInstance, landmarks: Sequence[KSubset]) -> str:
    lines = [f"# {g.family.value} {g.n} {g.k}"]
    lines += [str(x) for x in landmarks]
    return "\n".join(lines) + "\n"


def write_candidate_set(path: str | Path, g: GraphInstance, landmarks: Sequence[KSubset]) -> None:
    Path(path).write_text(format_candidate_set(g, landmarks), newline="\n")


def parse_candidate_set(text: str) -> tuple[GraphInstance, list[KSubset]]:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty candidate file", 1)
    header = lines[0].split()
    if len(header) != 4 or header[0] != "#":
        raise FormatError("header must read '# <family> <n> <k>'", 1)
    try:
        g = GraphInstance(Family.parse(header[1]), int(header[2]), int(header[3]))
    except ValueError as exc:
        raise FormatError(f"bad header: {exc}", 1) from None
    landmarks = []
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        try:
            x = KSubset.parse(line, g.n)
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from None
        if x.k != g.k:
            raise FormatError(f"expected {g.k} elements, found {x.k}", lineno)
        landmarks.append(x)
    return g, landmarks


def load_candidate_set(path: str | Path) -> tuple[GraphInstance, list[KSubset]]:
    return parse_candidate_set(Path(path).read_text())
