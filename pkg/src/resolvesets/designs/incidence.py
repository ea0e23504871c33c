"""Incidence structures, t-design and partial-geometry validators, file I/O."""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Sequence

import numpy as np

from ..exceptions import FormatError, ParameterError
from ..subsets import KSubset


@dataclass(frozen=True)
class IncidenceStructure:
    """Blocks over the points 1..n_points.

    The matrix orientation is fixed: one row per block, one column per point.
    Point-by-block views are obtained with an explicit ``.T``.
    """

    n_points: int
    blocks: tuple[KSubset, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        for blk in self.blocks:
            if blk.n != self.n_points:
                raise ParameterError(f"block {blk} lives on n={blk.n}, expected {self.n_points}")

    @classmethod
    def from_lists(cls, n_points: int, blocks: Sequence[Sequence[int]]) -> "IncidenceStructure":
        return cls(n_points, tuple(KSubset.from_elements(b, n_points) for b in blocks))

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    @property
    def block_size(self) -> int | None:
        """Common block size, or None when blocks differ in size."""
        sizes = {b.k for b in self.blocks}
        return sizes.pop() if len(sizes) == 1 else None

    @cached_property
    def matrix(self) -> np.ndarray:
        out = np.zeros((self.n_blocks, self.n_points), dtype=np.int64)
        for r, blk in enumerate(self.blocks):
            out[r, [e - 1 for e in blk.elements()]] = 1
        return out

    def dual(self) -> "IncidenceStructure":
        """Swap the roles of points and blocks (transposed matrix)."""
        mt = self.matrix.T
        return IncidenceStructure.from_lists(
            self.n_blocks, [list(np.flatnonzero(row) + 1) for row in mt]
        )

    def to_text(self) -> str:
        lines = [f"# points={self.n_points} blocks={self.n_blocks}"]
        lines += [str(b) for b in self.blocks]
        return "\n".join(lines) + "\n"


def save_incidence_structure(ic: IncidenceStructure, path: str | Path) -> None:
    Path(path).write_text(ic.to_text(), newline="\n")


def parse_incidence_structure(text: str) -> IncidenceStructure:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty file", 1)
    header = lines[0].split()
    try:
        if len(header) != 3 or header[0] != "#":
            raise ValueError
        fields = dict(tok.split("=", 1) for tok in header[1:])
        n_points, n_blocks = int(fields["points"]), int(fields["blocks"])
    except (ValueError, KeyError):
        raise FormatError("header must read '# points=<n> blocks=<b>'", 1) from None
    body = lines[1:]
    if len(body) != n_blocks:
        raise FormatError(
            f"header declares {n_blocks} blocks, file has {len(body)}", len(lines) + 1
        )
    blocks = []
    seen: set[int] = set()
    for lineno, line in enumerate(body, 2):
        try:
            blk = KSubset.parse(line, n_points)
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from None
        if blk.k == 0:
            raise FormatError("empty block", lineno)
        if blk.bits in seen:
            warnings.warn(f"line {lineno}: duplicate block {blk}", stacklevel=2)
        seen.add(blk.bits)
        blocks.append(blk)
    return IncidenceStructure(n_points, tuple(blocks))


def load_incidence_structure(source: str | Path) -> IncidenceStructure:
    return parse_incidence_structure(Path(source).read_text())


# ---------------------------------------------------------------------------
# t-designs


@dataclass(frozen=True)
class DesignParams:
    t: int
    n: int
    k: int
    lam: int
    b: int

    @property
    def symmetric(self) -> bool:
        return self.b == self.n

    @property
    def expected_blocks(self) -> int:
        """Block count forced by the design axioms: lam * C(n,t) / C(k,t)."""
        return self.lam * comb(self.n, self.t) // comb(self.k, self.t)


def validate_t_design(ic: IncidenceStructure, t: int, lam: int) -> tuple[bool, DesignParams]:
    """Whether every t-subset of points lies in exactly ``lam`` blocks."""
    k = ic.block_size
    if k is None:
        raise ParameterError("blocks are not all the same size")
    params = DesignParams(t, ic.n_points, k, lam, ic.n_blocks)
    if not 1 <= t <= k:
        return False, params
    counts: Counter[tuple[int, ...]] = Counter()
    for blk in ic.blocks:
        counts.update(combinations(blk.elements(), t))
    ok = len(counts) == comb(ic.n_points, t) and all(c == lam for c in counts.values())
    if lam == 0:
        ok = not counts
    return ok, params


# ---------------------------------------------------------------------------
# partial geometries


@dataclass(frozen=True)
class PartialGeometryParams:
    s: int
    t: int
    alpha: int

    @property
    def v(self) -> int:
        return (self.s + 1) * (self.s * self.t + self.alpha) // self.alpha

    @property
    def b(self) -> int:
        return (self.t + 1) * (self.s * self.t + self.alpha) // self.alpha

    @property
    def integral(self) -> bool:
        num = self.s * self.t + self.alpha
        return (self.s + 1) * num % self.alpha == 0 and (self.t + 1) * num % self.alpha == 0


@dataclass(frozen=True)
class GeometryCheck:
    ok: bool
    failed_axiom: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_partial_geometry(ic: IncidenceStructure, s: int, t: int, alpha: int) -> GeometryCheck:
    """Check the three pg(s, t, alpha) axioms; report the first one that fails."""
    a = ic.matrix
    line_sizes = a.sum(axis=1)
    if (line_sizes != s + 1).any():
        bad = int(np.flatnonzero(line_sizes != s + 1)[0])
        return GeometryCheck(False, "i", f"line {ic.blocks[bad]} has {line_sizes[bad]} points")
    meet = a @ a.T
    np.fill_diagonal(meet, 0)
    if (meet > 1).any():
        return GeometryCheck(False, "i", "two lines share more than one point")
    degrees = a.sum(axis=0)
    if (degrees != t + 1).any():
        bad = int(np.flatnonzero(degrees != t + 1)[0])
        return GeometryCheck(False, "ii", f"point {bad + 1} lies on {degrees[bad]} lines")
    joined = a.T @ a
    np.fill_diagonal(joined, 0)
    if (joined > 1).any():
        return GeometryCheck(False, "ii", "two points share more than one line")
    collinear = (joined > 0).astype(np.int64)
    # seen[L, p]: points of line L collinear with p
    seen = a @ collinear
    off = a == 0
    if off.any() and (seen[off] != alpha).any():
        rows, cols = np.nonzero(off & (seen != alpha))
        return GeometryCheck(
            False,
            "iii",
            f"point {cols[0] + 1} sees {seen[rows[0], cols[0]]} points of {ic.blocks[rows[0]]}",
        )
    return GeometryCheck(True)


def infer_partial_geometry(ic: IncidenceStructure) -> PartialGeometryParams | None:
    """The (s, t, alpha) for which ``ic`` is a partial geometry, if any."""
    a = ic.matrix
    if ic.block_size is None or a.size == 0:
        return None
    degrees = a.sum(axis=0)
    if (degrees != degrees[0]).any():
        return None
    s, t = ic.block_size - 1, int(degrees[0]) - 1
    joined = a.T @ a
    np.fill_diagonal(joined, 0)
    seen = a @ (joined > 0).astype(np.int64)
    off = seen[a == 0]
    if off.size == 0 or off[0] < 1:
        return None
    params = PartialGeometryParams(s, t, int(off[0]))
    return params if validate_partial_geometry(ic, s, t, params.alpha) else None
