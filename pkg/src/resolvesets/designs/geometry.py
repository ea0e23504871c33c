"""Desarguesian projective and affine planes over GF(q)."""

from __future__ import annotations

from itertools import product

from ..exceptions import ParameterError
from .fields import field_make
from .incidence import IncidenceStructure


def _normalised_vectors(q: int) -> list[tuple[int, int, int]]:
    """One representative per 1-dim subspace of GF(q)^3: first non-zero entry is 1."""
    out = []
    for v in product(range(q), repeat=3):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            out.append(v)
    return out


def projective_plane(q: int) -> IncidenceStructure:
    """PG(2, q): points and lines are both normalised vectors; incidence is x.y = 0."""
    f = field_make(q)
    vectors = _normalised_vectors(q)
    lines = []
    for line in vectors:
        pts = []
        for idx, pt in enumerate(vectors, 1):
            dot = 0
            for a, b in zip(line, pt):
                dot = f.add(dot, f.mul(a, b))
            if dot == 0:
                pts.append(idx)
        lines.append(pts)
    return IncidenceStructure.from_lists(len(vectors), lines)


def affine_plane(q: int) -> IncidenceStructure:
    """AG(2, q): point (x, y) is x*q + y + 1; lines y = mx + c then x = c."""
    if q < 2:
        raise ParameterError(f"affine plane needs q >= 2, got {q}")
    f = field_make(q)

    def point(x: int, y: int) -> int:
        return x * q + y + 1

    lines = []
    for m in f.elements():
        for c in f.elements():
            lines.append([point(x, f.add(f.mul(m, x), c)) for x in f.elements()])
    for c in f.elements():
        lines.append([point(c, y) for y in f.elements()])
    return IncidenceStructure.from_lists(q * q, lines)
