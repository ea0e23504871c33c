"""Steiner triple systems by the Bose (n = 6t+3) and Skolem (n = 6t+1) constructions.

Both place points on Q x {0, 1, 2} for a commutative quasigroup Q and read the
triples off the quasigroup table.  Point (x, i) is numbered i*|Q| + x + 1; the
extra Skolem point is n.
"""

from __future__ import annotations

from ..exceptions import ParameterError
from .incidence import IncidenceStructure


def _bose(n: int) -> list[list[int]]:
    order = n // 3  # 2t + 1, odd
    half = (order + 1) // 2  # inverse of 2 modulo 2t + 1

    def pt(x: int, i: int) -> int:
        return (i % 3) * order + x + 1

    def op(x: int, y: int) -> int:
        return (x + y) * half % order

    blocks = [[pt(x, 0), pt(x, 1), pt(x, 2)] for x in range(order)]
    for i in range(3):
        for x in range(order):
            for y in range(x + 1, order):
                blocks.append([pt(x, i), pt(y, i), pt(op(x, y), i + 1)])
    return blocks


def _skolem(n: int) -> list[list[int]]:
    order = (n - 1) // 3  # 2t
    t = order // 2
    inf = n

    def pt(x: int, i: int) -> int:
        return (i % 3) * order + x + 1

    def op(x: int, y: int) -> int:
        # half-idempotent: x o x = (x + t) o (x + t) = x mod t
        s = (x + y) % order
        return s // 2 if s % 2 == 0 else t + s // 2

    blocks = [[pt(x, 0), pt(x, 1), pt(x, 2)] for x in range(t)]
    for i in range(3):
        for x in range(t):
            blocks.append([inf, pt(x + t, i), pt(x, i + 1)])
    for i in range(3):
        for x in range(order):
            for y in range(x + 1, order):
                blocks.append([pt(x, i), pt(y, i), pt(op(x, y), i + 1)])
    return blocks


def steiner_triple_system(n: int) -> IncidenceStructure:
    """An STS(n): every pair of points lies in exactly one of n(n-1)/6 triples."""
    if n < 7 or n % 6 not in (1, 3):
        raise ParameterError(f"STS(n) needs n >= 7 with n = 1 or 3 (mod 6), got n={n}")
    blocks = _bose(n) if n % 6 == 3 else _skolem(n)
    return IncidenceStructure.from_lists(n, blocks)
