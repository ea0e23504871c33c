"""Exact rank and determinant of integer matrices by fraction-free elimination."""

from __future__ import annotations

from typing import Sequence

import numpy as np


def rank_and_det(matrix: Sequence[Sequence[int]] | np.ndarray) -> tuple[int, int | None]:
    """Bareiss elimination over Python integers.

    Returns ``(rank, det)``; ``det`` is None for non-square input.  Every
    division in the update is exact, so no rational arithmetic is needed.
    """
    a = [[int(x) for x in row] for row in np.asarray(matrix, dtype=object).tolist()]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    square = rows == cols
    sign = 1
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
            sign = -sign
        p = a[r][c]
        for i in range(r + 1, rows):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, cols):
                ai[j] = (p * ai[j] - f * a[r][j]) // prev
            ai[c] = 0
        prev = p
        r += 1
    det = None
    if square:
        det = sign * a[rows - 1][cols - 1] if r == rows and rows else (1 if rows == 0 else 0)
    return r, det
