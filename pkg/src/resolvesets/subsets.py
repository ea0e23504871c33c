"""k-subsets of [n] = {1, ..., n} as bit vectors, in colexicographic order.

Element ``i`` is stored at bit ``i`` of a Python integer, so bit 0 is always
clear.  With this layout integer comparison of the bit vectors *is* colex
comparison, which is what makes ordering, ranking and enumeration cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .exceptions import FormatError, GroundSetMismatch, ParameterError

#: Largest supported ground set.  Flat bit vectors of this width admit every
#: toroidal instance up to the 16 x 16 grid.
MAX_N = 256


def _check_nk(n: int, k: int) -> None:
    if not 0 <= n <= MAX_N:
        raise ParameterError(f"ground-set size n={n} outside [0, {MAX_N}]")
    if not 0 <= k <= n:
        raise ParameterError(f"subset size k={k} outside [0, n={n}]")


@total_ordering
@dataclass(frozen=True, eq=True)
class KSubset:
    """An immutable subset of [n], ordered colexicographically."""

    bits: int
    n: int
    k: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_N:
            raise ParameterError(f"ground-set size n={self.n} outside [0, {MAX_N}]")
        if self.bits < 0 or self.bits & 1 or self.bits >> (self.n + 1):
            raise ParameterError(f"bit vector {self.bits:#x} has elements outside [1, {self.n}]")
        object.__setattr__(self, "k", self.bits.bit_count())

    @classmethod
    def from_elements(cls, elements: Iterable[int], n: int) -> "KSubset":
        bits = 0
        for e in elements:
            e = int(e)
            if not 1 <= e <= n:
                raise ParameterError(f"element {e} outside [1, {n}]")
            if bits >> e & 1:
                raise ParameterError(f"element {e} repeated")
            bits |= 1 << e
        return cls(bits, n)

    @classmethod
    def parse(cls, text: str, n: int) -> "KSubset":
        """Inverse of ``str()``: space-separated 1-based integers."""
        try:
            elements = [int(tok) for tok in text.split()]
        except ValueError as exc:
            raise FormatError(f"not an integer list: {text!r}") from exc
        return cls.from_elements(elements, n)

    def elements(self) -> tuple[int, ...]:
        out = []
        bits, i = self.bits, 0
        while bits:
            low = bits & -bits
            i = low.bit_length() - 1
            out.append(i)
            bits ^= low
        return tuple(out)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements())

    def __len__(self) -> int:
        return self.k

    def __contains__(self, element: object) -> bool:
        return isinstance(element, int) and element > 0 and bool(self.bits >> element & 1)

    def __lt__(self, other: "KSubset") -> bool:
        if not isinstance(other, KSubset):
            return NotImplemented
        return self.bits < other.bits

    def __str__(self) -> str:
        return " ".join(map(str, self.elements()))

    def __repr__(self) -> str:
        return f"KSubset({{{', '.join(map(str, self.elements()))}}}, n={self.n})"


def intersection_size(a: KSubset, b: KSubset) -> int:
    if a.n != b.n:
        raise GroundSetMismatch(f"ground sets differ: n={a.n} vs n={b.n}")
    return (a.bits & b.bits).bit_count()


def enumerate_k_subsets(n: int, k: int) -> Iterator[KSubset]:
    """Yield all k-subsets of [n] in colex order (Gosper's hack)."""
    _check_nk(n, k)
    if k == 0:
        yield KSubset(0, n)
        return
    x = ((1 << k) - 1) << 1
    limit = 1 << (n + 1)
    while x < limit:
        yield KSubset(x, n)
        low = x & -x
        ripple = x + low
        # refill the low run starting at bit 1, since bit 0 is never an element
        x = ripple | ((((x ^ ripple) >> 2) // low) << 1)


def rank_colex(a: KSubset) -> int:
    return sum(comb(e - 1, i + 1) for i, e in enumerate(a.elements()))


def unrank_colex(n: int, k: int, index: int) -> KSubset:
    _check_nk(n, k)
    total = comb(n, k)
    if not 0 <= index < total:
        raise ParameterError(f"index {index} outside [0, C({n},{k})={total})")
    bits = 0
    m = n
    for i in range(k, 0, -1):
        # largest m with C(m-1, i) <= index; element m goes in position i
        while comb(m - 1, i) > index:
            m -= 1
        index -= comb(m - 1, i)
        bits |= 1 << m
        m -= 1
    return KSubset(bits, n)


def subset_array(n: int, k: int) -> np.ndarray:
    """All k-subsets of [n] as a ``(C(n,k), k)`` array, rows in colex order.

    Row ``r`` holds the sorted elements of ``unrank_colex(n, k, r)``.  Built
    from the fact that the first C(m, j) j-subsets in colex order are exactly
    the j-subsets of [m].
    """
    _check_nk(n, k)
    dtype = np.uint8 if n < 256 else np.uint16
    table = np.zeros((1, 0), dtype=dtype)
    for j in range(1, k + 1):
        blocks = []
        for top in range(j, n + 1):
            head = table[: comb(top - 1, j - 1)]
            tail = np.full((head.shape[0], 1), top, dtype=dtype)
            blocks.append(np.hstack([head, tail]))
        table = np.vstack(blocks) if blocks else np.zeros((0, j), dtype=dtype)
    return table


def incidence_rows(subsets: Sequence[KSubset], n: int) -> np.ndarray:
    """0/1 matrix with one row per subset and one column per element 1..n."""
    out = np.zeros((len(subsets), n), dtype=np.int64)
    for r, s in enumerate(subsets):
        if s.n != n:
            raise GroundSetMismatch(f"subset {s} lives on n={s.n}, expected {n}")
        for e in s.elements():
            out[r, e - 1] = 1
    return out


@dataclass(frozen=True)
class GroundSetPartition:
    """Parts of [n] used by a construction.

    ``overlapping`` marks constructions whose parts intentionally share
    elements (the extra Kneser part, the two windows of the diameter-3 case).
    ``covers`` says whether the parts are declared to exhaust [n].
    """

    n: int
    parts: tuple[tuple[int, ...], ...]
    overlapping: bool = False
    covers: bool = True

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for part in self.parts:
            for e in part:
                if not 1 <= e <= self.n:
                    raise ParameterError(f"part element {e} outside [1, {self.n}]")
            if not self.overlapping and seen.intersection(part):
                raise ParameterError("parts overlap but partition is not flagged overlapping")
            seen.update(part)
        if self.covers and seen != set(range(1, self.n + 1)):
            raise ParameterError("parts do not cover the ground set")
