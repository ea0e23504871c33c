"""Hadamard matrices (Sylvester, Paley I, Kronecker products) and Hadamard designs."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..exceptions import ParameterError
from .fields import MAX_ORDER, field_make, is_prime, prime_power
from .incidence import IncidenceStructure


class UnsupportedOrder(ParameterError):
    """No implemented method reaches this order (which says nothing about existence)."""


def _paley_field_ok(q: int) -> bool:
    pp = prime_power(q)
    return pp is not None and q % 4 == 3 and (q <= MAX_ORDER or pp[1] == 1)


def _quadratic_character(q: int) -> np.ndarray:
    """chi[a - b] table as a q x q matrix over GF(q) labels 0..q-1."""
    chi = np.zeros((q, q), dtype=np.int64)
    if q <= MAX_ORDER:
        f = field_make(q)
        squares = {f.mul(x, x) for x in range(1, q)}
        for a in range(q):
            for b in range(q):
                d = f.sub(a, b)
                chi[a, b] = 0 if d == 0 else (1 if d in squares else -1)
    else:
        assert is_prime(q)
        for a in range(q):
            for b in range(q):
                d = (a - b) % q
                chi[a, b] = 0 if d == 0 else (1 if pow(d, (q - 1) // 2, q) == 1 else -1)
    return chi


def _paley_one(q: int) -> np.ndarray:
    n = q + 1
    s = np.zeros((n, n), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = -1
    s[1:, 1:] = _quadratic_character(q)
    return np.eye(n, dtype=np.int64) + s


@lru_cache(maxsize=None)
def _recipe(order: int) -> tuple | None:
    if order == 1:
        return ("one",)
    if order == 2:
        return ("sylvester", 1)
    if order % 4:
        return None
    if order & (order - 1) == 0:
        return ("sylvester", order // 2)
    if _paley_field_ok(order - 1):
        return ("paley", order - 1)
    if _recipe(order // 2) is not None:
        return ("sylvester", order // 2)
    for a in range(4, int(order**0.5) + 1, 4):
        if order % a == 0 and _recipe(a) and _recipe(order // a):
            return ("kron", a, order // a)
    return None


def is_constructible(order: int) -> bool:
    return order >= 1 and _recipe(order) is not None


def normalise(h: np.ndarray) -> np.ndarray:
    """Scale rows and columns by -1 so the first row and column are all +1."""
    h = h * h[0][np.newaxis, :]
    return h * h[:, 0][:, np.newaxis]


def _build(order: int) -> np.ndarray:
    recipe = _recipe(order)
    if recipe is None:
        raise UnsupportedOrder(f"no Sylvester/Paley construction reaches order {order}")
    kind = recipe[0]
    if kind == "one":
        return np.ones((1, 1), dtype=np.int64)
    if kind == "paley":
        return _paley_one(recipe[1])
    if kind == "sylvester":
        h = _build(recipe[1])
        return np.block([[h, h], [h, -h]])
    return np.kron(_build(recipe[1]), _build(recipe[2]))


def hadamard_matrix(order: int, method: str | None = None) -> np.ndarray:
    """A normalised Hadamard matrix H with H @ H.T == order * I.

    Powers of two use Sylvester doubling, other orders prefer Paley I on
    q = order - 1.  ``method="paley"`` or ``"sylvester"`` forces the top step.
    """
    if order < 1:
        raise ParameterError(f"order must be positive, got {order}")
    if method is None:
        return normalise(_build(order))
    if method == "paley":
        if not _paley_field_ok(order - 1):
            raise UnsupportedOrder(f"Paley I needs order - 1 = 3 mod 4 prime power, got {order}")
        return normalise(_paley_one(order - 1))
    if method == "sylvester":
        if order % 2 or not is_constructible(order // 2):
            raise UnsupportedOrder(f"order {order} is not twice a constructible order")
        h = _build(order // 2)
        return normalise(np.block([[h, h], [h, -h]]))
    raise ParameterError(f"unknown method {method!r}")


def hadamard_design(m: int) -> IncidenceStructure:
    """The (4m-1, 2m-1, m-1) symmetric design from a normalised order-4m matrix.

    Drop the first row and column and keep the +1 entries; each remaining row
    becomes a block.
    """
    if m < 1:
        raise ParameterError(f"m must be positive, got {m}")
    h = hadamard_matrix(4 * m)
    core = h[1:, 1:]
    return IncidenceStructure.from_lists(4 * m - 1, [list(np.flatnonzero(row == 1) + 1) for row in core])
