"""Small finite fields GF(p^m), q = p^m <= 64.

Elements are the integers 0..q-1; element ``x`` stands for the polynomial
whose coefficients are the base-p digits of ``x`` (least significant digit is
the constant term).  Arithmetic is tabulated once per field.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..exceptions import ParameterError

MAX_ORDER = 64


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, m)`` with q = p**m, or None when q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    return (p, m) if q == 1 else None


def is_prime(q: int) -> bool:
    pp = prime_power(q)
    return pp is not None and pp[1] == 1


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``mod`` (coefficient lists, constant first)."""
    a = a[:]
    deg = len(mod) - 1
    for i in range(len(a) - 1, deg - 1, -1):
        c = a[i] % p
        if c:
            for j in range(deg + 1):
                a[i - deg + j] = (a[i - deg + j] - c * mod[j]) % p
    return [c % p for c in a[:deg]] + [0] * max(0, deg - len(a))


def _is_irreducible(poly: list[int], p: int) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_mod(poly, divisor, p)):
                return False
    return True


def _least_irreducible(p: int, m: int) -> list[int]:
    """Least monic irreducible of degree m.

    Candidates are ordered by the integer whose base-p digits are the
    non-leading coefficients, constant term least significant.
    """
    if m == 1:
        return [0, 1]
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        poly = low + [1]
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


class FiniteField:
    """GF(q) with tabulated addition, multiplication and inverses."""

    def __init__(self, q: int):
        pp = prime_power(q)
        if pp is None:
            raise ParameterError(f"q={q} is not a prime power")
        if q > MAX_ORDER:
            raise ParameterError(f"q={q} exceeds the supported field order {MAX_ORDER}")
        self.q = q
        self.p, self.m = pp
        self.modulus = _least_irreducible(self.p, self.m)
        p, m = self.p, self.m

        def digits(x: int) -> list[int]:
            return [(x // p**i) % p for i in range(m)]

        def value(ds: list[int]) -> int:
            return sum(d * p**i for i, d in enumerate(ds))

        elems = range(q)
        self._add = [[value([(a + b) % p for a, b in zip(digits(x), digits(y))]) for y in elems] for x in elems]
        self._neg = [value([(-a) % p for a in digits(x)]) for x in elems]
        mul = []
        for x in elems:
            row = []
            for y in elems:
                prod = [0] * (2 * m - 1)
                for i, a in enumerate(digits(x)):
                    for j, b in enumerate(digits(y)):
                        prod[i + j] += a * b
                row.append(value(_poly_mod(prod, self.modulus, p)))
            mul.append(row)
        self._mul = mul
        self._inv = [0] * q
        for x in range(1, q):
            self._inv[x] = next(y for y in range(1, q) if mul[x][y] == 1)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def elements(self) -> range:
        return range(self.q)

    def is_square(self, a: int) -> bool:
        return any(self._mul[x][x] == a for x in range(self.q))

    def __repr__(self) -> str:
        return f"FiniteField({self.q})"


@lru_cache(maxsize=None)
def field_make(q: int) -> FiniteField:
    return FiniteField(q)
