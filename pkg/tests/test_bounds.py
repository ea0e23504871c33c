from itertools import combinations

import numpy as np
import pytest

from resolvesets.bounds import (
    BoundRecord,
    bound_table,
    determining_lower_bound,
    distance_matrix,
    exact_metric_dimension,
    format_bound_table,
    greedy_resolving_set,
    k2_exact,
)
from resolvesets.exceptions import InstanceTooLarge, ParameterError
from resolvesets.graphs import GraphInstance
from resolvesets.verify import verify_resolving

J = GraphInstance.johnson
K = GraphInstance.kneser


def brute_force_dimension(g):
    """Smallest m such that some m columns of the distance matrix separate all rows."""
    d = distance_matrix(g).astype(np.int64)
    n = len(d)
    base = g.diameter + 1
    for m in range(1, n + 1):
        weights = base ** np.arange(m, dtype=np.int64)
        for cols in combinations(range(n), m):
            keys = d[:, cols] @ weights
            if len(np.unique(keys)) == n:
                return m
    raise AssertionError


def determining_oracle(n, k, max_d=8):
    """Fewest k-sets whose pointwise stabiliser in Sym(n) is trivial.

    Equivalent: fewest d admitting n distinct 0/1 vectors of length d with
    every coordinate summing to k (point p gets the vector of sets holding it).
    """
    for d in range(1, max_d + 1):
        vectors = sorted(range(1 << d), key=lambda v: bin(v).count("1"))

        def place(start, left, sums):
            if left == 0:
                return all(s == k for s in sums)
            need = sum(k - s for s in sums)
            for idx in range(start, len(vectors)):
                v = vectors[idx]
                w = bin(v).count("1")
                if w * left > need:  # weights only grow from here
                    break
                new = [s + (v >> i & 1) for i, s in enumerate(sums)]
                if any(s > k for s in new):
                    continue
                if place(idx + 1, left - 1, new):
                    return True
            return False

        if place(0, n, [0] * d):
            return d
    return None


@pytest.mark.parametrize(
    "g,beta", [(J(6, 2), 4), (J(4, 2), 3), (K(5, 2), 3), (J(6, 3), 4), (J(5, 2), 3), (K(7, 2), 5)], ids=str
)
def test_exact_examples(g, beta):
    res = exact_metric_dimension(g, use_formula_bound=False)
    assert res.exhaustive and res.dimension == beta == len(res.basis)
    assert verify_resolving(g, res.basis).resolved


@pytest.mark.parametrize("g", [J(4, 2), J(5, 2), K(5, 2), J(6, 2), J(6, 3), K(7, 2)], ids=str)
def test_exact_against_brute_force(g):
    assert exact_metric_dimension(g, use_formula_bound=False).dimension == brute_force_dimension(g)


@pytest.mark.parametrize("n", [6, 7, 8, 9])
def test_k2_formula_agreement(n):
    assert exact_metric_dimension(J(n, 2), use_formula_bound=False).dimension == k2_exact(n)
    assert exact_metric_dimension(K(n, 2), use_formula_bound=False).dimension == k2_exact(n)


def test_k2_exact_values():
    assert [k2_exact(n) for n in (6, 7, 8)] == [4, 5, 6]
    with pytest.raises(ParameterError):
        k2_exact(5)


@pytest.mark.parametrize("g", [J(6, 2), J(7, 3), K(7, 3), J(8, 2), K(9, 2), J(8, 4)], ids=str)
def test_basis_minimal(g):
    res = exact_metric_dimension(g, use_formula_bound=False)
    assert verify_resolving(g, res.basis).resolved
    for i in range(len(res.basis)):
        smaller = res.basis[:i] + res.basis[i + 1:]
        assert not verify_resolving(g, smaller).resolved


@pytest.mark.parametrize(
    "g", [J(7, 2), J(8, 3), K(7, 3), J(9, 2), K(8, 2), J(8, 4), J(10, 2)], ids=str
)
def test_symmetry_mode_agrees(g):
    plain = exact_metric_dimension(g, use_formula_bound=False)
    fast = exact_metric_dimension(g, use_formula_bound=False, symmetry=True)
    assert plain.exhaustive and fast.exhaustive
    assert plain.dimension == fast.dimension
    assert verify_resolving(g, fast.basis).resolved


def test_formula_bound_early_stop():
    g = J(9, 3)
    with_bound = exact_metric_dimension(g, use_formula_bound=True, symmetry=True)
    without = exact_metric_dimension(g, use_formula_bound=False, symmetry=True)
    assert with_bound.dimension == without.dimension
    assert with_bound.dimension >= determining_lower_bound(9, 3)


def test_exact_limits():
    with pytest.raises(InstanceTooLarge):
        exact_metric_dimension(K(30, 4))
    with pytest.raises(InstanceTooLarge):
        exact_metric_dimension(J(8, 3), limit=10)


def test_timeout_partial():
    g = K(8, 3)
    res = exact_metric_dimension(g, timeout=0.2, use_formula_bound=False)
    assert res.proof == "timeout-partial" and not res.exhaustive
    assert verify_resolving(g, res.basis).resolved
    d = res.to_dict()
    assert d["proof"] == "timeout-partial" and len(d["basis"]) == res.dimension


@pytest.mark.parametrize("g", [J(4, 2), K(5, 2), K(7, 3), J(9, 3), J(12, 2)], ids=str)
def test_greedy_not_below_exact(g):
    cand = greedy_resolving_set(g)
    assert verify_resolving(g, cand).resolved
    assert len(cand) >= exact_metric_dimension(g, use_formula_bound=False, symmetry=True).dimension


@pytest.mark.parametrize("g", [K(10, 3), K(13, 4), J(14, 3)], ids=str)
def test_greedy_larger(g):
    assert verify_resolving(g, greedy_resolving_set(g)).resolved


def test_determining_examples():
    assert determining_lower_bound(6, 2) == 4
    assert determining_lower_bound(9, 3) == 4
    assert determining_lower_bound(7, 3) is None
    assert determining_lower_bound(6, 3) is None  # n <= C(k+1, 2)
    assert determining_lower_bound(10, 1) is None


@pytest.mark.parametrize("n,k", [(n, 2) for n in range(4, 11)] + [(n, 3) for n in range(7, 13)] + [(11, 4), (12, 4)])
def test_determining_against_oracle(n, k):
    d = determining_lower_bound(n, k)
    if d is not None:
        assert d == determining_oracle(n, k)


def test_determining_bounds_exact():
    for g in (J(6, 2), J(7, 2), J(8, 2), J(9, 3), J(10, 2)):
        d = determining_lower_bound(g.n, g.k)
        assert d <= exact_metric_dimension(g, use_formula_bound=False, symmetry=True).dimension


def records(family, n, k):
    return {r.name: r for r in bound_table(family, n, k)}


def test_bound_table_examples():
    t = records("johnson", 9, 3)
    assert t["johnson-partition"].value == 7 and t["johnson-partition"].direction == "upper"
    assert t["matrix"].value == 9
    assert t["determining-number"].value == 4 and t["determining-number"].direction == "lower"
    assert records("kneser", 13, 3)["steiner-system"].value == 26
    assert records("kneser", 100, 4)["toroidal"].value == 200
    assert records("kneser", 9, 3)["affine-plane"].value == 12
    assert records("johnson", 7, 3)["projective-plane"].value == 7
    assert records("kneser", 11, 5)["hadamard-design"].value == 11
    assert records("johnson", 8, 2)["k2-exact"].value == 6


def test_bound_table_reasons():
    t = records("johnson", 9, 3)
    assert not t["toroidal"].applicable and t["toroidal"].reason
    assert not t["steiner-system"].applicable
    for r in bound_table("kneser", 10, 4):
        assert r.applicable == (r.value is not None)
        assert isinstance(r, BoundRecord) and r.to_dict()["name"] == r.name


def test_bound_table_consistent():
    for family in ("johnson", "kneser"):
        for n in range(5, 30):
            for k in range(2, n // 2 + 1):
                if family == "kneser" and n == 2 * k:
                    continue
                rows = [r for r in bound_table(family, n, k) if r.applicable]
                lower = max((r.value for r in rows if r.direction == "lower"), default=0)
                exact = [r.value for r in rows if r.direction == "exact"]
                upper = min((r.value for r in rows if r.direction == "upper"), default=10**9)
                assert lower <= upper
                for e in exact:
                    assert lower <= e <= upper


def test_format_bound_table():
    text = format_bound_table(bound_table("kneser", 13, 3))
    lines = text.splitlines()
    assert lines[0].split()[:3] == ["name", "direction", "value"]
    assert any(line.startswith("steiner-system") and " 26 " in line for line in lines)
    assert any("n/a:" in line for line in lines)
