from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from resolvesets.exceptions import FormatError, GroundSetMismatch, ParameterError
from resolvesets.subsets import (
    MAX_N,
    GroundSetPartition,
    KSubset,
    enumerate_k_subsets,
    incidence_rows,
    intersection_size,
    rank_colex,
    subset_array,
    unrank_colex,
)


def S(*elements, n=10):
    return KSubset.from_elements(elements, n)


def colex_oracle(n, k):
    # colex order = sort by the reversed sorted tuple
    return sorted(combinations(range(1, n + 1), k), key=lambda c: c[::-1])


@st.composite
def subsets(draw, max_n=20):
    n = draw(st.integers(1, max_n))
    elements = draw(st.sets(st.integers(1, n)))
    return KSubset.from_elements(elements, n)


def test_enumerate_small():
    assert [s.elements() for s in enumerate_k_subsets(3, 2)] == [(1, 2), (1, 3), (2, 3)]


def test_enumerate_empty_set():
    out = list(enumerate_k_subsets(7, 0))
    assert len(out) == 1 and out[0].k == 0


def test_enumerate_count():
    assert sum(1 for _ in enumerate_k_subsets(10, 4)) == 210


@pytest.mark.parametrize("n", range(0, 13))
def test_enumeration_matches_oracle(n):
    for k in range(n + 1):
        got = [s.elements() for s in enumerate_k_subsets(n, k)]
        assert got == colex_oracle(n, k)
        assert len(set(got)) == comb(n, k)


def test_enumerate_rejects_bad_params():
    with pytest.raises(ParameterError):
        list(enumerate_k_subsets(3, 4))
    with pytest.raises(ParameterError):
        list(enumerate_k_subsets(MAX_N + 1, 1))


def test_intersection_examples():
    assert intersection_size(S(1, 2, 3), S(1, 2, 3)) == 3
    assert intersection_size(S(1, 2), S(3, 4)) == 0
    assert intersection_size(S(1, 2, 5, 7), S(2, 7, 9, 10)) == 2


def test_intersection_ground_set_mismatch():
    with pytest.raises(GroundSetMismatch):
        intersection_size(S(1, 2, n=5), S(1, 2, n=6))


@given(subsets(), st.data())
def test_intersection_symmetric(a, data):
    other = data.draw(st.sets(st.integers(1, a.n)))
    b = KSubset.from_elements(other, a.n)
    assert intersection_size(a, b) == intersection_size(b, a)
    assert intersection_size(a, b) == len(set(a) & set(b))
    assert intersection_size(a, a) == a.k


def test_rank_examples():
    assert rank_colex(S(1, 2, 3, 4)) == 0
    assert unrank_colex(5, 2, 9) == S(4, 5, n=5)


def test_round_trip_exhaustive():
    for i, s in enumerate(enumerate_k_subsets(6, 3)):
        assert rank_colex(s) == i
        assert unrank_colex(6, 3, i) == s


@given(st.integers(1, 40), st.data())
def test_round_trip_property(n, data):
    k = data.draw(st.integers(0, n))
    i = data.draw(st.integers(0, comb(n, k) - 1))
    s = unrank_colex(n, k, i)
    assert s.k == k and rank_colex(s) == i


def test_unrank_out_of_range():
    with pytest.raises(ParameterError):
        unrank_colex(5, 2, 10)


@given(subsets(), subsets())
def test_order_is_colex(a, b):
    if a.n == b.n and a.k == b.k:
        assert (a < b) == (a.elements()[::-1] < b.elements()[::-1])


def test_text_round_trip():
    s = S(1, 2, 5, 7)
    assert str(s) == "1 2 5 7"
    assert KSubset.parse(str(s), 10) == s


def test_parse_errors():
    with pytest.raises(FormatError):
        KSubset.parse("1 x", 5)
    with pytest.raises(ParameterError):
        KSubset.parse("0 1", 5)
    with pytest.raises(ParameterError):
        KSubset.parse("2 2", 5)


def test_invalid_bits():
    with pytest.raises(ParameterError):
        KSubset(1, 5)  # bit 0 is never an element
    with pytest.raises(ParameterError):
        KSubset(1 << 7, 5)


def test_large_ground_set():
    s = KSubset.from_elements([1, 128, 256], 256)
    assert s.elements() == (1, 128, 256) and 256 in s and 255 not in s


@pytest.mark.parametrize("n,k", [(6, 3), (9, 4), (12, 1), (5, 5), (4, 0)])
def test_subset_array_rows(n, k):
    arr = subset_array(n, k)
    assert arr.shape == (comb(n, k), k)
    assert [tuple(int(x) for x in row) for row in arr] == colex_oracle(n, k)


def test_incidence_rows():
    m = incidence_rows([S(1, 3, n=4), S(2, 4, n=4)], 4)
    assert m.tolist() == [[1, 0, 1, 0], [0, 1, 0, 1]]
    assert np.all(m.sum(axis=1) == 2)


def test_partition_checks():
    GroundSetPartition(4, ((1, 2), (3, 4)))
    GroundSetPartition(4, ((1, 2, 3), (1, 4)), overlapping=True)
    with pytest.raises(ParameterError):
        GroundSetPartition(4, ((1, 2), (2, 3, 4)))
    with pytest.raises(ParameterError):
        GroundSetPartition(4, ((1, 2),))
    with pytest.raises(ParameterError):
        GroundSetPartition(4, ((1, 5),), covers=False)
