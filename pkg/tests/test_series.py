from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bredon.cellular import cellular_dim
from bredon.klein_point import S3
from bredon.series import (
    LaurentPoly,
    dim_point,
    evaluate_terms,
    one_negative_branches,
    one_negative_form,
    series_for,
    series_oracle,
    two_negative_branches,
    two_negative_form,
)


def poly(d):
    return LaurentPoly(d)


def test_series_examples():
    assert series_for(2, 0, 0) == poly({0: 1, 1: 1, 2: 1})
    assert series_for(-1, -1, -1) == poly({-3: 1})
    assert series_for(0, 0, 0) == poly({0: 1})


@pytest.mark.parametrize("d, dim", [
    ((2, 0, 1, -3), 2),
    ((3, -2, -2, 2), 0),
    ((3, -3, -2, 3), 1),
    ((1, -2, -2, 2), 2),
])
def test_dim_point_examples(d, dim):
    assert dim_point(*d) == dim


def test_oracle_examples():
    assert series_oracle([[(0, 1), (-3, -2)]], [0]) == poly({-3: 1, -2: 2, -1: 1})
    assert series_oracle([[(0, 0), (0, 0)]], [0]) == poly({0: 1})
    assert series_oracle([[(0, 2)]], [-2]) == poly({-2: 1, -1: 1, 0: 1})


def test_empty_geometric_sum_is_zero():
    assert LaurentPoly.geometric(0, -1).is_zero()
    assert series_for(-1, 0, 0).is_zero()


small = st.integers(-5, 5)


@given(small, small, small)
def test_coefficients_nonnegative_and_finite(p, b, q):
    s = series_for(p, b, q)
    assert all(c > 0 for _, c in s.items())
    span = s.span()
    if span is not None:
        assert span[1] - span[0] <= 3 * 5 + 3


@given(small, small, small, st.integers(-10, 10))
def test_s3_relabeling(p, b, q, a):
    rep = (p, b, q)
    values = {dim_point(a, *(rep[i] for i in perm)) for perm in S3}
    assert len(values) == 1


def test_one_negative_overlaps_agree():
    for l, m, k in product(range(1, 10), repeat=3):
        branches = one_negative_branches(l, m, k)
        polys = {evaluate_terms(one_negative_form(l, m, k, br)) for br in branches}
        assert len(polys) == 1, (l, m, k, branches)


def test_two_negative_overlaps_agree():
    for l, j, k in product(range(1, 10), repeat=3):
        branches = two_negative_branches(l, j, k)
        polys = {evaluate_terms(two_negative_form(l, j, k, br)) for br in branches}
        assert len(polys) == 1, (l, j, k, branches)


def test_big_branch_outside_its_range_differs():
    # evaluating the k > l branch at k = l is not a valid use of the formula
    assert evaluate_terms(one_negative_form(2, 3, 2, "big_l")) != series_for(2, 3, -2)


@pytest.mark.parametrize("rep", [(1, 1, 1), (2, -1, 1), (-2, -1, 2), (-1, -1, -1), (3, 0, -2), (-2, 2, 2)])
def test_matches_cellular_chains(rep):
    s = series_for(*rep)
    for t in range(-10, 8):
        assert s.coeff(t) == cellular_dim(-t, *rep), (t, rep)


def test_vanishing_ranges():
    r = range(-10, 11)
    for a, b, q in product(r, repeat=3):
        if a > b >= -q > 0 or (b >= 0 and q >= 0 and a >= 1):
            assert dim_point(a, q, b, q) == 0
