from itertools import product

import pytest

from bredon.degrees import KleinDegree
from bredon.f2algebra import DEGREES, NAMED_CLASSES
from bredon.klein_point import MIXED, POSITIVE_CONE, THETA_SECTOR, group_at, named_class_degrees, sector_of
from bredon.series import dim_point


@pytest.mark.parametrize("d, dim, basis", [
    ((0, 1, 0, 1), 1, ["x1*x3"]),
    ((-2, 1, 0, 1), 1, ["y1*y3"]),
    ((3, -3, 0, 0), 1, ["t1/y1"]),
    ((0, 0, 0, 0), 1, ["1"]),
])
def test_group_examples(d, dim, basis):
    g = group_at(KleinDegree(*d))
    assert g.dimension == dim
    assert g.basis_strings() == basis


def test_theta_class_is_dimension_only():
    g = group_at(KleinDegree(3, -1, -1, -1))
    assert g.dimension == 1
    assert g.basis is None
    assert g.sector == MIXED


def test_sectors():
    assert sector_of(KleinDegree(0, 1, 2, 3)) == POSITIVE_CONE
    assert sector_of(KleinDegree(0, -1, 0, 3)) == THETA_SECTOR
    assert sector_of(KleinDegree(0, 0, -4, 0)) == THETA_SECTOR
    assert sector_of(KleinDegree(0, -1, 2, 3)) == MIXED


def test_bases_match_series_in_theta_sectors():
    for p, q in product(range(-6, 7), range(0, 6)):
        for a in range(-14, 14):
            for d in (KleinDegree(a, p, 0, q), KleinDegree(a, q, p, 0), KleinDegree(a, 0, q, p)):
                g = group_at(d)
                assert g.basis is not None
                assert len(g.basis) == g.dimension == dim_point(*d)
                assert all(m.degree == d for m in g.basis)


def test_named_classes_live_in_nonzero_groups():
    degs = named_class_degrees()
    assert set(degs) == set(NAMED_CLASSES)
    assert len(degs) == 16
    for g, d in degs.items():
        dim = dim_point(*d)
        assert dim >= 1, g
        if sum(1 for c in d.rep if c) == 1 or g == "T":
            assert dim == 1, g


def test_named_class_degree_table():
    assert DEGREES["k2"] == KleinDegree(-1, 1, -1, 1)
    assert DEGREES["T"] == KleinDegree(3, -1, -1, -1)
    assert DEGREES["t1"] == KleinDegree(2, -2, 0, 0)
