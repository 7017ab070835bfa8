import pytest
from hypothesis import given
from hypothesis import strategies as st

from bredon.degrees import (
    C2Degree,
    DegreeParseError,
    KleinDegree,
    MotivicBidegree,
    Region,
    parse_klein,
    parse_motivic,
    realize,
    region_of,
    unrealize,
)

ints = st.integers(-50, 50)
klein = st.builds(KleinDegree, ints, ints, ints, ints)
motivic = st.builds(MotivicBidegree, ints, ints, ints, ints)


@pytest.mark.parametrize("d, want", [
    ((0, 0, 0, 0), (0, 0, 0, 0)),
    ((-2, 2, -1, 1), (-1, 1, -1, 1)),
    ((3, -3, 1, -3), (2, 0, 1, -3)),
])
def test_realize_examples(d, want):
    assert realize(MotivicBidegree(*d)) == KleinDegree(*want)


def test_addition_examples():
    assert KleinDegree(1, 0, 0, 0) + KleinDegree(0, 1, 0, 0) == KleinDegree(1, 1, 0, 0)
    assert KleinDegree(0, 1, 0, 0) + KleinDegree(-1, 1, 0, 0) == KleinDegree(-1, 2, 0, 0)


@given(klein, klein, klein)
def test_addition_group_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x + KleinDegree(0, 0, 0, 0) == x
    assert x - x == KleinDegree(0, 0, 0, 0)


@given(motivic, motivic)
def test_realize_additive(d1, d2):
    s = MotivicBidegree(*(u + v for u, v in zip(d1, d2)))
    assert realize(s) == realize(d1) + realize(d2)


@given(motivic)
def test_unrealize_inverts(d):
    assert unrealize(realize(d)) == d


@given(ints, ints)
def test_weight_zero_lands_on_sigma_plane(a, p):
    r = realize(MotivicBidegree(a, p, 0, 0))
    assert r.b == 0 and r.q == 0


@pytest.mark.parametrize("b, q, region", [
    (1, -3, Region.TILDE),
    (-2, 2, Region.BOREL),
    (0, 0, Region.POINT),
    (-1, 0, Region.ZERO),
    (0, -1, Region.ZERO),
])
def test_region_examples(b, q, region):
    assert region_of(b, q) is region


def test_regions_partition_window():
    for b in range(-12, 13):
        for q in range(-12, 13):
            preds = [b + q < 0 and b <= 0, b + q < 0 and b >= 1,
                     b >= 0 and b + q >= 0, b < 0 and b + q >= 0]
            assert sum(preds) == 1
            tags = [Region.ZERO, Region.TILDE, Region.POINT, Region.BOREL]
            assert region_of(b, q) is tags[preds.index(True)]


def test_parsing():
    assert parse_klein("2,0,1,-3") == KleinDegree(2, 0, 1, -3)
    assert parse_klein("(2, 0, 1, -3)") == KleinDegree(2, 0, 1, -3)
    assert parse_motivic("3,-3:1,-3") == MotivicBidegree(3, -3, 1, -3)
    assert parse_motivic("((3,-3),(1,-3))") == MotivicBidegree(3, -3, 1, -3)
    with pytest.raises(DegreeParseError):
        parse_klein("1,2,3")
    with pytest.raises(DegreeParseError):
        parse_motivic("1,2,3,4")


def test_c2_degree_embeds_on_axis():
    assert C2Degree(2, -2, "sigma").embed() == KleinDegree(2, -2, 0, 0)
    assert C2Degree(0, 1, "eps").embed() == KleinDegree(0, 0, 1, 0)
    assert C2Degree(-1, 3, "sigma*eps").embed() == KleinDegree(-1, 0, 0, 3)
    with pytest.raises(ValueError):
        C2Degree(0, 1, "tau").embed()


def test_json_shape():
    assert KleinDegree(1, 2, 3, 4)._asdict() == {"a": 1, "p": 2, "b": 3, "q": 4}
