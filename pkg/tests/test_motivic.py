from itertools import product

import pytest

from bredon.degrees import MotivicBidegree, Region, realize
from bredon.f2algebra import Monomial
from bredon.motivic import (
    Status,
    borel_group,
    check_theorem_2q,
    decomposition_R,
    decomposition_tag,
    motivic_dim,
    motivic_group_R,
    nc_generator,
    nc_module_action,
    nc_multiply,
    realization_status,
)
from bredon.series import dim_point

M = MotivicBidegree


@pytest.mark.parametrize("d, dim, region", [
    ((3, -3, 1, -3), 1, Region.TILDE),
    ((1, 0, 2, 0), 1, Region.POINT),
    ((0, 0, -1, 0), 0, Region.ZERO),
    ((1, 0, -2, 3), 1, Region.BOREL),
])
def test_group_examples(d, dim, region):
    g = motivic_group_R(M(*d))
    assert (g.dimension, g.region) == (dim, region)


def test_weight_line_recovers_motivic_cohomology_of_R():
    for a, w in product(range(-4, 8), range(0, 6)):
        g = motivic_group_R(M(a, 0, w, 0))
        assert g.dimension == int(0 <= a <= w)
        if g.dimension:
            assert g.basis_strings() == [Monomial.make({"x2": a, "y2": w - a}).__str__()]


def test_borel_examples():
    assert borel_group(M(-2, 2, -1, 1)).basis_strings() == ["k2"]
    assert borel_group(M(0, 0, 0, 1)).dimension == 0
    for a, p, b in product(range(-4, 5), repeat=3):
        assert borel_group(M(a, p, b, -b - 1)).dimension == 0


@pytest.mark.parametrize("d, raw, refined, dims", [
    ((3, -3, 1, -3), Status.MONO, Status.MONO_NOT_EPI, (1, 2)),
    ((3, -2, 1, -2), Status.MONO, Status.ISO, (1, 1)),
    ((0, 0, 1, 0), Status.ISO, Status.ISO, (1, 1)),
    ((-1, 0, -2, 2), Status.MONO, Status.MONO_NOT_EPI, (1, 2)),
    ((0, 0, -1, 0), Status.ZERO_DOMAIN, Status.ZERO_DOMAIN, (0, 0)),
])
def test_status_examples(d, raw, refined, dims):
    s = realization_status(M(*d))
    assert (s.raw, s.refined, (s.dim_domain, s.dim_codomain)) == (raw, refined, dims)


def test_status_invariants_on_window():
    r = range(-4, 5)
    for d in map(lambda t: M(*t), product(range(-8, 6), r, r, r)):
        s = realization_status(d)
        if s.refined is Status.ZERO_DOMAIN:
            assert s.dim_domain == 0
        if s.refined is Status.ISO:
            assert s.dim_domain == s.dim_codomain
        if s.raw is Status.MONO:
            assert s.dim_domain <= s.dim_codomain
        if s.raw is not Status.MONO:
            assert s.refined is s.raw


def test_point_region_is_realization():
    for a, p, b, q in product(range(-6, 6), range(-4, 5), range(0, 5), range(-4, 5)):
        if b + q >= 0:
            assert motivic_dim(M(a, p, b, q)) == dim_point(*realize(M(a, p, b, q)))


@pytest.mark.parametrize("abq, want", [((0, 0, 1), (1, 1)), ((0, 0, 0), (1, 1)), ((3, 0, 2), (0, 0))])
def test_theorem_2q_examples(abq, want):
    assert check_theorem_2q(*abq) == want


def test_decomposition():
    assert decomposition_tag(M(-2, 2, -1, 1)) == "R"
    assert decomposition_tag(M(3, -3, 1, -3)) == "NC"
    window = [M(a, p, b, q) for a, p, b, q in product(range(-4, 5), range(-3, 4), range(-3, 4), range(-3, 4))]
    for d, tag, dim in decomposition_R(window):
        if dim:
            assert tag in ("R", "NC")


def test_nc_action():
    sc = nc_generator(0, -1, 0, 0, 0, True)
    sb = nc_generator(0, -2, 0, 0, 1, False)
    assert nc_module_action(Monomial.make((), (1, 1, 0)), sc).is_zero()
    assert nc_module_action(Monomial.make({"y1": 1}), sc).is_zero()
    assert str(nc_module_action(Monomial.make({"y1": 1}), sb)) == "x1*x3^-2*S(c)"
    two = nc_generator(0, -3, 0, 0, 1, True)
    got = nc_module_action(Monomial.make({"y1": 1}), two)
    assert sorted(str(t) for t in got.terms) == ["x1*x3^-3*S(x2*c)", "x1*x3^-3*S(y2*b)"]
    assert str(nc_module_action(Monomial.make({"x1": 2}), sc)) == "x1^2*x3^-1*S(c)"
    assert nc_multiply(sc, sb).is_zero()
    with pytest.raises(ValueError):
        nc_module_action(Monomial.make({"x2": 1}), sc)
