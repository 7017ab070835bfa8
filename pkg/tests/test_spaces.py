from itertools import product

import pytest

from bredon.degrees import KleinDegree
from bredon.series import dim_point
from bredon.spaces import (
    KAPPA2,
    UnknownClass,
    b_space_dim,
    b_space_group,
    bc2_basis,
    bc2_motivic_dim,
    e_space_dim,
    e_space_group,
    etilde_dim,
    etilde_space_group,
    realize_class,
    w_q_dim,
)


def test_b_space_examples():
    assert b_space_group(0, 1).basis_strings() == ["x2", "c"]
    assert b_space_group(2, -1).basis_strings() == ["t2*c"]
    assert b_space_dim(0, 0) == 1


def test_b_space_lines_vanish():
    for a in range(-10, 11):
        assert b_space_dim(a, a - 1) == 0
        assert b_space_dim(a, a - 2) == 0


@pytest.mark.parametrize("a, w, basis", [(2, 1, ["t"]), (1, 1, ["rho", "s"]), (0, 0, ["1"])])
def test_bc2_examples(a, w, basis):
    assert sorted(str(m) for m in bc2_basis(a, w)) == sorted(basis)


def test_bc2_relation_degrees():
    for m in bc2_basis(5, 4):
        assert m.bidegree == (5, 4)


def test_w_q():
    assert w_q_dim(1, 2, 1) == 0
    assert w_q_dim(3, 2, 1) == 1
    for q in range(1, 5):
        for b in range(q, q + 6):
            assert w_q_dim(q, 2 * b, b) == 0


def test_bc2_agrees_with_b_space():
    for a, w in product(range(-8, 9), repeat=2):
        if a <= 2 * w:
            assert bc2_motivic_dim(a, w) == b_space_dim(a - w, w)


def test_e_space_examples():
    assert e_space_group(KleinDegree(-1, 1, -1, 1)).basis_strings() == ["k2"]
    for n in range(1, 5):
        g = e_space_group(KleinDegree(n, -n, n, -n))
        assert g.basis_strings() == [f"k2^-{n}" if n > 1 else "k2^-1"]
    g = e_space_group(KleinDegree(0, 0, 1, 0))
    assert g.dimension == 2
    assert g.basis_strings() == ["x1*y3*k2^-1", "y1*x3*k2^-1"]


def test_cofiber_examples():
    assert etilde_dim(KleinDegree(2, 0, 1, -3)) == 1
    g = etilde_space_group(KleinDegree(4, 0, 0, 0))
    assert g.dimension == 1
    assert g.basis_strings() == ["S(t2*c*b)"]
    for p, q in product(range(-5, 6), repeat=2):
        assert etilde_dim(KleinDegree(3, p, 0, q)) == 0


def test_split_ses_small_window():
    for a, b, p, q in product(range(-5, 6), range(-5, 6), range(0, 4), range(0, 4)):
        d = KleinDegree(a, p, b, q)
        assert e_space_dim(d) == dim_point(*d) + etilde_dim(d + KleinDegree(1, 0, 0, 0))


def test_periodicities():
    for a, p, b, q in product(range(-4, 5), repeat=4):
        d = KleinDegree(a, p, b, q)
        assert e_space_dim(d + KAPPA2) == e_space_dim(d)
        assert etilde_dim(d + KleinDegree(0, 1, 0, 0)) == etilde_dim(d)
        assert etilde_dim(d + KleinDegree(0, 0, 0, -1)) == etilde_dim(d)


def test_realize_class():
    assert realize_class("tau") == "y2"
    assert realize_class("rho") == "x2"
    assert realize_class("s") == "c"
    assert realize_class("t") == "b"
    assert realize_class("k2") == "k2"
    assert realize_class("κ2") == "k2"
    with pytest.raises(UnknownClass):
        realize_class("i1")
