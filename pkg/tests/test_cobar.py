import pytest

from cacti.catalog import catalog_bialgebras, group_algebra, sweedler4, taft
from cacti.cobar import (Bidegree, check_d_squared, cobar, d_external, d_internal, differential,
                         parse_element, reduced_coproduct, u_of_grouplike, word)
from cacti.errors import NotGroupLike
from cacti.scalar import GF, QQ


@pytest.fixture
def K():
    return cobar(sweedler4())


def test_reduced_coproducts(K):
    assert reduced_coproduct(K, "u_g") == word(K, "u_g", "u_g")
    assert reduced_coproduct(K, "x") == word(K, "u_g", "x")
    assert reduced_coproduct(K, "xg") == word(K, "xg", "u_g")


def test_differential_examples(K):
    assert differential(word(K, "x")) == word(K, "u_g", "x")
    assert differential(word(K, "u_g", "x")).is_zero()
    assert differential(word(K, "xg", "x")).is_zero()
    assert d_internal(word(K, "x")).is_zero()


def test_bidegrees(K):
    w = word(K, "x", "u_g")
    assert w.bidegree() == Bidegree(0, 2)
    assert w.bidegree().total == 2
    assert d_external(w).bidegree() == Bidegree(0, 3)


@pytest.mark.parametrize("F", [QQ, GF(7)], ids=str)
def test_d_squared_catalog(F):
    for H in catalog_bialgebras(F):
        assert check_d_squared(cobar(H), 3).passed, H.name


def test_d_squared_sweedler_ext4(K):
    assert check_d_squared(K, 4).passed


def test_d_squared_detects_noncoassociative(broken_h4):
    rep = check_d_squared(cobar(broken_h4), 3)
    assert not rep.passed
    assert int(rep.failures()[0].name.split("=")[1].rstrip("]")) <= 3


def test_grouplike_alternating_doublings():
    K = cobar(group_algebra(2))
    u = word(K, "u_g")
    for n in range(1, 5):
        w = word(K, *(["u_g"] * n))
        # d(u^n) = sum_i (-1)^i u^(n+1) = u^(n+1) if n odd, 0 if n even
        expect = word(K, *(["u_g"] * (n + 1))) if n % 2 else w.scale(0)
        assert differential(w) == expect
    assert differential(u) == word(K, "u_g", "u_g")


def test_u_of_grouplike():
    K = cobar(sweedler4())
    assert u_of_grouplike(K, "g") == word(K, "u_g")
    assert u_of_grouplike(K, "1").is_zero()
    with pytest.raises(NotGroupLike):
        u_of_grouplike(K, "x")
    K3 = cobar(group_algebra(3))
    u = u_of_grouplike(K3, "g")
    assert differential(u) == word(K3, "u_g", "u_g")


def test_skew_primitive_formula():
    # Taft: Delta x = x (x) g + 1 (x) x, so dx = x|u_g
    K = cobar(taft(3, 1, GF(7)))
    assert differential(word(K, "x")) == word(K, "x", "u_g")


def test_text_roundtrip(K):
    e = word(K, "x", "u_g").scale(3) - word(K, "xg")
    assert parse_element(K, e.to_text()) == e
    assert e.to_text() == "3 * x|u_g + -1 * xg"
