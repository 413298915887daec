import time

import pytest

from cacti.cacti_ops import (CobarModel, brace, braces, cacti_data, check_all_identities,
                             check_data_d_squared, check_identity, extract_bialgebra, gbracket,
                             h_action, round_trip, star)
from cacti.catalog import catalog_bialgebras, group_algebra, sweedler4, taft
from cacti.cobar import cobar, differential, word
from cacti.errors import ExtractionFailure
from cacti.identities import IDENTITY_IDS, run_identity
from cacti.scalar import GF, QQ


@pytest.fixture
def K():
    return cobar(sweedler4())


def test_star_on_letters(K):
    u, x = word(K, "u_g"), word(K, "x")
    assert star(u, u) == u.scale(-2)
    # B_2 carries the sign (-1)^{|x|} with |x| = 1 on letters
    assert brace(2, u, [u]) == u.scale(2)
    assert star(x, u) == word(K, "xg") - x
    assert star(u, x) == (word(K, "xg") + x).scale(-1)
    assert star(x, x).is_zero()


def test_brace_inserts_into_each_letter(K):
    u = word(K, "u_g")
    assert braces(word(K, "x", "u_g"), [u]) == word(K, "x", "u_g").scale(-3) + word(K, "xg", "u_g")


def test_too_many_inputs_vanish(K):
    u = word(K, "u_g")
    assert braces(word(K, "x"), [u, u]).is_zero()


def test_bracket_of_even_element_with_itself(K):
    assert gbracket(word(K, "x"), word(K, "x")).is_zero()


def test_h_action_by_grouplike(K):
    g = K.parent.index("g")
    assert h_action(K, {g: 1}, word(K, "x", "u_g")) == word(K, "xg", "u_g")


@pytest.mark.parametrize("H", catalog_bialgebras(QQ) + catalog_bialgebras(GF(7)), ids=lambda H: f"{H.name}/{H.field}")
def test_round_trip_identical(H):
    same, back = round_trip(H)
    assert same
    assert back.mult == H.mult and back.counit == H.counit


def test_extraction_rejects_non_coassociative(broken_h4):
    data = cacti_data(cobar(broken_h4))
    rep = check_data_d_squared(data, 3)
    assert not rep.passed
    bad = rep.failures()[0]
    assert int(bad.name.split("=")[1].rstrip("]")) <= 3
    with pytest.raises(ExtractionFailure, match="d\\^2"):
        extract_bialgebra(data)


def test_extraction_rejects_non_associative_product(K):
    data = cacti_data(K)
    x = K.labels.index("x")
    u = K.labels.index("u_g")
    data.star[(x, x)] = {u: 1}
    with pytest.raises(ExtractionFailure):
        extract_bialgebra(data)


@pytest.mark.parametrize("identity", IDENTITY_IDS)
def test_identities_on_sweedler(K, identity):
    assert check_identity(identity, K, samples=40, seed=3).passed


@pytest.mark.parametrize("H", [taft(3, 1, GF(7)), group_algebra(3)], ids=lambda H: H.name)
def test_full_suite(H):
    t = time.perf_counter()
    rep = check_all_identities(cobar(H), samples=25, seed=1)
    assert rep.passed, rep.to_text()
    assert time.perf_counter() - t < 60


class FlippedBraces(CobarModel):
    """Negative control: braces with the wrong overall sign."""

    def braces(self, x, ys):
        return braces(x, ys).scale(-1)


def test_flipped_brace_sign_is_caught(K):
    rep = run_identity("boundary_of_Bm", FlippedBraces(K), samples=30, seed=0)
    assert [c.name for c in rep.failures()] == ["boundary_of_Bm[m=2]"]
    assert not run_identity("brace_relation", FlippedBraces(K), samples=30, seed=0).passed


def test_seeded_reports_are_reproducible(K):
    a = check_identity("preLie", K, samples=20, seed=9).to_text()
    b = check_identity("preLie", K, samples=20, seed=9).to_text()
    assert a == b


def test_differential_is_derivation_of_cup(K):
    a, b = word(K, "x"), word(K, "xg", "u_g")
    from cacti.cacti_ops import cup
    assert differential(cup(a, b)) == cup(differential(a), b) - cup(a, differential(b))
