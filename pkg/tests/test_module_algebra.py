import json

import pytest

from cacti.algebra import MorphismMatrix, dual_bialgebra
from cacti.cacti_ops import brace
from cacti.catalog import catalog_bialgebras, sweedler4, taft, trunc_poly
from cacti.cobar import cobar, word
from cacti.errors import NotABialgebraMorphism, ParseError
from cacti.hochschild import hbrace, hcup, hdifferential, hgbracket
from cacti.module_algebra import (MUTATIONS, ActionMap, action_from_dict, action_to_dict,
                                  check_module_algebra, induced, lift_bialgebra_morphism,
                                  pairing_action, sweedler_action, trivial_action,
                                  verify_cacti_morphism)
from cacti.scalar import GF, QQ


@pytest.fixture(scope="module")
def act():
    return sweedler_action()


def _failed(rep):
    return sorted(c.name for c in rep.failures())


def test_sweedler_action_axioms(act):
    rep = check_module_algebra(act)
    assert rep.passed
    assert [c.name for c in rep.results] == ["degree", "module", "unit", "h(ab)", "d.g."]


def test_sweedler_action_is_cacti_morphism(act):
    assert verify_cacti_morphism(act, max_ext=3, samples=30, seed=1).passed


def test_letter_operators(act):
    A = act.A
    y = A.index("y")
    assert act.act({act.H.index("g"): 1}, {y: 1}) == {y: -1}
    assert act.act({act.H.index("x"): 1}, {y: 1}) == {A.unit: 1}


def test_psi_is_a_cocycle_with_vanishing_bracket(act):
    K = cobar(act.H)
    psi = induced(act, word(K, "xg", "x"))
    y = act.A.index("y")
    assert psi(y, y) == {act.A.unit: -1}
    assert sum(1 for _ in psi.entries()) == 1
    assert hdifferential(psi).is_zero()
    assert hgbracket(psi, psi).is_zero()


@pytest.mark.parametrize("mutation", MUTATIONS)
def test_each_mutation_breaks_only_its_axiom(mutation):
    rep = check_module_algebra(sweedler_action(mutation=mutation))
    assert _failed(rep) == [mutation]


@pytest.mark.parametrize("mutation", (None,) + MUTATIONS)
def test_product_rule_fails_iff_chain_map_fails(mutation):
    a = sweedler_action(mutation=mutation)
    product_rule = "h(ab)" in _failed(check_module_algebra(a))
    chain_map = "chain_map[d_e]" in _failed(verify_cacti_morphism(a, samples=30))
    assert product_rule == chain_map


def test_mutation_effects_on_the_induced_map():
    effects = {m: _failed(verify_cacti_morphism(sweedler_action(mutation=m), samples=30)) for m in MUTATIONS}
    assert effects["h(ab)"] == ["chain_map[d_e]", "letters:d"]
    assert effects["d.g."] == ["chain_map[d_i]", "letters:d"]
    assert "B_2" in effects["module"] and "chain_map[d_e]" not in effects["module"]


def test_dual_sweedler_relations():
    H = sweedler4()
    D = dual_bialgebra(H)
    from cacti.algebra import check_axioms
    assert check_axioms(D).passed
    g = D.vec({"eps": 1, "g^*": -2})
    x = D.vec({"x^*": 1, "xg^*": 1})
    assert D.mul(g, g) == {D.unit: 1}
    assert D.mul(g, x) == {k: -c for k, c in D.mul(x, g).items()}
    assert D.mul(x, x) == {}


@pytest.mark.parametrize("H", catalog_bialgebras(QQ) + catalog_bialgebras(GF(7)),
                         ids=lambda H: f"{H.name}/{H.field}")
def test_pairing_action_is_module_algebra(H):
    assert check_module_algebra(pairing_action(H)).passed


def test_pairing_action_induces_cacti_morphism():
    assert verify_cacti_morphism(pairing_action(taft(3, 1, GF(7))), samples=10).passed


def test_trivial_action():
    a = trivial_action(sweedler4(), trunc_poly(2))
    assert check_module_algebra(a).passed


def test_b2_of_letters_is_induced_product(act):
    K = cobar(act.H)
    for u in K.labels:
        for v in K.labels:
            lhs = hbrace(2, induced(act, word(K, u)), [induced(act, word(K, v))])
            assert lhs == induced(act, brace(2, word(K, u), [word(K, v)]))


def test_cup_of_letters_is_induced_word(act):
    K = cobar(act.H)
    assert hcup(induced(act, word(K, "x")), induced(act, word(K, "xg"))) == \
        induced(act, word(K, "x", "xg"))


def test_lift_of_isomorphism():
    f = MorphismMatrix(sweedler4(), taft(2), {"1": {"1": 1}, "g": {"g": 1}, "x": {"gx": 1}, "xg": {"x": -1}})
    lift, rep = lift_bialgebra_morphism(f, samples=25)
    assert rep.passed
    K, K2 = lift.K, lift.K2
    assert lift(word(K, "u_g", "x")) == word(K2, "u_g", "gx")


@pytest.mark.parametrize("scale", [1, 2])
def test_lift_of_rescaling(scale):
    H = sweedler4()
    f = MorphismMatrix(H, H, {"1": {"1": 1}, "g": {"g": 1}, "x": {"x": scale}, "xg": {"xg": scale}})
    lift, rep = lift_bialgebra_morphism(f, samples=20)
    assert rep.passed
    assert lift(word(lift.K, "xg", "x")) == word(lift.K2, "xg", "x").scale(scale * scale)


def test_lift_rejects_non_morphism():
    H = sweedler4()
    f = MorphismMatrix(H, H, {"1": {"1": 1}, "g": {"g": 1}, "x": {"xg": 1}, "xg": {"x": 1}})
    with pytest.raises(NotABialgebraMorphism):
        lift_bialgebra_morphism(f)


def test_action_dict_round_trip(act, tmp_path):
    data = json.loads(json.dumps(action_to_dict(act)))
    back = action_from_dict(data)
    assert back.rho == act.rho
    assert check_module_algebra(back).passed
    ref = {"bialgebra": "catalog:sweedler4", "algebra": "catalog:trunc_poly:2", "action": data["action"]}
    assert action_from_dict(ref).rho == act.rho


def test_action_file_errors():
    with pytest.raises(ParseError):
        action_from_dict({"bialgebra": "catalog:sweedler4"})
    with pytest.raises(ParseError):
        action_from_dict({"bialgebra": "catalog:sweedler4", "algebra": "catalog:trunc_poly:2",
                          "action": {"gy": {"y": 1}}})


def test_action_map_defaults_unit_row():
    a = ActionMap(sweedler4(), trunc_poly(2), {})
    assert a.operator(a.H.unit) == {0: {0: 1}, 1: {1: 1}}
