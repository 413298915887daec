import pytest

from cacti.algebra import (MorphismMatrix, bidual_identification, check_axioms, check_bialgebra_morphism,
                           counit_kernel, dual_bialgebra, is_isomorphism, transport)
from cacti.catalog import (catalog_algebras, catalog_bialgebras, dual_group_algebra, group_algebra,
                           make_example, parse_catalog_id, sweedler4, taft, trivial_bialgebra)
from cacti.errors import MalformedPresentation, UnsupportedParams
from cacti.io import presentation_from_dict, presentation_to_dict
from cacti.scalar import GF, QQ

from conftest import rebuild

FIELDS = [QQ, GF(5), GF(7)]


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_catalog_passes_axioms(F):
    for P in catalog_bialgebras(F) + catalog_algebras(F):
        rep = check_axioms(P)
        assert rep.passed, (P.name, rep.to_text())


def test_sweedler_shape(H4):
    assert H4.dim == 4
    assert [H4.basis[i] for i in H4.grouplikes()] == ["1", "g"]


def test_counit_mutation_fails_with_witness(H4):
    bad = rebuild(H4, {"x": {("x", "1"): 1}})
    rep = check_axioms(bad)
    assert not rep["counit"].passed
    assert rep["counit"].witness == "x"


def test_trivial_bialgebra():
    assert check_axioms(trivial_bialgebra()).passed


def test_group_algebra_is_cocommutative_grouplike():
    G = group_algebra(3)
    for i in range(G.dim):
        assert G.delta_basis(i) == {(i, i): 1}
        for j in range(G.dim):
            assert G.mul_basis(i, j) == G.mul_basis(j, i)


def test_taft_two_is_sweedler(H4):
    T = taft(2)
    # Sweedler's x corresponds to g x in the Taft presentation
    f = MorphismMatrix(H4, T, {"1": {"1": 1}, "g": {"g": 1}, "x": {"gx": 1}, "xg": {"x": -1}})
    assert is_isomorphism(f)


def test_taft_parameters():
    with pytest.raises(UnsupportedParams):
        taft(3)                       # no cube root of unity in Q
    with pytest.raises(UnsupportedParams):
        taft(3, 1, GF(5))             # 3 does not divide 4
    with pytest.raises(UnsupportedParams):
        sweedler4(GF(2))
    assert check_axioms(taft(4, 1, GF(5))).passed


def test_catalog_ids():
    assert parse_catalog_id("taft:3:1") == ("taft", (3, 1))
    assert parse_catalog_id("taft(3,1)") == ("taft", (3, 1))
    assert parse_catalog_id("group_algebra(Z_3)") == ("group_algebra", (3,))
    assert make_example("group_algebra", 3).name == group_algebra(3).name
    with pytest.raises(UnsupportedParams):
        make_example("nonsense")


def test_dual_of_group_algebra_is_functions():
    D = dual_bialgebra(group_algebra(3))
    F = dual_group_algebra(3)
    f = MorphismMatrix(D, F, {"eps": {"1": 1}, "g^*": {"delta1": 1}, "g2^*": {"delta2": 1}})
    assert is_isomorphism(f)


def _dual_elements(H4):
    D = dual_bialgebra(H4)
    ghat = {D.index("eps"): 1, D.index("g^*"): -2}      # values (1, -1, 0, 0)
    xhat = {D.index("x^*"): 1, D.index("xg^*"): 1}      # values (0, 0, 1, 1)
    return D, ghat, xhat


def test_dual_sweedler_relations(H4):
    D, ghat, xhat = _dual_elements(H4)
    assert check_axioms(D).passed
    assert D.mul(ghat, ghat) == {D.unit: 1}
    gx, xg = D.mul(ghat, xhat), D.mul(xhat, ghat)
    assert gx and gx == {k: -c for k, c in xg.items()}
    assert D.mul(xhat, xhat) == {}


def test_sweedler_self_dual(H4):
    D, ghat, xhat = _dual_elements(H4)
    f = MorphismMatrix(H4, D, {"1": {D.unit: 1}, "g": ghat, "x": xhat, "xg": D.mul(xhat, ghat)})
    assert is_isomorphism(f)


@pytest.mark.parametrize("H", catalog_bialgebras(GF(7)), ids=lambda H: H.name)
def test_bidual(H):
    DD, f = bidual_identification(H)
    assert check_bialgebra_morphism(f).passed
    assert transport(f).same_constants(H)


def test_morphism_examples(H4):
    assert check_bialgebra_morphism(MorphismMatrix.identity(H4)).passed
    scale = MorphismMatrix(H4, H4, {"1": {"1": 1}, "g": {"g": 1}, "x": {"x": 2}, "xg": {"xg": 2}})
    assert check_bialgebra_morphism(scale).passed
    bad = MorphismMatrix(H4, H4, {"1": {"1": 1}, "g": {"1": 1}, "x": {"x": 1}, "xg": {"x": 1}})
    rep = check_bialgebra_morphism(bad)
    assert rep["comultiplicative"].witness == "x"


def test_counit_kernel(H4):
    K = counit_kernel(H4)
    assert K.labels == ("u_g", "x", "xg")
    for v in K.vbasis:
        assert H4.eps(v) == 0
    ug, x, xg = (K.index(s) for s in K.labels)
    assert K.reduced_coproduct(ug) == {(ug, ug): 1}
    assert K.reduced_coproduct(x) == {(ug, x): 1}
    assert K.reduced_coproduct(xg) == {(xg, ug): 1}
    assert counit_kernel(group_algebra(2)).reduced_coproduct(0) == {(0, 0): 1}


@pytest.mark.parametrize("F", [QQ, GF(7)], ids=str)
def test_io_roundtrip(F):
    for P in catalog_bialgebras(F) + catalog_algebras(F):
        Q = presentation_from_dict(presentation_to_dict(P))
        assert Q.same_constants(P) and Q.basis == P.basis


def test_io_errors():
    with pytest.raises(MalformedPresentation):
        presentation_from_dict({"name": "a", "basis": ["1"], "mult": {"1*1": {"z": "1"}}})
    with pytest.raises(Exception):
        presentation_from_dict({"name": "a", "basis": ["1"], "mult": {"1*1": {"1": 1.5}}})
