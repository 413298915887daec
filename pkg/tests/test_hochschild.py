import random

import pytest

from cacti.catalog import catalog_algebras, matrix_algebra, super_line, trunc_poly
from cacti.errors import IncompatibleChain
from cacti.hochschild import (HochschildModel, SkewDerivationChain, braces,
                              cochain_from_dict, cochain_to_dict, hcup, hdifferential, hgbracket,
                              hochschild, hstar, inner_skew_derivation, shifted_degree, skew_cocycle,
                              well_graded_report)
from cacti.identities import run_identity
from cacti.scalar import GF, QQ


@pytest.fixture
def C():
    return hochschild(trunc_poly(2))


def sample(C, q, seed):
    return HochschildModel(C.A).sample(random.Random(seed), q)


@pytest.mark.parametrize("A", [trunc_poly(2), matrix_algebra(2), super_line(), trunc_poly(3, GF(5))],
                         ids=lambda A: A.name)
def test_d_squared_vanishes(A):
    C = hochschild(A)
    for q in (0, 1, 2):
        for seed in range(3):
            f = sample(C, q, seed)
            assert hdifferential(hdifferential(f)).is_zero()


@pytest.mark.parametrize("A", catalog_algebras(QQ), ids=lambda A: A.name)
def test_d_squared_exhaustive_on_basis(A):
    # every basis cochain of arity <= 3, through the matrices of the complex
    from cacti.homology import HochschildCochains, differential_matrix
    hc = HochschildCochains(A, max_q=3)
    for n in range(-1, 3):
        if hc.size(n) and hc.size(n + 1) and hc.size(n + 2):
            assert differential_matrix(hc, n + 1).matmul(differential_matrix(hc, n)).is_zero()


def test_differential_of_identity_is_minus_product(C):
    assert hdifferential(C.identity()) == -C.mu_cochain()


def test_product_is_associative(C):
    mu = C.mu_cochain()
    assert hstar(mu, mu).is_zero()
    assert hgbracket(mu, mu).is_zero()


def test_cup_on_ungraded_algebra(C):
    A = C.A
    y = A.index("y")
    f = C.linear_map({y: {y: 1}})
    g = C.linear_map({0: {y: 1}})
    fg = hcup(f, g)
    assert fg(y, 0) == A.mul(f(y), g(0))
    assert fg(0, 0) == {}


def test_brace_of_arity_one_is_composition():
    A = matrix_algebra(2)
    C = hochschild(A)
    rng = random.Random(4)
    D = C.linear_map({a: {b: rng.randint(-2, 2) for b in range(A.dim)} for a in range(A.dim)})
    E = C.linear_map({a: {b: rng.randint(-2, 2) for b in range(A.dim)} for a in range(A.dim)})
    DE = braces(D, [E])
    for a in range(A.dim):
        expect = {}
        for b, c in E(a).items():
            for k, x in D(b).items():
                expect[k] = expect.get(k, 0) + c * x
        assert DE(a) == A.vec(expect)


def test_bracket_of_odd_element_is_twice_star(C):
    f = sample(C, 2, 1)
    assert shifted_degree(f) % 2 == 1
    assert hgbracket(f, f) == hstar(f, f).scale(2)


@pytest.mark.parametrize("A", [trunc_poly(2), super_line()], ids=lambda A: A.name)
def test_identity_suite(A):
    assert well_graded_report(A, max_q=3, samples=15, seed=2).passed


class UnsignedCup(HochschildModel):
    """Negative control: the cup product without its (-1)^{||f||} factor."""

    def cup(self, f, g):
        r = hcup(f, g)
        return r.scale(-1) if shifted_degree(f) % 2 else r


def test_unsigned_cup_breaks_derivation_rule():
    rep = run_identity("d_is_derivation", UnsignedCup(trunc_poly(2)), samples=30, seed=0)
    assert not rep.passed


def test_cochain_dict_round_trip(C):
    f = sample(C, 2, 7)
    assert cochain_from_dict(C, cochain_to_dict(f)) == f


# ---------------------------------------------------------------------------
# skew-derivation chains
# ---------------------------------------------------------------------------

def _m2():
    A = matrix_algebra(2)
    ident = {a: {a: 1} for a in range(A.dim)}
    return A, ident


def _conjugation(A, u, uinv):
    return {a: A.mul(A.mul(A.vec(u), {a: 1}), A.vec(uinv)) for a in range(A.dim)}


def _chain(A, autos, cs):
    """Inner skew derivations d_i = c_i h_i - g_i c_i with (g_i, h_i) = (autos[i], autos[i+1])."""
    gs, hs = autos[:-1], autos[1:]
    ds = [inner_skew_derivation(A, c, g, h) for c, g, h in zip(cs, gs, hs)]
    return SkewDerivationChain(A, ds, gs, hs)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_compatible_chain_is_cocycle(n):
    A, ident = _m2()
    phi = _conjugation(A, {"1": 1, "e12": 1}, {"1": 1, "e12": -1})
    autos = [ident] + [phi] * (n - 1) + [ident]
    cs = [{"e12": 1}, {"e21": 1, "e11": 2}, {"1": 1, "e11": -1}][:n]
    f, ok = skew_cocycle(A, _chain(A, autos, cs))
    assert ok
    assert not f.is_zero()
    assert hdifferential(f).is_zero()


def test_mismatched_middle_automorphism_breaks_cocycle():
    A, ident = _m2()
    phi = _conjugation(A, {"1": 1, "e12": 1}, {"1": 1, "e12": -1})
    cs = [{"e12": 1}, {"e21": 1}]
    ds = [inner_skew_derivation(A, cs[0], ident, ident), inner_skew_derivation(A, cs[1], phi, ident)]
    chain = SkewDerivationChain(A, ds, [ident, phi], [ident, ident])
    res = skew_cocycle(A, chain)
    assert res.violations == ["h_1 != g_2"]
    assert not hdifferential(res.cochain).is_zero()
    with pytest.raises(IncompatibleChain):
        skew_cocycle(A, chain, strict=True)


@pytest.mark.parametrize("end", ["first", "last"])
def test_non_identity_boundary_automorphism_breaks_cocycle(end):
    A, ident = _m2()
    phi = _conjugation(A, {"1": 1, "e12": 1}, {"1": 1, "e12": -1})
    autos = [phi, ident] if end == "first" else [ident, phi]
    res = skew_cocycle(A, _chain(A, autos, [{"e21": 1}]))
    assert res.violations == (["g_1 != Id"] if end == "first" else ["h_1 != Id"])
    assert not hdifferential(res.cochain).is_zero()


def test_chain_rejects_non_skew_derivation():
    from cacti.errors import MalformedPresentation
    A, ident = _m2()
    with pytest.raises(MalformedPresentation):
        SkewDerivationChain(A, [{0: {0: 1}}], [ident], [ident])
