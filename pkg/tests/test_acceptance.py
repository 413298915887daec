"""Acceptance suite: one PASS/FAIL line per criterion, with its wall time.

Run ``pytest tests/test_acceptance.py -v`` (the lines are printed even
under output capture) or ``python tests/test_acceptance.py``.
"""

import io
import time
from contextlib import contextmanager, redirect_stdout

import pytest

from cacti.algebra import check_axioms, dual_bialgebra
from cacti.cacti_ops import CobarModel, cacti_data, check_data_d_squared, extract_bialgebra, round_trip
from cacti.catalog import (catalog_bialgebras, group_algebra, matrix_algebra, super_line, sweedler4,
                           taft, trunc_poly)
from cacti.cli import main as cli_main
from cacti.cobar import cobar, word
from cacti.errors import ExtractionFailure
from cacti.hochschild import (HochschildModel, SkewDerivationChain, hdifferential,
                              inner_skew_derivation, skew_cocycle)
from cacti.homology import (CobarComplex, HochschildCochains, betti, class_bracket, cohomology_class,
                            image_rank, is_coboundary, representatives)
from cacti.identities import run_suite
from cacti.module_algebra import (MUTATIONS, check_module_algebra, induced, pairing_action,
                                  sweedler_action, verify_cacti_morphism)
from cacti.scalar import GF, QQ

SAMPLES = 100


@contextmanager
def criterion(capsys, number, title, limit=None):
    """Time the block and print ``PASS``/``FAIL`` for it."""
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        if limit is not None and dt >= limit:
            ok = False
        budget = f" (limit {limit:g} s)" if limit is not None else ""
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}  [{dt:.2f} s{budget}]"
        with capsys.disabled():
            print("\n" + line)
    assert dt < (limit or float("inf")), f"criterion {number} took {dt:.2f} s"


def test_criterion_1_sweedler_cobar_cohomology(capsys):
    with criterion(capsys, 1, "H^n(Omega H4)/Q = 0,1,0,1,0,1 for n = 1..6; xg|x spans H^2", limit=10):
        cx = CobarComplex(sweedler4(QQ))
        assert betti(cx, (1, 6)).betti == [0, 1, 0, 1, 0, 1]
        z = word(cx.K, "xg", "x")
        assert cx.d(z).is_zero()
        assert is_coboundary(cx, z) == (False, None)
        assert len(representatives(cx, 2)) == 1
        assert image_rank(cx, 2, [z]) == 1


STRUCTURES = [
    ("Omega(sweedler4)", lambda: CobarModel(cobar(sweedler4(QQ)))),
    ("Omega(taft(3)/F7)", lambda: CobarModel(cobar(taft(3, 1, GF(7))))),
    ("Omega(Z3)", lambda: CobarModel(cobar(group_algebra(3, QQ)))),
    ("C*(k[y]/y^2)", lambda: HochschildModel(trunc_poly(2, QQ))),
    ("C*(M_2)", lambda: HochschildModel(matrix_algebra(2, QQ))),
    ("C*(super_line)", lambda: HochschildModel(super_line(QQ))),
]


def test_criterion_2_identity_suite(capsys):
    with criterion(capsys, 2, f"Cacti identities on 6 structures, {SAMPLES} seeded samples each", limit=60):
        failed = []
        for name, build in STRUCTURES:
            rep = run_suite(build(), samples=SAMPLES, seed=0)
            assert all(r.checked >= SAMPLES for r in rep.results if r.name != "well_graded_vanishing")
            if not rep.passed:
                failed.append(f"{name}: {[r.name for r in rep.failures()]}")
        assert not failed, failed


def test_criterion_3_extraction(capsys, broken_h4):
    with criterion(capsys, 3, "extract_bialgebra round trip; non-coassociative input rejected"):
        for F in (QQ, GF(7)):
            for H in catalog_bialgebras(F):
                same, _ = round_trip(H)
                assert same, H.name
        data = cacti_data(cobar(broken_h4))
        rep = check_data_d_squared(data, 3)
        (bad,) = rep.failures()
        assert int(bad.name.split("=")[1].rstrip("]")) <= 3 and bad.witness
        with pytest.raises(ExtractionFailure):
            extract_bialgebra(data)


def _failed(rep):
    return sorted(r.name for r in rep.failures())


def test_criterion_4_sweedler_action(capsys):
    with criterion(capsys, 4, "H4 on k[y]/y^2: letter conditions, chain map, cup, B_2; mutations; h(ab) iff chain map"):
        act = sweedler_action()
        assert check_module_algebra(act).passed
        rep = verify_cacti_morphism(act, max_ext=3, samples=SAMPLES, seed=0)
        assert rep.passed
        assert {"chain_map[d_e]", "chain_map[d_i]", "cup", "B_2"} <= {r.name for r in rep.results}
        for m in (None,) + MUTATIONS:
            a = sweedler_action(mutation=m)
            axioms = _failed(check_module_algebra(a))
            assert axioms == ([] if m is None else [m])
            chain_fails = "chain_map[d_e]" in _failed(verify_cacti_morphism(a, samples=30, seed=0))
            assert ("h(ab)" in axioms) == chain_fails


def test_criterion_5_psi(capsys):
    with criterion(capsys, 5, "dPsi = 0 exhaustively and [Psi, Psi] = 0 in HH^3"):
        act = sweedler_action()
        psi = induced(act, word(cobar(act.H), "xg", "x"))
        assert not psi.is_zero()
        assert hdifferential(psi).is_zero()          # every entry of the dense tensor
        hc = HochschildCochains(act.A, max_q=4)
        br = class_bracket(cohomology_class(hc, psi), cohomology_class(hc, psi))
        assert br.degree == 3 and br.is_zero


def _conjugation(A, u, uinv):
    return {a: A.mul(A.mul(A.vec(u), {a: 1}), A.vec(uinv)) for a in range(A.dim)}


def test_criterion_6_skew_derivation_chains(capsys):
    with criterion(capsys, 6, "skew-derivation chains of arity <= 3: compatible iff cocycle"):
        A = matrix_algebra(2, QQ)
        ident = {a: {a: 1} for a in range(A.dim)}
        phi = _conjugation(A, {"1": 1, "e12": 1}, {"1": 1, "e12": -1})
        psi = _conjugation(A, {"1": 1, "e21": 1}, {"1": 1, "e21": -1})
        cs = [{"e12": 1}, {"e21": 1, "e11": 2}, {"e11": 1, "e12": -1}]

        def cocycle(gs, hs):
            ds = [inner_skew_derivation(A, c, g, h) for c, g, h in zip(cs, gs, hs)]
            res = skew_cocycle(A, SkewDerivationChain(A, ds, gs, hs))
            return res, hdifferential(res.cochain)

        for n in (1, 2, 3):
            autos = [ident] + [phi, psi][: n - 1] + [ident]
            res, d = cocycle(autos[:-1], autos[1:])
            assert res.compatible and not res.cochain.is_zero() and d.is_zero()
            # non-identity boundary automorphisms
            res, d = cocycle([phi] + autos[1:-1], autos[1:])
            assert "g_1 != Id" in res.violations and not d.is_zero()
            res, d = cocycle(autos[:-1], autos[1:-1] + [phi])
            assert f"h_{n} != Id" in res.violations and not d.is_zero()
            if n >= 2:
                # h_1 != g_2 with both ends the identity
                gs = [ident, psi] + [ident] * (n - 2)
                hs = [phi] + [ident] * (n - 1)
                res, d = cocycle(gs, hs)
                assert res.violations == ["h_1 != g_2"] and not d.is_zero()


def test_criterion_7_duals(capsys):
    with criterion(capsys, 7, "dual(sweedler4) relations; pairing actions are module algebras"):
        H = sweedler4(QQ)
        D = dual_bialgebra(H)
        assert check_axioms(D).passed
        g = D.vec({"eps": 1, "g^*": -2})
        x = D.vec({"x^*": 1, "xg^*": 1})
        assert D.mul(g, g) == {D.unit: 1}
        assert D.mul(g, x) == {k: -c for k, c in D.mul(x, g).items()}
        assert D.mul(x, x) == {}
        for F in (QQ, GF(7)):
            for B in catalog_bialgebras(F):
                assert check_module_algebra(pairing_action(B)).passed, B.name


def _cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(argv)
    return code, buf.getvalue()


def test_criterion_8_characteristic_and_determinism(capsys):
    with criterion(capsys, 8, "Betti of Omega(H4) agree over Q, F5, F7, F11; reruns byte-identical"):
        ref = betti(CobarComplex(sweedler4(QQ)), (0, 6)).betti
        for p in (5, 7, 11):
            assert betti(CobarComplex(sweedler4(GF(p))), (0, 6)).betti == ref
        for argv in (["cobar-cohomology", "catalog:sweedler4", "--window", "0", "5"],
                     ["identities", "catalog:sweedler4", "--samples", "20", "--seed", "4"],
                     ["induced", "action:sweedler", "--verify", "--samples", "20"]):
            first, second = _cli(argv), _cli(argv)
            assert first == second and first[0] == 0


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
