import random

import pytest

from cacti.catalog import dg_super_line, matrix_algebra, super_line, sweedler4, taft, trunc_poly
from cacti.cobar import cobar, word
from cacti.errors import NotACocycle
from cacti.homology import (CobarComplex, HochschildCochains, betti, class_bracket, cohomology_class,
                            differential_matrix, image_rank, is_coboundary, representatives,
                            same_class)
from cacti.module_algebra import induced, sweedler_action
from cacti.scalar import GF


@pytest.fixture(scope="module")
def cx():
    return CobarComplex(sweedler4())


def test_first_differential_matrix(cx):
    M = differential_matrix(cx, 1)
    assert M.shape == (9, 3)
    from cacti.linalg import rank
    assert rank(M) == 3


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_matrices_compose_to_zero(cx, n):
    assert differential_matrix(cx, n + 1).matmul(differential_matrix(cx, n)).is_zero()


def test_sweedler_betti(cx):
    assert betti(cx, (1, 6)).betti == [0, 1, 0, 1, 0, 1]


@pytest.mark.parametrize("p", [5, 7, 11])
def test_betti_independent_of_characteristic(p):
    assert betti(CobarComplex(sweedler4(GF(p))), (0, 6)).betti == [1, 0, 1, 0, 1, 0, 1]


def test_degree_two_representative(cx):
    K = cx.K
    (rep,) = representatives(cx, 2)
    assert rep.representative == word(K, "xg", "x")
    assert is_coboundary(cx, word(K, "xg", "x")) == (False, None)


def test_coboundary_witness(cx):
    K = cx.K
    z = word(K, "u_g", "x")          # d x
    zero, w = is_coboundary(cx, z)
    assert zero and cx.d(w) == z


def test_non_cocycle_rejected(cx):
    with pytest.raises(NotACocycle):
        is_coboundary(cx, word(cx.K, "x"))


def test_class_invariant_under_perturbation(cx):
    K = cx.K
    rng = random.Random(0)
    base = cohomology_class(cx, word(K, "xg", "x"))
    for _ in range(5):
        w = cx.from_vector(1, {i: rng.randint(-3, 3) for i in range(3)})
        moved = cohomology_class(cx, word(K, "xg", "x") + cx.d(w).scale(rng.randint(1, 4)))
        assert moved.is_zero is False
        assert same_class(base, moved)
        assert image_rank(cx, 2, [moved.representative, base.representative]) == 1


def test_taft_betti():
    assert betti(CobarComplex(taft(3, 1, GF(7))), (0, 3)).betti == [1, 0, 1, 0]


@pytest.mark.parametrize("A,expected", [
    (trunc_poly(2), [2, 1, 1, 1, 1]),
    (matrix_algebra(2), [1, 0, 0, 0]),
    (super_line(), [1, 1, 0, 0]),
], ids=["trunc_poly", "M_2", "super_line"])
def test_hochschild_betti(A, expected):
    assert betti(HochschildCochains(A, max_q=len(expected)), (0, len(expected) - 1)).betti == expected


def test_dg_super_line_is_acyclic():
    table = betti(HochschildCochains(dg_super_line(), max_q=4), (-2, 3))
    assert table.betti == [0] * 6


def test_psi_class_and_its_bracket():
    act = sweedler_action()
    K = cobar(act.H)
    hc = HochschildCochains(act.A, max_q=4)
    psi = induced(act, word(K, "xg", "x"))
    cls = cohomology_class(hc, psi)
    assert cls.is_zero is False
    br = class_bracket(cls, cls)
    assert br.is_zero and br.representative.is_zero()


def test_betti_table_text(cx):
    text = betti(cx, (0, 2)).to_text()
    assert text.splitlines()[0] == "# cohomology of Omega(sweedler4) over Q"
    assert text == betti(CobarComplex(sweedler4()), (0, 2)).to_text()
