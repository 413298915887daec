import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cacti import linalg
from cacti.linalg import SparseMatrix, _fallback, rank, rank_kernel, solve
from cacti.scalar import GF, QQ


def _random_low_rank(F, rows, cols, r, rng):
    left = SparseMatrix(F, rows, r, {(i, j): rng.randint(-3, 3) for i in range(rows) for j in range(r)})
    right = SparseMatrix(F, r, cols, {(i, j): rng.randint(-3, 3) for i in range(r) for j in range(cols)})
    return left.matmul(right)


def test_identity_rank():
    I = SparseMatrix(QQ, 3, 3, {(i, i): 1 for i in range(3)})
    assert rank_kernel(I) == (3, [])


@pytest.mark.parametrize("F", [QQ, GF(7), GF(101)], ids=str)
def test_kernel_is_kernel(F):
    rng = random.Random(3)
    for _ in range(10):
        M = _random_low_rank(F, 6, 8, rng.randint(0, 4), rng)
        r, ker = rank_kernel(M)
        assert r + len(ker) == M.cols
        for v in ker:
            assert M.apply(v) == {}


def test_constructed_rank_over_q():
    rng = random.Random(5)
    M = _random_low_rank(QQ, 12, 10, 3, rng)
    assert rank(M) <= 3
    F = SparseMatrix(QQ, 3, 3, {(0, 0): 1, (1, 1): 1, (2, 2): 1})
    assert rank(F) == 3


def test_solve():
    M = SparseMatrix(QQ, 2, 2, {(0, 0): 2, (1, 1): 3})
    assert solve(M, {0: 1, 1: 1}) == {0: Fraction(1, 2), 1: Fraction(1, 3)}
    singular = SparseMatrix(QQ, 2, 2, {(0, 0): 1})
    assert solve(singular, {1: 1}) is None


def test_triplets():
    M = SparseMatrix(GF(5), 2, 3, {(0, 2): 7, (1, 0): -1})
    assert M.triplets() == "% 2 3 2\n0 2 2\n1 0 4"


def test_backend_reported():
    assert linalg.BACKEND in ("compiled", "python")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.sampled_from([2, 3, 7, 101, 65521]), st.integers(0, 10**6))
def test_backends_agree(rows, cols, p, seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(0, p, size=(rows, cols))
    if rng.random() < 0.5:
        a[:, rng.integers(0, cols)] = 0
    m1, piv1 = _fallback.rref_modp(a, p)
    m2, piv2 = linalg.dense_rref_modp(a, p)
    assert list(piv1) == list(piv2)
    assert np.array_equal(np.asarray(m1), np.asarray(m2))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_rank_pivot_order_independent(seed):
    rng = random.Random(seed)
    M = _random_low_rank(QQ, 7, 6, rng.randint(0, 5), rng)
    perm = list(range(M.cols))
    rng.shuffle(perm)
    P = SparseMatrix(QQ, M.rows, M.cols, {(r, perm[c]): x for (r, c), x in M.entries.items()})
    assert rank(M) == rank(P) == rank(M.transpose())


def test_pure_python_switch():
    import os
    import subprocess
    import sys
    code = ("from cacti import linalg; from cacti.homology import CobarComplex, betti; "
            "from cacti.catalog import sweedler4; from cacti.scalar import GF; "
            "print(linalg.BACKEND, betti(CobarComplex(sweedler4(GF(7))), (0, 4)).betti)")
    env = dict(os.environ, CACTI_PURE_PYTHON="1")
    r = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert r.stdout.strip() == "python [1, 0, 1, 0, 1]"
