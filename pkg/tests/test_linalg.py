import random

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from siegelcomb import linalg


def random_matrix(rnd, m, n, density=0.6, bound=5):
    return [[rnd.randint(-bound, bound) if rnd.random() < density else 0 for _ in range(n)] for _ in range(m)]


@pytest.mark.parametrize("seed", range(5))
def test_against_sympy(seed):
    rnd = random.Random(seed)
    for _ in range(60):
        m, n = rnd.randint(1, 7), rnd.randint(1, 7)
        M = random_matrix(rnd, m, n)
        S = smith_normal_form(Matrix(M), domain=ZZ)
        want = sorted(abs(S[i, i]) for i in range(min(m, n)) if S[i, i] != 0)
        assert linalg.elementary_divisors(M) == want
        assert linalg.rank(M) == Matrix(M).rank()
        K = linalg.integer_kernel(M)
        assert len(K) == n - Matrix(M).rank() == len(linalg.nullspace(M))
        for v in K:
            assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)
        if K:
            # saturated: the kernel basis extends to a basis of Z^n
            assert linalg.elementary_divisors(K) == [1] * len(K)


def test_rank_mod_p():
    M = [[2, 0], [0, 3]]
    assert linalg.rank_mod_p(M, 3) == 1
    assert linalg.rank_mod_p(M, 5) == 2


def test_normalize_divisors():
    assert linalg.normalize_divisors([4, 6]) == [2, 12]
    assert linalg.normalize_divisors([3, 1, 0]) == [1, 3]
