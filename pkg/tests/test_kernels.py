import os
import subprocess
import sys

import numpy as np
import pytest

from siegelcomb import _kernels as K


@pytest.mark.parametrize("g", range(1, 7))
def test_numba_and_numpy_agree(g):
    table = K.signed_permutations(g)
    x = np.arange(g, 0, -1, dtype=np.int64) * 3 - 1
    assert np.array_equal(K.lengths_numpy(table), K.lengths_numba(table))
    assert np.array_equal(K.act_numpy(table, x), K.act_numba(table, x))


def root_count_length(sp):
    """Oracle: count positive roots sent to negative ones by acting on explicit root vectors."""
    g = len(sp)

    def image(v):
        out = [0] * g
        for k, s in enumerate(sp):
            out[abs(s) - 1] += (1 if s > 0 else -1) * v[k]
        return out

    def positive(v):
        return next(x for x in v if x) > 0

    roots = []
    for a in range(g):
        for b in range(a + 1, g):
            for sign in (1, -1):
                v = [0] * g
                v[a], v[b] = 1, -sign
                roots.append(v)
        v = [0] * g
        v[a] = 2
        roots.append(v)
    return sum(not positive(image(r)) for r in roots)


@pytest.mark.parametrize("g", range(1, 5))
def test_lengths_match_root_count(g):
    table = K.signed_permutations(g)
    lens = K.lengths(table)
    for row, n in zip(table.tolist(), lens.tolist()):
        assert root_count_length(row) == n


def test_env_flag_selects_numpy():
    code = "from siegelcomb import _kernels; print(_kernels.USE_NUMBA)"
    env = dict(os.environ, SIEGELCOMB_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
    env["SIEGELCOMB_DISABLE_NUMBA"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == str(K.NUMBA_AVAILABLE)
