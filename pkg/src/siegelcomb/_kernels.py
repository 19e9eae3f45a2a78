"""Batch kernels over the hyperoctahedral group, stored as signed arrays.

Row ``sp`` of a table encodes the element sending e_k to sign(sp[k]) e_(|sp[k]|-1),
positions taken in display order.  Each kernel has a numba and a numpy
implementation; ``SIEGELCOMB_DISABLE_NUMBA=1`` selects numpy (it is also used
when numba is missing).
"""
from __future__ import annotations

import itertools
import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

NUMBA_AVAILABLE = njit is not None
USE_NUMBA = NUMBA_AVAILABLE and os.environ.get("SIEGELCOMB_DISABLE_NUMBA", "") not in ("1", "true", "yes")


def signed_permutations(g: int) -> np.ndarray:
    """All 2^g g! signed arrays, permutations outermost, in a fixed order."""
    rows = []
    for perm in itertools.permutations(range(1, g + 1)):
        for signs in itertools.product((1, -1), repeat=g):
            rows.append([s * p for s, p in zip(signs, perm)])
    return np.asarray(rows, dtype=np.int64).reshape(-1, g)


# ---------------------------------------------------------------- numpy versions


def lengths_numpy(sp: np.ndarray) -> np.ndarray:
    s = np.sign(sp)
    pos = np.abs(sp)
    g = sp.shape[1]
    total = (s < 0).sum(axis=1)
    if g > 1:
        a, b = np.triu_indices(g, 1)
        before = pos[:, a] < pos[:, b]
        total = total + (np.where(before, s[:, a], -s[:, b]) < 0).sum(axis=1)
        total = total + (np.where(before, s[:, a], s[:, b]) < 0).sum(axis=1)
    return total.astype(np.int64)


def act_numpy(sp: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Images of one integer vector under every row: out[r, |sp[r,k]|-1] = sign * x[k]."""
    n, g = sp.shape
    out = np.zeros((n, g), dtype=np.int64)
    rows = np.repeat(np.arange(n), g)
    out[rows, (np.abs(sp) - 1).ravel()] = (np.sign(sp) * x[None, :]).ravel()
    return out


# ---------------------------------------------------------------- numba versions

if NUMBA_AVAILABLE:

    @njit
    def lengths_numba(sp):
        n, g = sp.shape
        out = np.zeros(n, np.int64)
        for r in range(n):
            total = 0
            for a in range(g):
                sa = 1 if sp[r, a] > 0 else -1
                pa = abs(sp[r, a])
                if sa < 0:
                    total += 1
                for b in range(a + 1, g):
                    sb = 1 if sp[r, b] > 0 else -1
                    if pa < abs(sp[r, b]):
                        if sa < 0:
                            total += 2
                    else:
                        # e_a - e_b goes negative iff sb > 0, e_a + e_b iff sb < 0
                        total += 1
            out[r] = total
        return out

    @njit
    def act_numba(sp, x):
        n, g = sp.shape
        out = np.zeros((n, g), np.int64)
        for r in range(n):
            for k in range(g):
                v = sp[r, k]
                if v > 0:
                    out[r, v - 1] = x[k]
                else:
                    out[r, -v - 1] = -x[k]
        return out

else:  # pragma: no cover
    lengths_numba = lengths_numpy
    act_numba = act_numpy


def lengths(sp: np.ndarray) -> np.ndarray:
    sp = np.ascontiguousarray(sp, dtype=np.int64)
    return lengths_numba(sp) if USE_NUMBA else lengths_numpy(sp)


def act(sp: np.ndarray, x) -> np.ndarray:
    sp = np.ascontiguousarray(sp, dtype=np.int64)
    x = np.ascontiguousarray(x, dtype=np.int64)
    return act_numba(sp, x) if USE_NUMBA else act_numpy(sp, x)


def levi_keys(images: np.ndarray, r: int) -> np.ndarray:
    """Canonical form of each row under S_r x (S_(g-r) x signs): sort the head, sort |tail|."""
    head = np.sort(images[:, :r], axis=1)
    tail = np.sort(np.abs(images[:, r:]), axis=1)
    return np.concatenate([head, tail], axis=1)
