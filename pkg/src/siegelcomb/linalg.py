"""Exact dense linear algebra over Q and Z on small blocks.

Matrices are lists of rows.  Entries are ``int`` or ``Fraction``; nothing here
touches floating point.
"""
from __future__ import annotations

from fractions import Fraction as Q
from math import gcd
from typing import Sequence

Matrix = list[list]

__all__ = [
    "transpose",
    "matmul",
    "rref",
    "rank",
    "rank_mod_p",
    "nullspace",
    "integer_kernel",
    "elementary_divisors",
    "normalize_divisors",
    "primitive",
]


def transpose(M: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col) if a and b) for col in Bt] for row in A]


def rref(M: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    A = [[Q(x) for x in row] for row in M]
    pivots: list[int] = []
    if not A:
        return A, pivots
    nrows, ncols = len(A), len(A[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A, pivots


def rank(M: Sequence[Sequence]) -> int:
    """Rank over Q via fraction-free elimination."""
    A = [list(row) for row in M if any(row)]
    if not A:
        return 0
    if any(isinstance(x, Q) for row in A for x in row):
        return len(rref(A)[1])
    return len(_int_echelon(A))


def rank_mod_p(M: Sequence[Sequence[int]], p: int) -> int:
    A = [[int(x) % p for x in row] for row in M]
    A = [row for row in A if any(row)]
    if not A:
        return 0
    r = 0
    ncols = len(A[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(r + 1, len(A)):
            if A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return r


def _int_echelon(A: Matrix) -> Matrix:
    """Fraction-free (Bareiss) echelon rows of an integer matrix."""
    A = [list(row) for row in A]
    nrows, ncols = len(A), len(A[0])
    r, prev = 0, 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, nrows):
            a = A[i][c]
            A[i] = [(p * x - a * y) // prev for x, y in zip(A[i], A[r])]
        prev = p
        r += 1
        if r == nrows:
            break
    return A[:r]


def nullspace(M: Sequence[Sequence], ncols: int | None = None) -> list[list[Q]]:
    """Basis of {x : M x = 0} over Q."""
    if not M:
        n = ncols or 0
        return [[Q(int(i == j)) for i in range(n)] for j in range(n)]
    R, pivots = rref(M)
    n = len(R[0])
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Q(0)] * n
        v[f] = Q(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def integer_kernel(M: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Z-basis of the saturated lattice {x in Z^n : M x = 0}.

    Unimodular row reduction of [M^T | I]: rows whose M^T part vanishes carry
    kernel vectors in their identity part, and they span a primitive sublattice.
    """
    n = ncols if not M else len(M[0])
    m = len(M)
    rows = []
    Mt = transpose(M, n) if M else [[] for _ in range(n)]
    for j in range(n):
        rows.append([int(x) for x in Mt[j]] + [int(i == j) for i in range(n)])
    r = 0
    for c in range(m):
        # gcd-reduce column c over rows r..
        while True:
            nz = [i for i in range(r, n) if rows[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[piv] = rows[piv], rows[r]
            done = True
            for i in range(r + 1, n):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                r += 1
                break
        if r == n:
            break
    return [row[m:] for row in rows[r:]]


def elementary_divisors(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    A = [[int(x) for x in row] for row in M if any(row)]
    diag: list[int] = []
    while A and A[0]:
        # drop zero columns
        cols = [c for c in range(len(A[0])) if any(row[c] for row in A)]
        if not cols:
            break
        A = [[row[c] for c in cols] for row in A]
        while True:
            i0, j0 = min(
                ((i, j) for i, row in enumerate(A) for j, x in enumerate(row) if x),
                key=lambda ij: abs(A[ij[0]][ij[1]]),
            )
            A[0], A[i0] = A[i0], A[0]
            for row in A:
                row[0], row[j0] = row[j0], row[0]
            p = A[0][0]
            clean = True
            for i in range(1, len(A)):
                if A[i][0]:
                    q = A[i][0] // p
                    A[i] = [x - q * y for x, y in zip(A[i], A[0])]
                    clean = clean and not A[i][0]
            for j in range(1, len(A[0])):
                if A[0][j]:
                    q = A[0][j] // p
                    for row in A:
                        row[j] -= q * row[0]
                    clean = clean and not A[0][j]
            if clean:
                break
        diag.append(abs(A[0][0]))
        A = [row[1:] for row in A[1:]]
        A = [row for row in A if any(row)]
    return normalize_divisors(diag)


def normalize_divisors(diag: Sequence[int]) -> list[int]:
    """Turn any diagonalisation into the divisibility chain (gcd/lcm exchange)."""
    d = sorted(int(x) for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                a, b = d[i], d[j]
                if b % a:
                    g = gcd(a, b)
                    d[i], d[j] = g, a * b // g
                    changed = True
        d.sort()
    return d


def primitive(v: Sequence[Q]) -> list[int]:
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for x in v:
        den = den * Q(x).denominator // gcd(den, Q(x).denominator)
    ints = [int(Q(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints
