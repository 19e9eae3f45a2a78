"""Integral Weyl modules of GSp(2g) carved out of tensor powers of the standard module.

V has the ordered basis (e_g, ..., e_1, e_1*, ..., e_g*), indices 0..2g-1.
Tensors are sparse dicts from multi-indices (tuples) to exact coefficients.
Every operator here preserves the torus weight, so kernels, ranks and Smith
forms are computed one weight block at a time.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from math import factorial, gcd, prod
from typing import Iterable, Sequence

from . import linalg
from .characters import weyl_dimension
from .root_datum import Weight, is_prime

MAX_TENSOR_DIMENSION = 5 * 10 ** 5

Tensor = dict  # multi-index -> coefficient


# ------------------------------------------------------------------ standard module


@dataclass(frozen=True)
class StandardModule:
    g: int

    def __post_init__(self) -> None:
        if self.g < 1:
            raise ValueError("genus must be positive")

    @property
    def dim(self) -> int:
        return 2 * self.g

    def labels(self) -> list[str]:
        g = self.g
        return [f"e{g - a}" for a in range(g)] + [f"e{a + 1}*" for a in range(g)]

    def pairing(self, a: int, b: int) -> int:
        """<b_a, b_b>: +1 on (e_i, e_i*), -1 on (e_i*, e_i), 0 otherwise."""
        n = self.dim
        if a + b != n - 1:
            return 0
        return 1 if a < self.g else -1

    def gram(self) -> list[list[int]]:
        return [[self.pairing(a, b) for b in range(self.dim)] for a in range(self.dim)]

    def basis_weight(self, a: int) -> tuple[int, ...]:
        """Semisimple torus weight of b_a; every basis vector has central coordinate 1."""
        g = self.g
        v = [0] * g
        if a < g:
            v[a] = 1
        else:
            v[2 * g - 1 - a] = -1
        return tuple(v)

    def psi(self) -> Tensor:
        """Image of the form sum J_ab b_a^v (x) b_b^v under V* -> V inverse to v -> <v, ->."""
        J = [[Q(x) for x in row] for row in self.gram()]
        n = self.dim
        Jinv = _inverse(J)
        out: Tensor = {}
        for a in range(n):
            for b in range(n):
                if not J[a][b]:
                    continue
                for c in range(n):
                    if not Jinv[a][c]:
                        continue
                    for d in range(n):
                        coef = J[a][b] * Jinv[a][c] * Jinv[b][d]
                        if coef:
                            out[(c, d)] = out.get((c, d), 0) + coef
        return {k: _int(v) for k, v in out.items() if v}


def _inverse(A: list[list[Q]]) -> list[list[Q]]:
    n = len(A)
    aug = [row + [Q(int(i == j)) for j in range(n)] for i, row in zip(range(n), A)]
    R, piv = linalg.rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in R]


def _int(x):
    x = Q(x)
    return int(x) if x.denominator == 1 else x


# ------------------------------------------------------------------- tensor module


def _check_budget(g: int, s: int) -> None:
    n = (2 * g) ** s
    if n > MAX_TENSOR_DIMENSION:
        raise ValueError(f"V^(x){s} for g={g} has dimension {n} > budget {MAX_TENSOR_DIMENSION}")


@dataclass(frozen=True)
class TensorModule:
    base: StandardModule
    s: int

    @property
    def dim(self) -> int:
        return self.base.dim ** self.s

    def weight(self, multi: Sequence[int]) -> tuple[int, ...]:
        w = [0] * self.base.g
        for a in multi:
            for k, x in zip(range(self.base.g), self.base.basis_weight(a)):
                w[k] += x
        return tuple(w)

    def blocks(self) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
        return _blocks(self.base.g, self.s)


@lru_cache(maxsize=None)
def _blocks(g: int, s: int) -> dict:
    _check_budget(g, s)
    V = StandardModule(g)
    T = TensorModule(V, s)
    out: dict = defaultdict(list)
    for multi in itertools.product(range(V.dim), repeat=s):
        out[T.weight(multi)].append(multi)
    return dict(out)


def _check_pair(i: int, j: int, s: int) -> None:
    if not (1 <= i < j <= s):
        raise IndexError(f"need 1 <= i < j <= {s}, got ({i}, {j})")


def contraction(i: int, j: int, x: Tensor, g: int) -> Tensor:
    """phi_(i,j): v_1 (x) ... (x) v_s -> <v_i, v_j> (omit v_i, v_j); positions are 1-based."""
    V = StandardModule(g)
    out: Tensor = {}
    for multi, coef in x.items():
        _check_pair(i, j, len(multi))
        pr = V.pairing(multi[i - 1], multi[j - 1])
        if pr and coef:
            rest = multi[: i - 1] + multi[i : j - 1] + multi[j:]
            out[rest] = out.get(rest, 0) + pr * coef
    return {k: v for k, v in out.items() if v}


def insertion(i: int, j: int, y: Tensor, g: int) -> Tensor:
    """psi_(i,j): put psi in slots i and j of a degree s tensor (s = deg y + 2)."""
    psi = StandardModule(g).psi()
    out: Tensor = {}
    for multi, coef in y.items():
        _check_pair(i, j, len(multi) + 2)
        for (a, b), c in psi.items():
            new = list(multi)
            new.insert(i - 1, a)
            new.insert(j - 1, b)
            key = tuple(new)
            out[key] = out.get(key, 0) + c * coef
    return {k: v for k, v in out.items() if v}


def theta(i: int, j: int, x: Tensor, g: int) -> Tensor:
    return insertion(i, j, contraction(i, j, x, g), g)


def pairs(s: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, s + 1) for j in range(i + 1, s + 1)]


def big_theta(x: Tensor, g: int, s: int) -> Tensor:
    out: Tensor = {}
    for i, j in pairs(s):
        for k, v in theta(i, j, x, g).items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def kappa(g: int) -> int:
    """phi_(1,2)(psi), measured."""
    val = contraction(1, 2, StandardModule(g).psi(), g).get((), 0)
    return _int(val)


# ------------------------------------------------------------------ block matrices


def _columns(block: list, images: Iterable[Tensor]) -> list[list]:
    """Matrix (rows = block multi-indices) whose columns are the given tensors."""
    index = {m: r for r, m in zip(range(len(block)), block)}
    cols = []
    for t in images:
        col = [0] * len(block)
        for m, v in t.items():
            col[index[m]] = v
        cols.append(col)
    return linalg.transpose(cols, len(block)) if cols else [[] for _ in block]


def phi_block(g: int, s: int, weight: tuple) -> list[list[int]]:
    """Stacked contractions restricted to one weight block: rows (pair, target index)."""
    block = _blocks(g, s)[weight]
    if s < 2:
        return []
    targets = _blocks(g, s - 2).get(weight, [])
    tindex = {m: r for r, m in zip(range(len(targets)), targets)}
    P = pairs(s)
    rows = [[0] * len(block) for _ in range(len(P) * len(targets))]
    for c, multi in zip(range(len(block)), block):
        for pi, (i, j) in zip(range(len(P)), P):
            for m, v in contraction(i, j, {multi: 1}, g).items():
                rows[pi * len(targets) + tindex[m]][c] += v
    return [row for row in rows if any(row)]


def psi_block(g: int, s: int, weight: tuple) -> list[list[int]]:
    """Columns: insertions psi_(i,j) of every degree s-2 basis tensor of the same weight."""
    block = _blocks(g, s)[weight]
    if s < 2:
        return [[] for _ in block]
    sources = _blocks(g, s - 2).get(weight, [])
    images = [insertion(i, j, {m: 1}, g) for i, j in pairs(s) for m in sources]
    return _columns(block, images)


def theta_block(g: int, s: int, weight: tuple) -> list[list]:
    block = _blocks(g, s)[weight]
    return _columns(block, [big_theta({m: 1}, g, s) for m in block])


@dataclass
class TracelessSpace:
    """V^<s> = kernel of all contractions, with a saturated integral basis per weight block."""

    g: int
    s: int
    blocks: dict[tuple, tuple[list, list[list[int]]]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return sum(len(basis) for _, basis in self.blocks.values())

    def block_dims(self) -> dict[tuple, int]:
        return {w: len(b) for w, (_, b) in sorted(self.blocks.items()) if b}


def traceless_subspace(g: int, s: int) -> TracelessSpace:
    _check_budget(g, s)
    out = TracelessSpace(g, s)
    for weight, block in _blocks(g, s).items():
        Phi = phi_block(g, s, weight)
        out.blocks[weight] = (block, linalg.integer_kernel(Phi, len(block)))
    return out


def psi_image_rank(g: int, s: int) -> int:
    total = 0
    for weight in _blocks(g, s):
        cols = psi_block(g, s, weight)
        total += linalg.rank(linalg.transpose(cols)) if cols and cols[0] else 0
    return total


# ------------------------------------------------------------------ idempotent check


def _minimal_polynomial(blocks: list[list[list]]) -> list[Q]:
    """Monic minimal polynomial (low degree first) of a block-diagonal matrix."""
    mats = [b for b in blocks if b]
    if not mats:
        return [Q(1)]
    powers = [[_identity(len(b)) for b in mats]]
    while True:
        cur = powers[-1]
        nxt = [linalg.matmul(b, c) for b, c in zip(mats, cur)]
        powers.append(nxt)
        flat = [[x for blk in P for row in blk for x in row] for P in powers]
        ker = linalg.nullspace(linalg.transpose(flat))
        if ker:
            v = ker[0]
            lead = v[-1]
            return [x / lead for x in v]


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _integer_roots(poly: Sequence[Q]) -> list[int] | None:
    """Integer roots (with multiplicity) of a monic rational polynomial, or None if it does not split over Z."""
    coeffs = list(poly)
    roots = []
    while len(coeffs) > 1:
        for r in [0] if coeffs[0] == 0 else _divisors(coeffs[0]):
            if sum(c * r ** k for k, c in zip(range(len(coeffs)), coeffs)) == 0:
                break
        else:
            return None
        roots.append(r)
        # divide by (X - r), working from the top coefficient down
        n = len(coeffs) - 1
        q = [Q(0)] * n
        q[n - 1] = coeffs[n]
        for k in range(n - 1, 0, -1):
            q[k - 1] = coeffs[k] + r * q[k]
        coeffs = q
    return sorted(roots)


def _divisors(x: Q) -> list[int]:
    if Q(x).denominator != 1:
        return []
    n = abs(int(x))
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out += [d, -d]
    return out


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out, p = [], 2
    while p * p <= n:
        while n % p == 0:
            if p not in out:
                out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass
class IdempotentReport:
    g: int
    s: int
    p: int
    kappa: int
    kappa_matches_g: bool
    theta_zero: bool
    theta_squared_is_kappa_theta: bool
    theta_min_poly: list[str]
    theta_eigenvalues: list[int] | None
    cross_terms_nonzero: bool
    traceless_dim: int
    psi_image_rank: int
    direct_sum_over_Q: bool
    complement_index: int
    bad_primes: list[int]
    split_over_Zp: bool
    idempotent_from_theta: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def idempotent_check(g: int, s: int, p: int) -> IdempotentReport:
    """Measure Theta = sum psi_(i,j) phi_(i,j) and the splitting V^(x)s = V^<s> + im Psi."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if (2 * g) % p == 0:
        raise ValueError(f"p={p} divides 2g")
    _check_budget(g, s)
    k = kappa(g)
    tblocks = [theta_block(g, s, w) for w in _blocks(g, s)]
    theta_zero = all(not any(any(row) for row in b) for b in tblocks)
    sq_ok = all(
        linalg.matmul(b, b) == [[k * x for x in row] for row in b] for b in tblocks if b and b[0]
    )
    mp = _minimal_polynomial(tblocks)
    roots = _integer_roots(mp)
    # overlapping cross terms, e.g. phi_(1,2) psi_(1,3), on every basis tensor of degree s - 2
    cross = False
    if s >= 3:
        for m in itertools.product(range(2 * g), repeat=s - 2):
            if contraction(1, 2, insertion(1, 3, {m: 1}, g), g):
                cross = True
                break
    K = traceless_subspace(g, s)
    psi_rank = psi_image_rank(g, s)
    N = (2 * g) ** s
    direct = K.dim + psi_rank == N
    index = 1
    full = True
    for weight, (block, basis) in K.blocks.items():
        cols = [list(v) for v in basis] + linalg.transpose(psi_block(g, s, weight)) if s >= 2 else [list(v) for v in basis]
        divs = linalg.elementary_divisors(cols)
        if len(divs) != len(block):
            full = False
        index *= prod(divs)
    bad = _prime_factors(index) if full else []
    # e = 1 - Theta / kappa is an idempotent with image V^<s> only if Theta^2 = kappa Theta
    idem = sq_ok and (theta_zero or k != 0)
    return IdempotentReport(
        g=g,
        s=s,
        p=p,
        kappa=k,
        kappa_matches_g=(k == g),
        theta_zero=theta_zero,
        theta_squared_is_kappa_theta=sq_ok,
        theta_min_poly=[str(c) for c in mp],
        theta_eigenvalues=roots,
        cross_terms_nonzero=cross,
        traceless_dim=K.dim,
        psi_image_rank=psi_rank,
        direct_sum_over_Q=direct and full,
        complement_index=index if full else 0,
        bad_primes=bad,
        split_over_Zp=full and index % p != 0,
        idempotent_from_theta=idem,
    )


# ------------------------------------------------------------------ Young symmetrizers


Perm = tuple  # images of 0..s-1


def _compose(a: Perm, b: Perm) -> Perm:
    return tuple(a[x] for x in b)


def _sign(p: Perm) -> int:
    seen, sign = set(), 1
    for start in range(len(p)):
        if start in seen:
            continue
        n, x = 0, start
        while x not in seen:
            seen.add(x)
            x = p[x]
            n += 1
        if n % 2 == 0:
            sign = -sign
    return sign


def tableau(partition: Sequence[int], fill: str = "row") -> list[list[int]]:
    """Standard tableau of the shape, filled along rows or down columns (entries 0-based)."""
    shape = [x for x in partition if x]
    if fill == "row":
        out, n = [], 0
        for length in shape:
            out.append(list(range(n, n + length)))
            n += length
        return out
    if fill == "column":
        out = [[] for _ in shape]
        n = 0
        for col in range(shape[0] if shape else 0):
            for row, length in zip(range(len(shape)), shape):
                if col < length:
                    out[row].append(n)
                    n += 1
        return out
    raise ValueError(f"unknown fill {fill!r}")


def _subgroup(groups: list[list[int]], s: int) -> list[Perm]:
    """Product of symmetric groups on the given disjoint index sets."""
    factors = []
    for grp in groups:
        factors.append([dict(zip(grp, img)) for img in itertools.permutations(grp)])
    out = []
    for choice in itertools.product(*factors):
        p = list(range(s))
        for d in choice:
            for a, b in d.items():
                p[a] = b
        out.append(tuple(p))
    return out


def young_symmetrizer(partition: Sequence[int], s: int | None = None, fill: str = "row") -> dict[Perm, int]:
    """c = a * b in Z[S_s]: a sums the row group, b is the signed sum over the column group."""
    shape = sorted((int(x) for x in partition if x), reverse=True)
    n = sum(shape)
    if s is None:
        s = n
    if n != s:
        raise ValueError(f"partition {tuple(partition)} has size {n}, not {s}")
    T = tableau(shape, fill)
    rows = T
    cols = [[row[c] for row in T if c < len(row)] for c in range(len(T[0]))] if T else []
    a = _subgroup(rows, s)
    b = _subgroup(cols, s)
    out: dict[Perm, int] = {}
    for x in a:
        for y in b:
            key = _compose(x, y)
            out[key] = out.get(key, 0) + _sign(y)
    return {k: v for k, v in out.items() if v}


def permute(perm: Perm, x: Tensor) -> Tensor:
    """v_1 (x) ... (x) v_s -> tensor with v_k placed in slot perm[k]."""
    out: Tensor = {}
    for multi, coef in x.items():
        new = [0] * len(multi)
        for k, a in zip(range(len(multi)), multi):
            new[perm[k]] = a
        key = tuple(new)
        out[key] = out.get(key, 0) + coef
    return out


def apply_group_element(elt: dict[Perm, int], x: Tensor) -> Tensor:
    out: Tensor = {}
    for perm, c in elt.items():
        for k, v in permute(perm, x).items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def group_product(x: dict[Perm, int], y: dict[Perm, int]) -> dict[Perm, int]:
    out: dict[Perm, int] = {}
    for a, c in x.items():
        for b, d in y.items():
            k = _compose(a, b)
            out[k] = out.get(k, 0) + c * d
    return {k: v for k, v in out.items() if v}


def hook_product(partition: Sequence[int]) -> int:
    shape = [x for x in partition if x]
    conj = [sum(1 for r in shape if r > c) for c in range(shape[0])] if shape else []
    return prod(shape[i] - j + conj[j] - i - 1 for i in range(len(shape)) for j in range(shape[i]))


# ------------------------------------------------------------------- lattice report


@dataclass
class LatticeReport:
    lam: Weight
    s: int
    rank: int
    elementary_divisors: list[int]
    p_free: dict[int, bool]
    expected_rank: int
    fill: str = "row"

    @property
    def rank_matches(self) -> bool:
        return self.rank == self.expected_rank

    @property
    def torsion_primes(self) -> list[int]:
        return sorted({q for d in self.elementary_divisors for q in _prime_factors(d)})

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "s": self.s,
            "rank": self.rank,
            "expected_rank": self.expected_rank,
            "elementary_divisors": self.elementary_divisors,
            "p_free": {str(k): v for k, v in self.p_free.items()},
            "torsion_primes": self.torsion_primes,
        }


def weyl_lattice(lam: Weight, p: int, fill: str = "row") -> LatticeReport:
    """c_lam applied to the integral traceless tensors; rank, Smith invariants, p-freeness."""
    if not lam.is_dominant():
        raise ValueError(f"weight {lam} is not dominant")
    if lam.central != lam.size:
        raise ValueError(f"weyl_lattice needs c = sum(a); got c={lam.central}, sum={lam.size}")
    s = lam.size
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if p <= s:
        raise ValueError(f"need p > |lambda| = {s} for integral symmetrizer coefficients, got p={p}")
    g = lam.g
    _check_budget(g, s)
    expected = weyl_dimension(lam)
    if s == 0:
        return LatticeReport(lam, 0, 1, [1], {p: True}, expected, fill)
    c = young_symmetrizer(lam.coords, s, fill)
    K = traceless_subspace(g, s)
    rank_total = 0
    divisors: list[int] = []
    for weight, (block, basis) in sorted(K.blocks.items()):
        if not basis:
            continue
        images = [apply_group_element(c, dict(zip(block, v))) for v in basis]
        images = [{m: x for m, x in t.items() if x} for t in images]
        if not any(images):
            continue
        cols = linalg.transpose(_columns(block, images))
        divs = linalg.elementary_divisors(cols)
        rank_total += len(divs)
        divisors.extend(divs)
    divisors = linalg.normalize_divisors(divisors)
    return LatticeReport(lam, s, rank_total, divisors, {p: all(d % p for d in divisors)}, expected, fill)


# ------------------------------------------------------------------ Liebermann trick


def liebermann_projector(exponents: Sequence[int], target: int, m: int) -> list[Q]:
    """Polynomial P (low degree first) with P(m^j) = [j == target] for j in exponents.

    Applied to [m]^*, which acts by m^j on the degree-j part, it projects onto
    the degree-``target`` part.
    """
    nodes = [Q(m) ** j for j in exponents]
    t = Q(m) ** target
    others = [x for x, j in zip(nodes, exponents) if j != target]
    if len(set(nodes)) != len(nodes):
        raise ValueError(f"m={m} does not separate the eigenvalues m^j")
    poly = [Q(1)]
    for x in others:
        # multiply by (X - x) / (t - x)
        new = [Q(0)] * (len(poly) + 1)
        for k, c in zip(range(len(poly)), poly):
            new[k + 1] += c
            new[k] -= c * x
        poly = [c / (t - x) for c in new]
    return poly


def liebermann_denominator(exponents: Sequence[int], target: int, m: int) -> int:
    return abs(prod(m ** target - m ** j for j in exponents if j != target))


def liebermann_p_integral(exponents: Sequence[int], target: int, m: int, p: int) -> bool:
    return all(Q(c).denominator % p for c in liebermann_projector(exponents, target, m))


__all__ = [
    "MAX_TENSOR_DIMENSION",
    "StandardModule",
    "TensorModule",
    "TracelessSpace",
    "IdempotentReport",
    "LatticeReport",
    "contraction",
    "insertion",
    "theta",
    "big_theta",
    "kappa",
    "pairs",
    "phi_block",
    "psi_block",
    "theta_block",
    "traceless_subspace",
    "psi_image_rank",
    "idempotent_check",
    "tableau",
    "young_symmetrizer",
    "permute",
    "apply_group_element",
    "group_product",
    "hook_product",
    "weyl_lattice",
    "liebermann_projector",
    "liebermann_denominator",
    "liebermann_p_integral",
]
