"""Weight multiplicities (Freudenthal) and dimension formulas for GSp(2g) and its Levi subgroups.

Weights here are plain tuples in the ambient lattice Z^g (display order); the
central coordinate of a representation is constant on its weights and is
reattached by the callers.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction as Q
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

from .linalg import rref
from .root_datum import Weight, h_pairing

MAX_DIMENSION = 10 ** 6

Vec = tuple


def _ip(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y))


class RootSystem:
    """Reduced root system in Z^n with the standard inner product.

    Built from a list of simple roots; positive roots are generated by simple
    reflections.  Used for Sp(2g) (type C) and for Levi subgroups
    GL(r) x Sp(2g - 2r) embedded in the same coordinates.
    """

    def __init__(self, n: int, simple: Iterable[Sequence[int]]):
        self.n = n
        self.simple = [tuple(int(x) for x in a) for a in simple]
        self.positive = self._generate_positive()
        self.rho = tuple(sum((Q(a[k]) for a in self.positive), Q(0)) / 2 for k in range(n))
        self._solver = self._coefficient_solver()

    def _generate_positive(self) -> list[tuple[int, ...]]:
        found = set(self.simple)
        frontier = list(self.simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for a in self.simple:
                    if beta == a:
                        continue
                    gamma = self.reflect(beta, a)
                    if gamma not in found and self._is_nonneg_combo(gamma):
                        found.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        return sorted(found, reverse=True)

    def _is_nonneg_combo(self, x) -> bool:
        # Positive roots of these systems are those whose first nonzero coordinate
        # in the simple-root expansion is positive; simple roots are independent.
        if not hasattr(self, "_solver"):
            self._solver = self._coefficient_solver()
        c = self.simple_coefficients(x)
        return c is not None and all(v >= 0 for v in c)

    @staticmethod
    def reflect(x: Sequence, a: Sequence[int]) -> tuple:
        n = 2 * _ip(x, a)
        aa = _ip(a, a)
        k = Q(n, aa) if not isinstance(n, Q) else n / aa
        if isinstance(k, Q) and k.denominator == 1:
            k = int(k)
        return tuple(xi - k * ai for xi, ai in zip(x, a))

    def coroot_pairing(self, x: Sequence, a: Sequence[int]):
        return Q(2 * _ip(x, a)) / _ip(a, a)

    def _coefficient_solver(self):
        rows = [[Q(a[k]) for a in self.simple] for k in range(self.n)]
        return rows

    def simple_coefficients(self, x: Sequence) -> list[Q] | None:
        """Coefficients of x in the simple roots, or None if x is outside their span."""
        if not self.simple:
            return [] if all(v == 0 for v in x) else None
        aug = [row + [Q(v)] for row, v in zip(self._solver, x)]
        R, piv = rref(aug)
        m = len(self.simple)
        if m in piv:
            return None
        out = [Q(0)] * m
        for row, p in zip(R, piv):
            out[p] = row[m]
        return out

    def preceq(self, mu: Sequence, lam: Sequence) -> bool:
        """mu <= lam in dominance order (lam - mu a non-negative integral root combination)."""
        c = self.simple_coefficients(tuple(a - b for a, b in zip(lam, mu)))
        return c is not None and all(v >= 0 and v.denominator == 1 for v in c)

    def height(self, x: Sequence) -> Q:
        return sum(self.simple_coefficients(x))

    def is_dominant(self, mu: Sequence) -> bool:
        return all(_ip(mu, a) >= 0 for a in self.simple)

    def dominant_conjugate(self, mu: Sequence) -> tuple:
        mu = tuple(mu)
        while True:
            for a in self.simple:
                if _ip(mu, a) < 0:
                    mu = self.reflect(mu, a)
                    break
            else:
                return mu

    def orbit(self, mu: Sequence) -> set[tuple]:
        seen = {tuple(mu)}
        frontier = [tuple(mu)]
        while frontier:
            nxt = []
            for x in frontier:
                for a in self.simple:
                    y = self.reflect(x, a)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def weyl_dimension(self, lam: Sequence) -> int:
        num = prod((self.coroot_pairing(tuple(x + r for x, r in zip(lam, self.rho)), a) for a in self.positive), start=Q(1))
        den = prod((self.coroot_pairing(self.rho, a) for a in self.positive), start=Q(1))
        val = num / den
        if val.denominator != 1:
            raise ArithmeticError(f"non-integral dimension {val}")
        return int(val)

    def dominant_weights(self, lam: Sequence) -> list[tuple]:
        """Dominant weights of the irreducible module of highest weight lam, by height."""
        lam = tuple(lam)
        if not self.is_dominant(lam):
            raise ValueError(f"{lam} is not dominant")
        found = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for mu in frontier:
                for a in self.positive:
                    nu = self.dominant_conjugate(tuple(x - y for x, y in zip(mu, a)))
                    if nu not in found and self.preceq(nu, lam):
                        found.add(nu)
                        nxt.append(nu)
            frontier = nxt
        return sorted(found, key=lambda mu: (self.height(tuple(a - b for a, b in zip(lam, mu))), mu))

    def multiplicities(self, lam: Sequence) -> dict[tuple, int]:
        """Freudenthal's recursion on dominant weights, spread over Weyl orbits."""
        lam = tuple(lam)
        dim = self.weyl_dimension(lam)
        if dim > MAX_DIMENSION:
            raise ValueError(f"dimension {dim} exceeds the budget {MAX_DIMENSION}")
        lr = tuple(x + r for x, r in zip(lam, self.rho))
        norm_top = _ip(lr, lr)
        dom = self.dominant_weights(lam)
        mult: dict[tuple, int] = {}

        def m(nu):
            d = self.dominant_conjugate(nu)
            return mult.get(d, 0)

        for mu in dom:
            if mu == lam:
                mult[mu] = 1
                continue
            total = Q(0)
            for a in self.positive:
                k = 1
                while True:
                    nu = tuple(x + k * y for x, y in zip(mu, a))
                    d = self.dominant_conjugate(nu)
                    if not self.preceq(d, lam):
                        break
                    total += mult.get(d, 0) * _ip(nu, a)
                    k += 1
            mr = tuple(x + r for x, r in zip(mu, self.rho))
            val = 2 * total / (norm_top - _ip(mr, mr))
            if val.denominator != 1:
                raise ArithmeticError(f"non-integral multiplicity {val} at {mu}")
            mult[mu] = int(val)
        out: dict[tuple, int] = {}
        for mu, k in mult.items():
            if k:
                for nu in self.orbit(mu):
                    out[_intify(nu)] = k
        return out


def _intify(x: Sequence) -> tuple:
    return tuple(int(v) if Q(v).denominator == 1 else v for v in x)


@lru_cache(maxsize=None)
def symplectic_system(g: int) -> RootSystem:
    simple = []
    for pos in range(g - 1):
        v = [0] * g
        v[pos], v[pos + 1] = 1, -1
        simple.append(tuple(v))
    v = [0] * g
    v[g - 1] = 2
    simple.append(tuple(v))
    return RootSystem(g, simple)


@lru_cache(maxsize=None)
def levi_system(g: int, r: int) -> RootSystem:
    """Roots of GL(r) x Sp(2g - 2r) in the coordinates of Sp(2g): head positions 0..r-1."""
    simple = []
    for pos in range(r - 1):
        v = [0] * g
        v[pos], v[pos + 1] = 1, -1
        simple.append(tuple(v))
    for pos in range(r, g - 1):
        v = [0] * g
        v[pos], v[pos + 1] = 1, -1
        simple.append(tuple(v))
    if r < g:
        v = [0] * g
        v[g - 1] = 2
        simple.append(tuple(v))
    return RootSystem(g, simple)


def _require_dominant(lam: Weight) -> None:
    if not lam.is_dominant():
        raise ValueError(f"weight {lam} is not dominant (need m_g >= ... >= m_1 >= 0)")


def weyl_dimension(lam: Weight) -> int:
    """prod over positive roots of <lam + rho, a^vee> / <rho, a^vee>, written out for type C."""
    _require_dominant(lam)
    g = lam.g
    x = [lam.coords[k] + g - k for k in range(g)]
    r = [g - k for k in range(g)]
    num = den = 1
    for a in range(g):
        for b in range(a + 1, g):
            num *= (x[a] - x[b]) * (x[a] + x[b])
            den *= (r[a] - r[b]) * (r[a] + r[b])
        num *= x[a]
        den *= r[a]
    return num // den


def gl_dimension(mu: Sequence[int]) -> int:
    """Dimension of the GL(r) module with highest weight mu_1 >= ... >= mu_r."""
    mu = list(mu)
    r = len(mu)
    if any(mu[k] < mu[k + 1] for k in range(r - 1)):
        raise ValueError(f"{tuple(mu)} is not GL({r})-dominant")
    num = den = 1
    for a in range(r):
        for b in range(a + 1, r):
            num *= mu[a] - mu[b] + b - a
            den *= b - a
    return num // den


def weight_multiplicities(lam: Weight) -> dict[Weight, int]:
    _require_dominant(lam)
    if lam.g == 0:
        return {lam: 1}
    raw = symplectic_system(lam.g).multiplicities(lam.coords)
    return {Weight(mu, lam.central): k for mu, k in sorted(raw.items(), reverse=True)}


def h_filtration(lam: Weight) -> dict[int, int]:
    """Dimension of each H-eigenspace, H = diag(0,...,0,-1,...,-1)."""
    out: Counter = Counter()
    for mu, k in weight_multiplicities(lam).items():
        out[h_pairing(mu)] += k
    return dict(sorted(out.items(), reverse=True))


def levi_character(g: int, r: int, mu: Sequence[int]) -> dict[tuple, int]:
    """Character of the irreducible GL(r) x Sp(2g - 2r) module with highest weight mu."""
    return levi_system(g, r).multiplicities(tuple(mu))


def character(lam: Weight) -> dict[tuple, int]:
    return symplectic_system(lam.g).multiplicities(lam.coords)


def multiply(f: dict, h: dict) -> dict:
    out: Counter = Counter()
    for x, a in f.items():
        for y, b in h.items():
            out[tuple(u + v for u, v in zip(x, y))] += a * b
    return {k: v for k, v in out.items() if v}


__all__ = [
    "RootSystem",
    "MAX_DIMENSION",
    "symplectic_system",
    "levi_system",
    "weyl_dimension",
    "gl_dimension",
    "weight_multiplicities",
    "h_filtration",
    "levi_character",
    "character",
    "multiply",
]
