"""The Weyl group S_g x {+-1}^g of GSp(2g): action, lengths, Kostant representatives."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from math import comb, factorial
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .root_datum import HalfWeight, Weight, half_dimension, rho

MAX_GENUS = 8


@dataclass(frozen=True, order=True)
class WeylElement:
    """Signed permutation: coordinate k moves to position perm[k], then position j is scaled by signs[j].

    Positions are 0-based in display order, so position 0 carries the label g.
    Composition ``v * w`` means "apply w, then v".  The central coordinate is fixed.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        perm = tuple(int(x) for x in self.perm)
        signs = tuple(int(x) for x in self.signs)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
        if len(signs) != len(perm) or any(s not in (1, -1) for s in signs):
            raise ValueError(f"bad sign vector {signs}")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "signs", signs)

    @property
    def g(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, g: int) -> "WeylElement":
        return cls(tuple(range(g)), (1,) * g)

    @classmethod
    def flip(cls, g: int, labels: Iterable[int]) -> "WeylElement":
        """w_B: invert t_i for i in B (labels in 1..g), fix the rest."""
        labels = set(labels)
        if not labels <= set(range(1, g + 1)):
            raise ValueError(f"labels {sorted(labels)} outside 1..{g}")
        return cls(tuple(range(g)), tuple(-1 if g - pos in labels else 1 for pos in range(g)))

    @classmethod
    def from_signed(cls, sp: Sequence[int]) -> "WeylElement":
        perm = tuple(abs(int(v)) - 1 for v in sp)
        signs = [1] * len(perm)
        for k, v in zip(range(len(perm)), sp):
            signs[perm[k]] = 1 if v > 0 else -1
        return cls(perm, tuple(signs))

    def signed(self) -> tuple[int, ...]:
        return tuple(self.signs[p] * (p + 1) for p in self.perm)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.g != self.g:
            raise ValueError("rank mismatch")
        perm = tuple(self.perm[other.perm[k]] for k in range(self.g))
        inv = self.inverse_perm()
        signs = tuple(self.signs[m] * other.signs[inv[m]] for m in range(self.g))
        return WeylElement(perm, signs)

    def inverse_perm(self) -> tuple[int, ...]:
        inv = [0] * self.g
        for k, p in zip(range(self.g), self.perm):
            inv[p] = k
        return tuple(inv)

    def inverse(self) -> "WeylElement":
        inv = self.inverse_perm()
        # w^{-1} sends position j back to inv[j] with the same sign
        signs = tuple(self.signs[self.perm[k]] for k in range(self.g))
        return WeylElement(inv, signs)

    def apply(self, coords: Sequence):
        out = [None] * self.g
        for k, x in zip(range(self.g), coords):
            p = self.perm[k]
            out[p] = x if self.signs[p] > 0 else -x
        return tuple(out)

    def act(self, mu):
        """Plain action on a Weight or HalfWeight."""
        if len(mu.coords) != self.g:
            raise ValueError(f"rank mismatch: element of rank {self.g}, weight of rank {mu.g}")
        return type(mu)(self.apply(mu.coords), mu.central)

    __call__ = act

    def length(self) -> int:
        return length(self)

    def fixes_head(self, s: int) -> bool:
        """True when the element lies in W_(G_(g-s)) embedded on positions s..g-1."""
        return all(self.perm[k] == k and self.signs[k] == 1 for k in range(s))

    def sign_labels(self) -> frozenset[int]:
        """Labels i whose coordinate gets negated, i.e. the set B with w in W_M w_B."""
        return frozenset(self.g - k for k in range(self.g) if self.signs[self.perm[k]] < 0)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.signed())) + "]"


def _check_size(g: int) -> None:
    if not isinstance(g, int) or g < 1:
        raise ValueError(f"genus must be a positive integer, got {g!r}")
    if g > MAX_GENUS:
        raise ValueError(
            f"group of genus {g} has {2 ** g * factorial(g)} elements; enumeration is limited to g <= {MAX_GENUS}"
        )


def elements(g: int) -> list[WeylElement]:
    """All 2^g g! elements of W_G."""
    _check_size(g)
    return [WeylElement.from_signed(row) for row in _kernels.signed_permutations(g).tolist()]


def order(g: int) -> int:
    return 2 ** g * factorial(g)


def length(w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    return int(_kernels.lengths_numpy(np.asarray([w.signed()], dtype=np.int64).reshape(1, -1))[0])


def longest_element(g: int) -> WeylElement:
    return WeylElement(tuple(range(g)), (-1,) * g)


def sign_subgroup(g: int) -> dict[frozenset[int], WeylElement]:
    """W' = {+-1}^g, as w_B keyed by B."""
    out = {}
    for mask in range(1 << g):
        B = frozenset(i for i in range(1, g + 1) if mask >> (i - 1) & 1)
        out[B] = WeylElement.flip(g, B)
    return out


def embed(w: WeylElement, g: int) -> WeylElement:
    """Put an element of W_(G_h) on the last h positions of W_(G_g)."""
    s = g - w.g
    if s < 0:
        raise ValueError(f"cannot embed rank {w.g} into rank {g}")
    perm = tuple(range(s)) + tuple(s + p for p in w.perm)
    return WeylElement(perm, (1,) * s + w.signs)


# --------------------------------------------------------------------- parabolics


@dataclass(frozen=True)
class Parabolic:
    """Standard parabolic with Levi GL(r) x GSp(2g - 2r); r = g is the Siegel parabolic."""

    g: int
    r: int

    def __post_init__(self) -> None:
        if not 1 <= self.r <= self.g:
            raise ValueError(f"parabolic index r={self.r} outside 1..{self.g}")

    @classmethod
    def siegel(cls, g: int) -> "Parabolic":
        return cls(g, g)

    @property
    def is_siegel(self) -> bool:
        return self.r == self.g

    @property
    def name(self) -> str:
        return "Siegel" if self.is_siegel else f"P_{self.r}"

    def levi_order(self) -> int:
        h = self.g - self.r
        return factorial(self.r) * 2 ** h * factorial(h)

    def index(self) -> int:
        return order(self.g) // self.levi_order()

    def contains(self, w: WeylElement) -> bool:
        """Membership in W_(M_r): head positions permuted among themselves without signs."""
        r = self.r
        return all((k < r) == (w.perm[k] < r) for k in range(self.g)) and all(
            w.signs[k] == 1 for k in range(r)
        )


def parabolic(g: int, which) -> Parabolic:
    """Accept 'siegel'/'M', an integer r, or 'P_r'."""
    if isinstance(which, Parabolic):
        return which
    if isinstance(which, str):
        key = which.strip().lower()
        if key in ("siegel", "m"):
            return Parabolic.siegel(g)
        if key.startswith("p_") or key.startswith("p"):
            return Parabolic(g, int(key.lstrip("p_")))
        raise ValueError(f"unknown parabolic {which!r}")
    return Parabolic(g, int(which))


@dataclass(frozen=True)
class CosetTable:
    parabolic: Parabolic
    reps: tuple[WeylElement, ...]
    lengths: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self):
        return iter(zip(self.reps, self.lengths))

    def of_length(self, ell: int) -> list[WeylElement]:
        return [w for w, n in zip(self.reps, self.lengths) if n == ell]

    def length_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for n in self.lengths:
            out[n] = out.get(n, 0) + 1
        return dict(sorted(out.items()))


_COSET_CACHE: dict[tuple[int, int], CosetTable] = {}


def kostant_reps(g: int, which="siegel") -> CosetTable:
    """Minimal-length representatives of the right cosets W_(M_r) w, found by exhaustive scan.

    Two elements share a coset iff their images of rho agree up to W_(M_r), which
    the kernel canonicalises.  Ties for the minimum raise, they would mean the
    length function is wrong.
    """
    par = parabolic(g, which)
    _check_size(g)
    key = (g, par.r)
    if key in _COSET_CACHE:
        return _COSET_CACHE[key]
    table = _kernels.signed_permutations(g)
    lens = _kernels.lengths(table)
    rho_int = np.arange(g, 0, -1, dtype=np.int64)
    images = _kernels.act(table, rho_int)
    keys = _kernels.levi_keys(images, par.r)
    _, inverse = np.unique(keys, axis=0, return_inverse=True)
    inverse = inverse.ravel()
    ncos = int(inverse.max()) + 1
    if ncos != par.index():
        raise AssertionError(f"found {ncos} cosets, expected {par.index()}")
    best = np.full(ncos, np.iinfo(np.int64).max, dtype=np.int64)
    np.minimum.at(best, inverse, lens)
    is_min = lens == best[inverse]
    counts = np.bincount(inverse[is_min], minlength=ncos)
    if (counts != 1).any():
        raise AssertionError("a coset has several minimal-length elements")
    idx = np.flatnonzero(is_min)
    order_ = np.lexsort((np.arange(len(idx)), lens[idx]))
    idx = idx[order_]
    reps = tuple(WeylElement.from_signed(row) for row in table[idx].tolist())
    out = CosetTable(par, reps, tuple(int(x) for x in lens[idx]))
    _COSET_CACHE[key] = out
    return out


def siegel_reps(g: int) -> CosetTable:
    return kostant_reps(g, "siegel")


def expected_coset_count(g: int, r: int) -> int:
    return 2 ** r * comb(g, r)


def unique_top_rep(g: int) -> WeylElement:
    """The only Siegel Kostant representative of length d."""
    top = siegel_reps(g).of_length(half_dimension(g))
    if len(top) != 1:
        raise AssertionError(f"{len(top)} representatives of length d")
    return top[0]


# ----------------------------------------------------------------------- dot action


def _shift(mu: Weight, s: int) -> tuple[int, ...]:
    """Semisimple part of rho_(s) = (0,...,0, g-s, ..., 1)."""
    g = mu.g
    return tuple(0 if k < s else g - k for k in range(g))


def dot_action(w: WeylElement, lam: Weight) -> Weight:
    """w . lam = w(lam + rho) - rho."""
    return _dot(w, lam, 0)


def _dot(w: WeylElement, mu: Weight, s: int) -> Weight:
    if w.g != mu.g:
        raise ValueError(f"rank mismatch: element of rank {w.g}, weight of rank {mu.g}")
    sh = _shift(mu, s)
    moved = w.apply(tuple(x + y for x, y in zip(mu.coords, sh)))
    return Weight(tuple(x - y for x, y in zip(moved, sh)), mu.central)


def iterated_dot(lam: Weight, chain: Sequence[WeylElement], offsets: Sequence[int] | None = None) -> Weight:
    """mu_(k+1) = w_k(mu_k + rho_(s_k)) - rho_(s_k), with w_k fixing the first s_k positions.

    ``offsets`` defaults to s_k = k.  Because w_k fixes rho - rho_(s_k) the result
    equals (w_(n-1) ... w_0) . lam, which the tests check.
    """
    if offsets is None:
        offsets = list(range(len(chain)))
    if len(offsets) != len(chain):
        raise ValueError("one offset per chain element")
    mu = lam
    for w, s in zip(chain, offsets):
        if not w.fixes_head(s):
            raise ValueError(f"{w} does not lie in the subgroup fixing the first {s} coordinates")
        mu = _dot(w, mu, s)
    return mu


def act_half(w: WeylElement, mu: HalfWeight) -> HalfWeight:
    return HalfWeight(w.apply(mu.coords), mu.central)


def rho_image(w: WeylElement) -> tuple[Q, ...]:
    return w.apply(rho(w.g).coords)


enumerate = elements  # noqa: A001  (public name for the full group listing)

__all__ = [
    "WeylElement",
    "Parabolic",
    "CosetTable",
    "MAX_GENUS",
    "elements",
    "enumerate",
    "order",
    "length",
    "longest_element",
    "sign_subgroup",
    "embed",
    "parabolic",
    "kostant_reps",
    "siegel_reps",
    "expected_coset_count",
    "unique_top_rep",
    "dot_action",
    "iterated_dot",
    "act_half",
    "rho_image",
]
