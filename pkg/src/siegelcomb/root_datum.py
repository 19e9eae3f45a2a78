"""Based root datum of GSp(2g), its dual GSpin(2g+1), and weight arithmetic.

Characters of the diagonal torus diag(t_g, ..., t_1, nu/t_1, ..., nu/t_g) are
stored as ``(m_g, ..., m_1; c)`` where ``c`` is the full similitude
coordinate: the character is t^m * nu^((c - sum(m)) / 2).  Coordinates are
kept in display order, so ``coords[0]`` is ``m_g`` and ``coords[-1]`` is ``m_1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable, Sequence

__all__ = [
    "Weight",
    "HalfWeight",
    "Root",
    "RootDatum",
    "simple_roots",
    "positive_roots",
    "root_system",
    "cartan_matrix",
    "symplectic_root_datum",
    "dual_root_datum",
    "rho",
    "rho_tilde",
    "dual_weight",
    "motivic_weight",
    "half_dimension",
    "is_prime",
    "is_p_small",
    "is_p_small_levi_bound",
    "exceeds_five",
    "minimal_admissible_prime",
    "h_pairing",
    "minuscule_pairing",
    "varpi_hat",
    "spin_weights",
]


def half_dimension(g: int) -> int:
    """d = g(g+1)/2, the dimension of the Siegel variety of genus g."""
    return g * (g + 1) // 2


def _check_genus(g: int, allow_zero: bool = False) -> None:
    if not isinstance(g, int) or g < 0 or (g == 0 and not allow_zero):
        raise ValueError(f"genus must be a positive integer, got {g!r}")


@dataclass(frozen=True, order=True)
class Weight:
    """Integral character (m_g, ..., m_1; c) with c = m_g + ... + m_1 mod 2.

    ``coords`` may be empty: that is a character of GSp(0) = G_m, used for
    the hermitian factor of the deepest Levi subgroups.
    """

    coords: tuple[int, ...]
    central: int

    def __post_init__(self) -> None:
        coords = tuple(int(x) for x in self.coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "central", int(self.central))
        if (sum(coords) - self.central) % 2:
            raise ValueError(
                f"parity violation: central {self.central} and coordinate sum "
                f"{sum(coords)} differ mod 2"
            )

    @classmethod
    def from_partition(cls, parts: Sequence[int], central: int | None = None) -> "Weight":
        """Build (a_g, ..., a_1; c) with the standing convention c = sum(a)."""
        parts = tuple(int(x) for x in parts)
        return cls(parts, sum(parts) if central is None else central)

    @property
    def g(self) -> int:
        return len(self.coords)

    def a(self, i: int) -> int:
        """Coordinate m_i with 1-based labels (m_g first)."""
        if not 1 <= i <= self.g:
            raise IndexError(f"label {i} outside 1..{self.g}")
        return self.coords[self.g - i]

    @property
    def size(self) -> int:
        return sum(self.coords)

    def is_dominant(self) -> bool:
        c = self.coords
        return all(c[k] >= c[k + 1] for k in range(len(c) - 1)) and (not c or c[-1] >= 0)

    def is_standard(self) -> bool:
        """Dominant and normalised by a Tate twist so that c = sum(a)."""
        return self.is_dominant() and self.central == self.size

    def as_half(self) -> "HalfWeight":
        return HalfWeight(tuple(Q(x) for x in self.coords), Q(self.central))

    def __add__(self, other):
        if isinstance(other, Weight):
            _same_rank(self, other)
            return Weight(tuple(x + y for x, y in zip(self.coords, other.coords)),
                          self.central + other.central)
        if isinstance(other, HalfWeight):
            return self.as_half() + other
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Weight):
            _same_rank(self, other)
            return Weight(tuple(x - y for x, y in zip(self.coords, other.coords)),
                          self.central - other.central)
        if isinstance(other, HalfWeight):
            return self.as_half() - other
        return NotImplemented

    def __neg__(self) -> "Weight":
        return Weight(tuple(-x for x in self.coords), -self.central)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords)) + f";{self.central})"

    def to_json(self) -> list[int]:
        return [*self.coords, self.central]


@dataclass(frozen=True, order=True)
class HalfWeight:
    """Point of the lattice (1/2)Z^g x (1/2)Z; houses rho, lambda+rho and spin weights."""

    coords: tuple[Q, ...]
    central: Q

    def __post_init__(self) -> None:
        coords = tuple(Q(x) for x in self.coords)
        central = Q(self.central)
        for x in (*coords, central):
            if (2 * x).denominator != 1:
                raise ValueError(f"{x} is not a half-integer")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "central", central)

    @property
    def g(self) -> int:
        return len(self.coords)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in (*self.coords, self.central))

    def to_weight(self) -> Weight:
        """Return the integral character; raises if not integral or parity fails."""
        if not self.is_integral():
            raise ValueError(f"{self} has non-integral coordinates")
        return Weight(tuple(int(x) for x in self.coords), int(self.central))

    def __add__(self, other):
        if isinstance(other, Weight):
            other = other.as_half()
        if not isinstance(other, HalfWeight):
            return NotImplemented
        _same_rank(self, other)
        return HalfWeight(tuple(x + y for x, y in zip(self.coords, other.coords)),
                          self.central + other.central)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Weight):
            other = other.as_half()
        if not isinstance(other, HalfWeight):
            return NotImplemented
        _same_rank(self, other)
        return HalfWeight(tuple(x - y for x, y in zip(self.coords, other.coords)),
                          self.central - other.central)

    def __rsub__(self, other):
        if isinstance(other, Weight):
            return other.as_half() - self
        return NotImplemented

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords)) + f";{self.central})"

    def to_json(self) -> list[str]:
        return [str(x) for x in (*self.coords, self.central)]


def _same_rank(x, y) -> None:
    if x.g != y.g:
        raise ValueError(f"rank mismatch: {x.g} vs {y.g}")


# --------------------------------------------------------------------------- roots


@dataclass(frozen=True, order=True)
class Root:
    vector: tuple[int, ...]  # semisimple part; central coordinate is 0
    long: bool
    positive: bool

    @property
    def weight(self) -> Weight:
        return Weight(self.vector, 0)

    def coroot(self) -> tuple[Q, ...]:
        """alpha^vee = 2 alpha / <alpha, alpha> in Q^g x {0}."""
        norm = sum(x * x for x in self.vector)
        return tuple(Q(2 * x, norm) for x in self.vector)

    def __neg__(self) -> "Root":
        return Root(tuple(-x for x in self.vector), self.long, not self.positive)


def _unit(g: int, pos: int, scale: int = 1) -> list[int]:
    v = [0] * g
    v[pos] = scale
    return v


def simple_roots(g: int) -> list[Root]:
    """alpha_g, ..., alpha_1 with alpha_k = e_k - e_(k-1) and alpha_1 = 2 e_1."""
    _check_genus(g)
    out = []
    for pos in range(g - 1):
        v = _unit(g, pos)
        v[pos + 1] = -1
        out.append(Root(tuple(v), False, True))
    out.append(Root(tuple(_unit(g, g - 1, 2)), True, True))
    return out


def positive_roots(g: int) -> list[Root]:
    """The g^2 positive roots e_i - e_j (i > j), e_i + e_j (i != j), 2 e_i."""
    _check_genus(g)
    out = []
    for a in range(g):
        for b in range(a + 1, g):
            v = _unit(g, a)
            v[b] = -1
            out.append(Root(tuple(v), False, True))
            v = _unit(g, a)
            v[b] = 1
            out.append(Root(tuple(v), False, True))
        out.append(Root(tuple(_unit(g, a, 2)), True, True))
    return out


def root_system(g: int) -> list[Root]:
    pos = positive_roots(g)
    return pos + [-r for r in pos]


def _pair(x: Sequence, y: Sequence) -> Q:
    return sum((Q(a) * Q(b) for a, b in zip(x, y)), Q(0))


def cartan_matrix(g: int) -> list[list[int]]:
    """Matrix of <alpha_i, alpha_j^vee> over the simple roots (display order)."""
    simple = simple_roots(g)
    return [[int(_pair(a.vector, b.coroot())) for b in simple] for a in simple]


@dataclass(frozen=True)
class RootDatum:
    """(M, R, Delta, M*, R^vee, Delta^vee) restricted to the data we compute with.

    Roots and coroots are tuples of length g + 1, the last entry being the
    central coordinate (always 0 for roots of GSp(2g)).
    """

    g: int
    simple_roots: tuple[tuple[Q, ...], ...]
    simple_coroots: tuple[tuple[Q, ...], ...]
    positive_roots: tuple[tuple[Q, ...], ...]
    positive_coroots: tuple[tuple[Q, ...], ...]
    side: str = "symplectic"
    rho: tuple[Q, ...] = field(init=False)

    def __post_init__(self) -> None:
        n = len(self.positive_roots[0]) if self.positive_roots else self.g + 1
        half = tuple(sum((r[k] for r in self.positive_roots), Q(0)) / 2 for k in range(n))
        object.__setattr__(self, "rho", half)

    def pairing_matrix(self) -> list[list[Q]]:
        return [[_pair(a, b) for b in self.simple_coroots] for a in self.simple_roots]


def symplectic_root_datum(g: int) -> RootDatum:
    simple = simple_roots(g)
    pos = positive_roots(g)
    ext = lambda v: tuple(Q(x) for x in v) + (Q(0),)
    return RootDatum(
        g=g,
        simple_roots=tuple(ext(r.vector) for r in simple),
        simple_coroots=tuple(ext(r.coroot()) for r in simple),
        positive_roots=tuple(ext(r.vector) for r in pos),
        positive_coroots=tuple(ext(r.coroot()) for r in pos),
        side="symplectic",
    )


def dual_root_datum(rd: RootDatum) -> RootDatum:
    """Swap (M, R, Delta) with (M*, R^vee, Delta^vee); the result for GSp(2g) is GSpin(2g+1)."""
    return RootDatum(
        g=rd.g,
        simple_roots=rd.simple_coroots,
        simple_coroots=rd.simple_roots,
        positive_roots=rd.positive_coroots,
        positive_coroots=rd.positive_roots,
        side="spin" if rd.side == "symplectic" else "symplectic",
    )


# ------------------------------------------------------------------ distinguished weights


def rho(g: int) -> HalfWeight:
    """(g, ..., 1; 0).  Its coordinate sum d may be odd, so it lives in the half lattice."""
    _check_genus(g, allow_zero=True)
    return HalfWeight(tuple(Q(g - k) for k in range(g)), Q(0))


def rho_tilde(g: int) -> Weight:
    """(g, ..., 1; d): the sum of the fundamental weights."""
    _check_genus(g)
    return Weight(tuple(g - k for k in range(g)), half_dimension(g))


def dual_weight(lam: Weight) -> Weight:
    """(a_g, ..., a_1; -c)."""
    return Weight(lam.coords, -lam.central)


def _require_dominant(lam: Weight) -> None:
    if not lam.is_dominant():
        raise ValueError(f"weight {lam} is not dominant (need m_g >= ... >= m_1 >= 0)")


def motivic_weight(lam: Weight) -> int:
    """|lambda + rho| = sum_i (a_i + i) = |lambda| + d."""
    _require_dominant(lam)
    return lam.size + half_dimension(lam.g)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def _check_prime(p: int) -> None:
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    if not is_prime(p):
        raise ValueError(f"{p} is not a prime")


def is_p_small(lam: Weight, p: int) -> bool:
    """p - 1 > |lambda + rho|."""
    _check_prime(p)
    return p - 1 > motivic_weight(lam)


def is_p_small_levi_bound(lam: Weight, p: int) -> bool:
    """The looser bound a_g + a_(g-1) + g + (g-1) < p for uniqueness of admissible lattices."""
    _check_prime(p)
    _require_dominant(lam)
    g = lam.g
    top = lam.coords[0] + (lam.coords[1] if g > 1 else 0)
    return top + g + (g - 1) < p


def exceeds_five(p: int) -> bool:
    """Auxiliary condition p > 5 (needed for the modular representation lemma)."""
    _check_prime(p)
    return p > 5


def minimal_admissible_prime(lam: Weight) -> int:
    """Smallest prime with p > 5 and p - 1 > |lambda + rho|."""
    p = 3
    while not (exceeds_five(p) and is_p_small(lam, p)):
        p += 2
        while not is_prime(p):
            p += 2
    return p


# ------------------------------------------------------------------------- pairings


def h_pairing(mu: Weight | HalfWeight):
    """mu(H) for H = diag(0, ..., 0, -1, ..., -1): (sum m_i - m_c) / 2.

    Returns an ``int`` for integral characters and a ``Fraction`` otherwise.
    """
    val = (sum((Q(x) for x in mu.coords), Q(0)) - Q(mu.central)) / 2
    if isinstance(mu, Weight):
        return int(val)
    return val


def varpi_hat(g: int) -> HalfWeight:
    """Minuscule weight (1/2, ..., 1/2; 1/2) of GSpin(2g+1), a cocharacter of T."""
    _check_genus(g)
    return HalfWeight((Q(1, 2),) * g, Q(1, 2))


def spin_weights(g: int) -> dict[frozenset[int], HalfWeight]:
    """The 2^g weights varpi_hat^(w_B), keyed by the set B of negated labels."""
    _check_genus(g)
    out = {}
    for mask in range(1 << g):
        B = frozenset(i for i in range(1, g + 1) if mask >> (i - 1) & 1)
        coords = tuple(Q(-1, 2) if (g - pos) in B else Q(1, 2) for pos in range(g))
        out[B] = HalfWeight(coords, Q(1, 2))
    return out


def cocharacter_pairing(eta: HalfWeight, mu: Weight | HalfWeight) -> Q:
    """Standard scalar product on Z^g x Z extended to the half lattice."""
    return _pair((*eta.coords, eta.central), (*mu.coords, mu.central))


def minuscule_pairing(mu: Weight | HalfWeight):
    """varpi_hat o mu = |mu_ss| / 2 + mu_c / 2; an ``int`` for integral characters."""
    val = cocharacter_pairing(varpi_hat(mu.g), mu)
    if isinstance(mu, Weight):
        return int(val)
    return val


def grid(g: int, bound: int) -> Iterable[Weight]:
    """Dominant weights (a_g, ..., a_1; sum a) with a_g <= bound, lexicographically decreasing."""

    def rec(prefix: list[int], top: int):
        if len(prefix) == g:
            yield Weight.from_partition(prefix)
            return
        for x in range(top, -1, -1):
            yield from rec(prefix + [x], x)

    yield from rec([], bound)


__all__ += ["cocharacter_pairing", "grid"]
