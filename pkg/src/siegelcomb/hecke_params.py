"""Unramified parameters, spin slopes and the Satake restriction to boundary strata.

Everything is valuation data: exact rationals standing for exponents of p.
Index conventions follow the weights: vectors are in display order
(label g first), subsets J are sets of labels in 1..g.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable, Mapping, Sequence

from .root_datum import Weight, half_dimension

Subset = frozenset


def all_subsets(g: int) -> list[frozenset[int]]:
    return [frozenset(c) for k in range(g + 1) for c in itertools.combinations(range(1, g + 1), k)]


def subset_key(J: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(J)) + "}"


def parse_subset(text: str) -> frozenset[int]:
    body = text.strip().strip("{}").strip()
    return frozenset(int(x) for x in body.split(",")) if body else frozenset()


def _label_value(vec: Sequence, i: int):
    """Entry for label i of a display-order vector."""
    return vec[len(vec) - i]


# ------------------------------------------------------------------ parameters


@dataclass(frozen=True)
class UnramifiedParameter:
    """phi = (alpha_g, ..., alpha_1; gamma) at the prime p.

    diag(t_g, ..., t_1, nu/t_1, ..., nu/t_g) goes to
    prod |t_i|^alpha_i * |nu|^((gamma - sum alpha) / 2).
    """

    alphas: tuple[Q, ...]
    gamma: Q
    p: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphas", tuple(Q(a) for a in self.alphas))
        object.__setattr__(self, "gamma", Q(self.gamma))
        if not self.alphas:
            raise ValueError("need at least one exponent")

    @property
    def g(self) -> int:
        return len(self.alphas)

    def character_exponents(self, t_ords: Sequence[int], nu_ord: int) -> Q:
        """-ord_p of the value at diag(p^t, p^nu / p^t); |x|_p = p^(-ord x)."""
        val = sum((a * Q(o) for a, o in zip(self.alphas, t_ords)), Q(0))
        val += (self.gamma - sum(self.alphas)) / 2 * nu_ord
        return -val

    def evaluate(self) -> tuple[tuple[Q, ...], tuple[Q, Q]]:
        """ord_p of the image of p: ((-alpha_g, ..., -alpha_1), [-sum alpha / 2, -gamma / 2])."""
        return tuple(-a for a in self.alphas), (-sum(self.alphas) / 2, -self.gamma / 2)

    def to_json(self) -> dict:
        return {"alphas": [str(a) for a in self.alphas], "gamma": str(self.gamma), "p": self.p}


def twist(phi: UnramifiedParameter, times: int = 1) -> UnramifiedParameter:
    """gamma -> gamma - d (applied ``times`` times)."""
    return UnramifiedParameter(phi.alphas, phi.gamma - times * half_dimension(phi.g), phi.p)


# ------------------------------------------------------------------ slope systems


@dataclass(frozen=True)
class SlopeSystem:
    g: int
    slopes: Mapping[frozenset[int], Q]

    def __post_init__(self) -> None:
        clean = {frozenset(J): Q(v) for J, v in self.slopes.items()}
        if set(clean) != set(all_subsets(self.g)):
            raise ValueError(f"need one slope for each of the {2 ** self.g} subsets of 1..{self.g}")
        object.__setattr__(self, "slopes", clean)

    @classmethod
    def from_sequence(cls, g: int, values: Sequence) -> "SlopeSystem":
        """Values listed in the order of ``all_subsets(g)`` (by size, then lexicographic)."""
        subs = all_subsets(g)
        if len(values) != len(subs):
            raise ValueError(f"need {len(subs)} slopes, got {len(values)}")
        return cls(g, dict(zip(subs, values)))

    def to_json(self) -> dict[str, str]:
        return {subset_key(J): str(v) for J, v in sorted(self.slopes.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))}


def spin_slopes(t: Sequence, z) -> dict[frozenset[int], Q]:
    """ord xi_J = (-sum_(i in J) t_i + sum_(i not in J) t_i) / 2 + z, with t = (ord theta_g, ..., ord theta_1)."""
    t = [Q(x) for x in t]
    g = len(t)
    out = {}
    for J in all_subsets(g):
        inside = sum((_label_value(t, i) for i in J), Q(0))
        outside = sum(t) - inside
        out[J] = (outside - inside) / 2 + Q(z)
    return out


def displayed_slopes(x: Sequence, y) -> dict[frozenset[int], Q]:
    """-(y + d + sum_(i in J) x_i - sum_(i not in J) x_i) / 2 for x = (x_g, ..., x_1)."""
    x = [Q(v) for v in x]
    g = len(x)
    d = half_dimension(g)
    out = {}
    for J in all_subsets(g):
        inside = sum((_label_value(x, i) for i in J), Q(0))
        out[J] = -(Q(y) + d + inside - (sum(x) - inside)) / 2
    return out


@dataclass
class SlopeSolution:
    g: int
    mode: str
    consistent: bool
    t: tuple[Q, ...] | None
    z: Q | None
    violations: dict[str, tuple[str, str]] = field(default_factory=dict)

    def to_json(self) -> dict:
        names = ("t", "z") if self.mode == "literal" else ("x", "y")
        sol = None
        if self.t is not None:
            sol = {names[0]: [str(v) for v in self.t], names[1]: str(self.z)}
        return {
            "mode": self.mode,
            "consistent": self.consistent,
            "solution": sol,
            "violations": {k: {"given": a, "implied": b} for k, (a, b) in sorted(self.violations.items())},
        }


def solve_slope_system(system: SlopeSystem, mode: str = "literal") -> SlopeSolution:
    """Differences s_J - s_(J + {k}) give the per-label unknowns, s_empty gives the central one;
    then all 2^g equations are checked.

    mode="literal" solves ord xi_J = s_J for (t, z).  mode="displayed" solves
    -(y + d + sum_J x - sum_notJ x)/2 = s_J for (x, y).
    """
    g = system.g
    s = system.slopes
    empty = frozenset()
    per_label = {}
    for i in range(1, g + 1):
        per_label[i] = s[empty] - s[frozenset({i})]
    vec = tuple(per_label[g - pos] for pos in range(g))
    if mode == "literal":
        central = s[empty] - sum(vec, Q(0)) / 2
        implied = spin_slopes(vec, central)
    elif mode == "displayed":
        central = sum(vec, Q(0)) - half_dimension(g) - 2 * s[empty]
        implied = displayed_slopes(vec, central)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    bad = {subset_key(J): (str(s[J]), str(implied[J])) for J in s if implied[J] != s[J]}
    if bad:
        return SlopeSolution(g, mode, False, None, None, bad)
    return SlopeSolution(g, mode, True, vec, central)


def hodge_slope_system(lam: Weight) -> SlopeSystem:
    """s_J = j_J = sum_(i in J) (a_i + i)."""
    return SlopeSystem(lam.g, {J: Q(sum(lam.a(i) + i for i in J)) for J in all_subsets(lam.g)})


# ------------------------------------------------------------------------ (AO)


def ao_valuations(lam: Weight) -> tuple[int, ...]:
    """(v_1, ..., v_g) with v_r = a_(r+1) + ... + a_g; v_g = 0."""
    g = lam.g
    return tuple(sum(lam.a(i) for i in range(r + 1, g + 1)) for r in range(1, g + 1))


def ao_predicate(valuations: Sequence, lam: Weight) -> bool:
    """True iff valuations[r - 1] = a_(r+1) + ... + a_g for r = 1..g."""
    if len(valuations) != lam.g:
        raise ValueError(f"need {lam.g} valuations, got {len(valuations)}")
    return all(Q(v) == e for v, e in zip(valuations, ao_valuations(lam)))


def valuations_from_theta(t: Sequence) -> tuple[Q, ...]:
    """v_r = sum_(i > r) (-ord theta_i - i): the (AO) vector read off solved theta slopes."""
    t = [Q(x) for x in t]
    g = len(t)
    return tuple(sum((-_label_value(t, i) - i for i in range(r + 1, g + 1)), Q(0)) for r in range(1, g + 1))


# ------------------------------------------------------------------ Satake restriction


@dataclass(frozen=True)
class TorusDoubleCoset:
    """Class of diag(p^e_1, ..., p^e_2g) with e weakly increasing and e_k + e_(2g+1-k) = c."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        e = tuple(int(x) for x in self.exponents)
        object.__setattr__(self, "exponents", e)
        if len(e) % 2:
            raise ValueError("need an even number of exponents")
        if any(e[k] > e[k + 1] for k in range(len(e) - 1)):
            raise ValueError(f"exponents {e} are not weakly increasing")
        n = len(e)
        sums = {e[k] + e[n - 1 - k] for k in range(n // 2)}
        if len(sums) > 1:
            raise ValueError(f"exponents {e} are not symplectic similitude exponents")

    @property
    def g(self) -> int:
        return len(self.exponents) // 2

    @property
    def similitude(self) -> int | None:
        e = self.exponents
        return e[0] + e[-1] if e else None

    @classmethod
    def unit(cls, g: int) -> "TorusDoubleCoset":
        return cls((0,) * (2 * g))

    def to_json(self) -> dict:
        return {"g": self.g, "exponents": list(self.exponents)}


def satake_restrict(x: TorusDoubleCoset, r: int) -> TorusDoubleCoset | None:
    """[diag(a_r, b, c_r)] -> [diag(b)] when the a_r block is a unit, else the zero element (None)."""
    if not 1 <= r <= x.g:
        raise ValueError(f"r={r} outside 1..{x.g}")
    e = x.exponents
    if any(e[:r]):
        return None
    return TorusDoubleCoset(e[r : len(e) - r])


__all__ = [
    "all_subsets",
    "subset_key",
    "parse_subset",
    "UnramifiedParameter",
    "twist",
    "SlopeSystem",
    "SlopeSolution",
    "spin_slopes",
    "displayed_slopes",
    "solve_slope_system",
    "hodge_slope_system",
    "ao_valuations",
    "ao_predicate",
    "valuations_from_theta",
    "TorusDoubleCoset",
    "satake_restrict",
]
