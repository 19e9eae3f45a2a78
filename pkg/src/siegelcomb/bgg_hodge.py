"""Hodge jumps of the BGG complex, mod p Kostant decompositions and the boundary-strata weight scans."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .characters import gl_dimension, levi_character, character, multiply, weyl_dimension
from .root_datum import Weight, h_pairing, half_dimension, is_p_small, motivic_weight
from .weyl import (
    WeylElement,
    dot_action,
    embed,
    iterated_dot,
    kostant_reps,
    siegel_reps,
    unique_top_rep,
    elements,
)


def _require_dominant(lam: Weight) -> None:
    if not lam.is_dominant():
        raise ValueError(f"weight {lam} is not dominant (need m_g >= ... >= m_1 >= 0)")


def _require_standard(lam: Weight) -> None:
    _require_dominant(lam)
    if lam.central != lam.size:
        raise ValueError(f"need c = sum(a) = {lam.size}, got c = {lam.central}")


def hodge_jump(w: WeylElement, lam: Weight) -> int:
    """p(w) = -(w(lam + rho) - rho)(H)."""
    _require_dominant(lam)
    p = -h_pairing(dot_action(w, lam))
    if lam.central == lam.size and p < 0:
        raise AssertionError(f"negative Hodge jump {p} for {w} at {lam}")
    return p


def j_B(lam: Weight, B: Iterable[int]) -> int:
    return sum(lam.a(i) + i for i in B)


def subsets(g: int) -> list[frozenset[int]]:
    return [frozenset(c) for k in range(g + 1) for c in itertools.combinations(range(1, g + 1), k)]


def hodge_weights(lam: Weight) -> list[int]:
    """Sorted multiset {j_B : B subset of {1..g}}; repeated values are kept."""
    _require_dominant(lam)
    return sorted(j_B(lam, B) for B in subsets(lam.g))


# -------------------------------------------------------------------- BGG complex


@dataclass(frozen=True)
class BGGEntry:
    w: WeylElement
    length: int
    weight: Weight
    jump: int

    def to_json(self) -> dict:
        return {"element": list(self.w.signed()), "length": self.length, "weight": self.weight.to_json(), "jump": self.jump}


@dataclass
class BGGDescriptor:
    g: int
    lam: Weight
    entries: list[BGGEntry]
    p: int | None = None
    p_small: bool | None = None
    realizable: dict[int, list[int]] = field(default_factory=dict)
    top_excluded_below_d: bool = True

    def jumps(self) -> list[int]:
        return sorted(e.jump for e in self.entries)

    def checks(self) -> dict[str, bool]:
        d = half_dimension(self.g)
        lengths = [e.length for e in self.entries]
        return {
            "entry_count": len(self.entries) == 2 ** self.g,
            "lengths_in_range": all(0 <= n <= d for n in lengths),
            "unique_top_length": lengths.count(d) == 1,
            "jumps_are_hodge_weights": self.jumps() == hodge_weights(self.lam),
            "top_weight_absent_below_d": self.top_excluded_below_d,
        }

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "lambda": self.lam.to_json(),
            "p": self.p,
            "p_small": self.p_small,
            "entries": [e.to_json() for e in self.entries],
            "realizable_jumps": {str(k): v for k, v in sorted(self.realizable.items())},
            "checks": self.checks(),
        }


def bgg_complex(lam: Weight, p: int | None = None) -> BGGDescriptor:
    """Graded pieces (w, l(w), w.lam, p(w)) over the Siegel Kostant representatives.

    ``p`` only sets the p-smallness flag; the combinatorics does not depend on it.
    """
    _require_dominant(lam)
    g = lam.g
    entries = [BGGEntry(w, n, dot_action(w, lam), hodge_jump(w, lam)) for w, n in siegel_reps(g)]
    entries.sort(key=lambda e: (e.length, e.jump, e.w))
    d = half_dimension(g)
    top = max(e.jump for e in entries)
    realizable = {j: sorted({e.jump for e in entries if e.length <= j}) for j in range(d + 1)}
    # the top jump comes from the length-d element only, so it stays out of degrees j < d
    excluded = all(top not in realizable[j] for j in range(d))
    desc = BGGDescriptor(g, lam, entries, p, None, realizable, excluded)
    if p is not None:
        desc.p_small = is_p_small(lam, p)
    return desc


def coherent_degrees(lam: Weight) -> list[tuple[Weight, int]]:
    """The two (weight, degree) pairs with nonvanishing coherent cohomology: (lam, d) and (w'.lam, 0)."""
    _require_dominant(lam)
    wp = unique_top_rep(lam.g)
    return [(lam, half_dimension(lam.g)), (dot_action(wp, lam), 0)]


# ------------------------------------------------------------- mod p Kostant theorem


@dataclass(frozen=True)
class LeviWeight:
    """Highest weight of an irreducible GL(r) x GSp(2g - 2r) module."""

    linear: tuple[int, ...]
    hermitian: Weight

    def dimension(self) -> int:
        return gl_dimension(self.linear) * weyl_dimension(self.hermitian)

    def to_json(self) -> dict:
        return {"linear": list(self.linear), "hermitian": self.hermitian.to_json()}


def split_levi(mu: Weight, r: int) -> LeviWeight:
    """Restrict to T_l (first r coordinates) and T_h (the rest, with adjusted similitude)."""
    head, tail = mu.coords[:r], mu.coords[r:]
    return LeviWeight(tuple(head), Weight(tail, mu.central - sum(head)))


@dataclass
class KostantStratumDecomposition:
    g: int
    r: int
    lam: Weight
    p: int | None
    p_small: bool | None
    by_degree: dict[int, list[tuple[WeylElement, LeviWeight]]]

    def terms(self) -> list[tuple[int, WeylElement, LeviWeight]]:
        return [(q, w, m) for q, lst in sorted(self.by_degree.items()) for w, m in lst]

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "r": self.r,
            "lambda": self.lam.to_json(),
            "p": self.p,
            "p_small": self.p_small,
            "degrees": {
                str(q): [dict(element=list(w.signed()), **m.to_json()) for w, m in lst]
                for q, lst in sorted(self.by_degree.items())
            },
        }


def kostant_mod_p(lam: Weight, r: int, p: int | None = None) -> KostantStratumDecomposition:
    _require_dominant(lam)
    g = lam.g
    if not 1 <= r <= g:
        raise ValueError(f"r={r} outside 1..{g}")
    table = kostant_reps(g, r)
    by_degree: dict[int, list] = {}
    for w, n in table:
        mu = split_levi(dot_action(w, lam), r)
        lin = mu.linear
        if any(lin[k] < lin[k + 1] for k in range(len(lin) - 1)) or not mu.hermitian.is_dominant():
            raise AssertionError(f"{w}.{lam} = {mu} is not dominant for the Levi")
        by_degree.setdefault(n, []).append((w, mu))
    for lst in by_degree.values():
        lst.sort(key=lambda t: t[0])
    return KostantStratumDecomposition(g, r, lam, p, is_p_small(lam, p) if p is not None else None, by_degree)


def levi_dimension_sum(lam: Weight, r: int) -> tuple[int, int]:
    """(sum over W^(P_r) of dim V_(M_r, w.lam), dim V_lam)."""
    dec = kostant_mod_p(lam, r)
    return sum(m.dimension() for _, _, m in dec.terms()), weyl_dimension(lam)


def kostant_character_identity(lam: Weight, r: int) -> bool:
    """sum (-1)^l(w) ch V_(M, w.lam) == ch V_lam * prod over roots outside M of (1 - e^(-alpha))."""
    g = lam.g
    dec = kostant_mod_p(lam, r)
    lhs: Counter = Counter()
    for q, w, _ in dec.terms():
        for mu, k in levi_character(g, r, dot_action(w, lam).coords).items():
            lhs[mu] += (-1) ** q * k
    rhs = character(lam)
    from .characters import symplectic_system, levi_system

    levi_roots = set(levi_system(g, r).positive)
    for alpha in symplectic_system(g).positive:
        if alpha in levi_roots:
            continue
        rhs = multiply(rhs, {(0,) * g: 1, tuple(-x for x in alpha): -1})
    lhs_clean = {k: v for k, v in lhs.items() if v}
    return lhs_clean == rhs


# ----------------------------------------------------------------- boundary claims


@dataclass
class ClaimRow:
    key: tuple
    jumps: list[int]
    has_zero: bool
    has_top: bool

    @property
    def ok(self) -> bool:
        return not (self.has_zero and self.has_top)

    def to_json(self) -> dict:
        return {"key": [list(k) if isinstance(k, tuple) else k for k in self.key], "jumps": self.jumps,
                "has_zero": self.has_zero, "has_top": self.has_top, "ok": self.ok}


@dataclass
class ClaimReport:
    name: str
    lam: Weight
    top: int
    rows: list[ClaimRow]
    dot_consistent: bool = True

    @property
    def ok(self) -> bool:
        return self.dot_consistent and all(row.ok for row in self.rows)

    def counterexamples(self) -> list[ClaimRow]:
        return [row for row in self.rows if not row.ok]

    def to_json(self) -> dict:
        return {"claim": self.name, "lambda": self.lam.to_json(), "w": self.top, "ok": self.ok,
                "dot_consistent": self.dot_consistent, "rows": [r.to_json() for r in self.rows]}


def _siegel_embedded(g: int, offset: int) -> list[WeylElement]:
    h = g - offset
    if h == 0:
        return [WeylElement.identity(g)]
    return [embed(w, g) for w, _ in siegel_reps(h)]


def _parabolic_embedded(g: int, offset: int, r: int) -> list[WeylElement]:
    return [embed(w, g) for w, _ in kostant_reps(g - offset, r)]


def claim_84_check(lam: Weight, r: int) -> ClaimReport:
    """For each w'' in W^(P_r), the jumps p(w' w'') over Siegel representatives w' of G_(g-r)."""
    _require_standard(lam)
    g = lam.g
    if not 1 <= r <= g:
        raise ValueError(f"r={r} outside 1..{g}")
    top = motivic_weight(lam)
    rows = []
    for w2, _ in kostant_reps(g, r):
        js = sorted(hodge_jump(w1 * w2, lam) for w1 in _siegel_embedded(g, r))
        rows.append(ClaimRow((w2.signed(),), js, 0 in js, top in js))
    return ClaimReport(f"boundary r={r}", lam, top, rows)


def r_sequences(g: int, depth: int) -> list[tuple[int, ...]]:
    return [seq for seq in itertools.product(range(1, g + 1), repeat=depth) if sum(seq) <= g]


def claim_87_check(lam: Weight, depth: int) -> ClaimReport:
    """Iterated version: w = w'_s w''_s ... w'_1 w''_1 with nested offsets R_k = r_1 + ... + r_k.

    Rows are keyed by (r-sequence, w''_1, ..., w''_s); each collects p(w) over all
    choices of the w'_k.  The iterated dot action is compared with the composite.
    """
    _require_standard(lam)
    g = lam.g
    if not 1 <= depth <= g:
        raise ValueError(f"depth {depth} outside 1..{g}")
    top = motivic_weight(lam)
    rows = []
    consistent = True
    for seq in r_sequences(g, depth):
        offs = [0]
        for r in seq:
            offs.append(offs[-1] + r)
        w2_choices = [_parabolic_embedded(g, offs[k], seq[k]) for k in range(depth)]
        w1_choices = [_siegel_embedded(g, offs[k + 1]) for k in range(depth)]
        for w2s in itertools.product(*w2_choices):
            js = []
            for w1s in itertools.product(*w1_choices):
                chain, offsets = [], []
                for k in range(depth):
                    chain += [w2s[k], w1s[k]]
                    offsets += [offs[k], offs[k + 1]]
                comp = WeylElement.identity(g)
                for x in chain:
                    comp = x * comp
                mu = iterated_dot(lam, chain, offsets)
                if mu != dot_action(comp, lam):
                    consistent = False
                js.append(-h_pairing(mu))
            js.sort()
            rows.append(ClaimRow((seq,) + tuple(w.signed() for w in w2s), js, 0 in js, top in js))
    return ClaimReport(f"iterated depth={depth}", lam, top, rows, consistent)


def zero_and_top_loci(lam: Weight) -> tuple[bool, bool]:
    """Over all of W_G: p(w) = 0 iff w in W_M, and p(w) = w iff w in w_0 W_M."""
    _require_standard(lam)
    g = lam.g
    top = motivic_weight(lam)
    zero_ok = top_ok = True
    for w in elements(g):
        p = hodge_jump(w, lam)
        in_M = all(s == 1 for s in w.signs)
        in_top = all(s == -1 for s in w.signs)
        zero_ok &= (p == 0) == in_M
        top_ok &= (p == top) == in_top
    return zero_ok, top_ok


def strata_dims(g: int) -> list[int]:
    """[d_0, ..., d_g] with d_r = (g - r)(g - r + 1)/2."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    return [half_dimension(g - r) for r in range(g + 1)]


__all__ = [
    "hodge_jump",
    "j_B",
    "subsets",
    "hodge_weights",
    "BGGEntry",
    "BGGDescriptor",
    "bgg_complex",
    "coherent_degrees",
    "LeviWeight",
    "split_levi",
    "KostantStratumDecomposition",
    "kostant_mod_p",
    "levi_dimension_sum",
    "kostant_character_identity",
    "ClaimRow",
    "ClaimReport",
    "claim_84_check",
    "claim_87_check",
    "r_sequences",
    "zero_and_top_loci",
    "strata_dims",
]
