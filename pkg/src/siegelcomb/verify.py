"""Self-check runner behind ``siegelcomb verify-all``: one named pass/fail line per exit criterion."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import islice
from typing import Callable

from . import bgg_hodge as bh
from . import hecke_params as hp
from . import weyl_modules as wm
from .characters import weyl_dimension
from .root_datum import (
    Weight,
    grid,
    is_prime,
    is_p_small,
    exceeds_five,
    minuscule_pairing,
    motivic_weight,
    rho_tilde,
)
from .weyl import kostant_reps, unique_top_rep


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    seconds: float
    limit: float
    detail: str

    @property
    def ok(self) -> bool:
        return self.passed and self.seconds < self.limit

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return f"[{verdict}] {self.number}. {self.name} ({self.seconds:.2f}s / {self.limit:g}s) {self.detail}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.ok, "seconds": round(self.seconds, 3),
                "limit": self.limit, "detail": self.detail}


def _grid_weights(g: int, count: int) -> list[Weight]:
    bound = 0
    while True:
        ws = list(islice(grid(g, bound), count))
        if len(ws) >= count or bound > 20:
            return ws[:count]
        bound += 1


def c1_hodge() -> tuple[bool, str]:
    want = {(5, 5): [0, 6, 7, 13], (3, 3): [0, 4, 5, 9], (0, 0): [0, 1, 2, 3]}
    got = {k: bh.hodge_weights(Weight.from_partition(k)) for k in want}
    return got == want, str(got)


def c2_bijection(gmax: int) -> tuple[bool, str]:
    for g in range(1, gmax + 1):
        table = kostant_reps(g, "siegel")
        if len(table) != 2 ** g:
            return False, f"|W^M| = {len(table)} for g={g}"
        top = unique_top_rep(g)
        for lam in _grid_weights(g, 20):
            js = sorted(bh.hodge_jump(w, lam) for w in table.reps)
            if js != bh.hodge_weights(lam):
                return False, f"g={g} lam={lam}"
            if bh.hodge_jump(top, lam) != motivic_weight(lam):
                return False, f"top element misses w at g={g} lam={lam}"
    return True, f"g<={gmax}, 20 weights each"


def c3_claims(gmax: int) -> tuple[bool, str]:
    for g in range(2, min(gmax, 3) + 1):
        for lam in _grid_weights(g, 10):
            for r in range(1, g + 1):
                rep = bh.claim_84_check(lam, r)
                if not rep.ok:
                    return False, f"counterexample g={g} r={r} lam={lam}"
    if gmax >= 3:
        for lam in _grid_weights(3, 10):
            if not bh.claim_87_check(lam, 2).ok:
                return False, f"iterated counterexample lam={lam}"
    return True, "no set holds both 0 and w"


LATTICE_CASES = [((1, 0), 4), ((1, 1), 5), ((2, 0), 10), ((2, 1), 16), ((2, 2), 14)] + [((n,), n + 1) for n in range(6)]


def _next_prime_above(n: int) -> int:
    p = max(3, n + 1)
    while not is_prime(p):
        p += 1
    return p


def c4_lattices() -> tuple[bool, str]:
    for parts, rank in LATTICE_CASES:
        lam = Weight.from_partition(parts)
        rep = wm.weyl_lattice(lam, _next_prime_above(lam.size))
        if rep.rank != rank or rep.rank != weyl_dimension(lam):
            return False, f"{lam}: rank {rep.rank}, expected {rank}"
        if any(q > lam.size for q in rep.torsion_primes):
            return False, f"{lam}: torsion at {rep.torsion_primes}"
    return True, f"{len(LATTICE_CASES)} weights"


DIMENSION_WEIGHTS = [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1)]


def c5_dimension_identity() -> tuple[bool, str]:
    bad = []
    for parts in DIMENSION_WEIGHTS:
        lam = Weight.from_partition(parts)
        for r in (1, 2):
            lhs, rhs = bh.levi_dimension_sum(lam, r)
            if lhs != rhs:
                bad.append(f"{lam} r={r}: {lhs} != {rhs}")
    return not bad, "; ".join(bad[:3]) + (" ..." if len(bad) > 3 else "") if bad else "all equal"


def c6_slopes(gmax: int, seed: int = 0) -> tuple[bool, str]:
    rnd = random.Random(seed)
    for _ in range(100):
        g = rnd.randint(1, gmax)
        t = tuple(Q(rnd.randint(-50, 50), rnd.randint(1, 9)) for _ in range(g))
        z = Q(rnd.randint(-50, 50), rnd.randint(1, 9))
        sol = hp.solve_slope_system(hp.SlopeSystem(g, hp.spin_slopes(t, z)))
        if not sol.consistent or sol.t != t or sol.z != z:
            return False, f"round trip failed at t={t} z={z}"
    for g in range(1, gmax + 1):
        for lam in _grid_weights(g, 20):
            sol = hp.solve_slope_system(hp.hodge_slope_system(lam))
            want = tuple(Q(-(lam.a(g - pos) + g - pos)) for pos in range(g))
            if not sol.consistent or sol.t != want:
                return False, f"lam={lam}: t={sol.t}"
    return True, "100 random round trips; t_i = -(a_i + i)"


def c7_minuscule(gmax: int = 5) -> tuple[bool, str]:
    for g in range(1, gmax + 1):
        for lam in grid(g, 4):
            if minuscule_pairing(lam + rho_tilde(g)) != motivic_weight(lam):
                return False, f"lam={lam}"
    for n in range(10):
        lam = Weight.from_partition((n,))
        if minuscule_pairing(lam + rho_tilde(1)) != n + 1:
            return False, f"g=1 n={n}"
    return True, f"g<={gmax}"


def c8_plethysm() -> tuple[bool, str]:
    dims = {(1, 2): 3, (2, 2): 15, (1, 3): 4, (2, 3): 52}
    parts = []
    for (g, s), want in dims.items():
        K = wm.traceless_subspace(g, s)
        rep = wm.idempotent_check(g, s, 7)
        if K.dim != want or rep.traceless_dim != K.dim or K.dim + rep.psi_image_rank != (2 * g) ** s:
            return False, f"(g,s)=({g},{s}) dim {K.dim}"
        parts.append(f"({g},{s}):kappa={rep.kappa},sq={'y' if rep.theta_squared_is_kappa_theta else 'n'}")
    return True, " ".join(parts)


def c9_min_prime() -> tuple[bool, str]:
    lam = Weight.from_partition((0, 0))
    p = next(p for p in range(3, 100) if is_prime(p) and exceeds_five(p) and is_p_small(lam, p))
    return p == 7, f"minimal prime {p}"


def run_all(gmax: int = 3) -> list[CheckResult]:
    if not 1 <= gmax <= 4:
        raise ValueError("verify-all supports 1 <= g <= 4")
    plan: list[tuple[int, str, float, Callable[[], tuple[bool, str]]]] = [
        (1, "Hodge-weight quadruples", 1, c1_hodge),
        (2, "Kostant/Hodge bijection", 10, lambda: c2_bijection(gmax)),
        (3, "boundary claims", 60, lambda: c3_claims(gmax)),
        (4, "Weyl-lattice ranks", 120, c4_lattices),
        (5, "Kostant dimension identity", 5, c5_dimension_identity),
        (6, "slope-system round trip", 2, lambda: c6_slopes(gmax)),
        (7, "minuscule pairing", 1, c7_minuscule),
        (8, "plethysm verifier", 60, c8_plethysm),
        (9, "p-smallness gate", 1, c9_min_prime),
    ]
    out = []
    for number, name, limit, fn in plan:
        t0 = time.perf_counter()
        passed, detail = fn()
        out.append(CheckResult(number, name, passed, time.perf_counter() - t0, limit, detail))
    return out
