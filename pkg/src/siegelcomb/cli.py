"""Command-line front end.

Exit status: 0 on success, 1 on usage errors (bad flags, unparseable or
parity-violating weights, size budget), 2 when a mathematical check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction as Q
from typing import Any, Sequence

from . import bgg_hodge as bh
from . import characters
from . import hecke_params as hp
from . import weyl as wy
from . import weyl_modules as wm
from .root_datum import (
    Weight,
    cartan_matrix,
    dual_root_datum,
    half_dimension,
    is_prime,
    motivic_weight,
    rho,
    rho_tilde,
    simple_roots,
    symplectic_root_datum,
)


class UsageError(Exception):
    pass


class MathFailure(Exception):
    def __init__(self, payload: dict, message: str):
        super().__init__(message)
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 by default; usage errors are 1 here
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(1)


# ---------------------------------------------------------------------- parsing


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"cannot parse {what} {text!r}: expected comma-separated integers") from None


def _rationals(text: str, what: str) -> list[Q]:
    try:
        return [Q(x) for x in text.replace(" ", "").split(",") if x != ""]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {what} {text!r}: expected comma-separated rationals") from None


def parse_weight(args) -> Weight:
    text = args.lam
    central = args.c
    if text is None:
        if args.g is None:
            raise UsageError("give --g or --lambda")
        coords: list[int] = [0] * args.g
    else:
        if ";" in text:
            head, tail = text.split(";", 1)
            coords = _ints(head, "weight")
            if central is not None and int(tail) != central:
                raise UsageError("central value given twice with different values")
            central = _ints(tail, "central value")[0]
        else:
            coords = _ints(text, "weight")
    if args.g is not None and len(coords) != args.g:
        raise UsageError(f"--lambda has {len(coords)} entries but --g is {args.g}")
    if not coords:
        raise UsageError("empty weight")
    if central is None:
        central = sum(coords)
    try:
        return Weight(tuple(coords), central)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _genus(args) -> int:
    if args.g is not None:
        if args.g < 1:
            raise UsageError("--g must be positive")
        return args.g
    if args.lam is not None:
        return parse_weight(args).g
    raise UsageError("give --g")


def _prime(args, default: int | None = None, required: bool = False) -> int | None:
    p = args.p if args.p is not None else default
    if p is None:
        if required:
            raise UsageError("give --p")
        return None
    if not is_prime(p):
        raise UsageError(f"--p {p} is not a prime")
    if p == 2:
        raise UsageError("p = 2 is not supported")
    return p


def _dominant(lam: Weight) -> Weight:
    if not lam.is_dominant():
        raise UsageError(f"weight {lam} is not dominant")
    return lam


# ---------------------------------------------------------------------- commands


def cmd_roots(args) -> dict:
    g = _genus(args)
    rd = symplectic_root_datum(g)
    dual = dual_root_datum(rd)
    return {
        "g": g,
        "simple_roots": [list(r.vector) + [0] for r in simple_roots(g)],
        "simple_coroots": [[str(x) for x in r.coroot()] + ["0"] for r in simple_roots(g)],
        "cartan_matrix": cartan_matrix(g),
        "positive_roots": len(rd.positive_roots),
        "rho": rho(g).to_json(),
        "rho_tilde": rho_tilde(g).to_json(),
        "dual_side": dual.side,
        "dual_cartan_matrix": [[str(x) for x in row] for row in dual.pairing_matrix()],
    }


def cmd_weyl(args) -> dict:
    g = _genus(args)
    if g > wy.MAX_GENUS:
        raise UsageError(f"size budget: the Weyl group is enumerated for g <= {wy.MAX_GENUS}")
    from . import _kernels

    lens = _kernels.lengths(_kernels.signed_permutations(g)).tolist()
    counts: dict[int, int] = {}
    for n in lens:
        counts[n] = counts.get(n, 0) + 1
    return {
        "g": g,
        "order": len(lens),
        "longest_element": list(wy.longest_element(g).signed()),
        "longest_length": wy.length(wy.longest_element(g)),
        "length_counts": {str(k): v for k, v in sorted(counts.items())},
    }


def cmd_kostant(args) -> dict:
    g = _genus(args)
    which = "siegel" if args.r is None else args.r
    try:
        table = wy.kostant_reps(g, which)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {
        "g": g,
        "parabolic": table.parabolic.name,
        "count": len(table),
        "length_counts": {str(k): v for k, v in table.length_counts().items()},
        "entries": [
            {"element": list(w.signed()), "length": n, "rho_image": [str(x) for x in wy.rho_image(w)]}
            for w, n in table
        ],
    }


def cmd_hodge(args) -> dict:
    lam = _dominant(parse_weight(args))
    return {"g": lam.g, "lambda": lam.to_json(), "w": motivic_weight(lam), "weights": bh.hodge_weights(lam)}


def cmd_bgg(args) -> dict:
    lam = _dominant(parse_weight(args))
    desc = bh.bgg_complex(lam, _prime(args))
    out = desc.to_json()
    if lam.central == lam.size:
        out["checks"]["claim84"] = all(bh.claim_84_check(lam, r).ok for r in range(1, lam.g + 1))
    out["coherent_degrees"] = [{"weight": mu.to_json(), "degree": q} for mu, q in bh.coherent_degrees(lam)]
    if not all(out["checks"].values()):
        raise MathFailure(out, "BGG descriptor check failed")
    return out


def cmd_kostant_modp(args) -> dict:
    lam = _dominant(parse_weight(args))
    if args.r is None:
        raise UsageError("give --r")
    if not 1 <= args.r <= lam.g:
        raise UsageError(f"--r must lie in 1..{lam.g}")
    dec = bh.kostant_mod_p(lam, args.r, _prime(args))
    out = dec.to_json()
    out["character_identity"] = bh.kostant_character_identity(lam, args.r)
    lhs, rhs = bh.levi_dimension_sum(lam, args.r)
    out["levi_dimension_sum"] = lhs
    out["dimension"] = rhs
    if not out["character_identity"]:
        raise MathFailure(out, "Kostant character identity failed")
    return out


def _standard(args) -> Weight:
    lam = _dominant(parse_weight(args))
    if lam.central != lam.size:
        raise UsageError("this check needs c = sum(a)")
    return lam


def cmd_claim84(args) -> dict:
    lam = _standard(args)
    rs = range(1, lam.g + 1) if args.r is None else [args.r]
    if args.r is not None and not 1 <= args.r <= lam.g:
        raise UsageError(f"--r must lie in 1..{lam.g}")
    reports = [bh.claim_84_check(lam, r) for r in rs]
    out = {"lambda": lam.to_json(), "ok": all(r.ok for r in reports), "reports": [r.to_json() for r in reports]}
    if not out["ok"]:
        raise MathFailure(out, "counterexample found")
    return out


def cmd_claim87(args) -> dict:
    lam = _standard(args)
    depth = 2 if args.depth is None else args.depth
    if not 1 <= depth <= lam.g:
        raise UsageError(f"--depth must lie in 1..{lam.g}")
    rep = bh.claim_87_check(lam, depth)
    out = rep.to_json()
    if not rep.ok:
        raise MathFailure(out, "counterexample found")
    return out


def _apply_budget(args) -> None:
    if args.budget is not None:
        if args.budget < 1:
            raise UsageError("--budget must be positive")
        wm.MAX_TENSOR_DIMENSION = args.budget
        characters.MAX_DIMENSION = args.budget


def cmd_lattice(args) -> dict:
    lam = _standard(args)
    s = lam.size
    p = args.p
    if p is None:
        p = max(3, s + 1)
        while not is_prime(p):
            p += 1
    p = _prime(argparse.Namespace(p=p))
    if p <= s:
        raise UsageError(f"need p > |lambda| = {s}")
    rep = wm.weyl_lattice(lam, p)
    out = rep.to_json()
    out["p_free_all"] = all(rep.p_free.values())
    if not rep.rank_matches:
        raise MathFailure(out, "rank differs from the Weyl dimension")
    return out


def cmd_traceless(args) -> dict:
    g = _genus(args)
    s = 2 if args.s is None else args.s
    if s < 0:
        raise UsageError("--s must be non-negative")
    K = wm.traceless_subspace(g, s)
    psi = wm.psi_image_rank(g, s)
    out = {"g": g, "s": s, "dimension": K.dim, "psi_image_rank": psi, "ambient": (2 * g) ** s,
           "block_dims": {",".join(map(str, w)): n for w, n in K.block_dims().items()}}
    if K.dim + psi != (2 * g) ** s:
        raise MathFailure(out, "kernel and insertion image do not fill the tensor space")
    return out


def cmd_idempotent(args) -> dict:
    g = _genus(args)
    s = 2 if args.s is None else args.s
    p = _prime(args, default=7)
    if (2 * g) % p == 0:
        raise UsageError(f"p={p} divides 2g")
    return wm.idempotent_check(g, s, p).to_json()


def _slopes_payload(g: int, system: hp.SlopeSystem, mode: str) -> dict:
    sol = hp.solve_slope_system(system, mode)
    out = {"g": g, "slopes": system.to_json(), "consistent": sol.consistent}
    js = sol.to_json()
    out["solution"] = js["solution"]
    out["mode"] = mode
    if js["violations"]:
        out["violations"] = js["violations"]
    return out


def cmd_slopes(args) -> dict:
    if args.t is not None:
        t = _rationals(args.t, "--t")
        z = _rationals(args.z or "0", "--z")[0]
        if args.g is not None and len(t) != args.g:
            raise UsageError(f"--t has {len(t)} entries but --g is {args.g}")
        return _slopes_payload(len(t), hp.SlopeSystem(len(t), hp.spin_slopes(t, z)), args.mode)
    lam = _dominant(parse_weight(args))
    return _slopes_payload(lam.g, hp.hodge_slope_system(lam), args.mode)


def cmd_solve_slopes(args) -> dict:
    if args.slopes is None:
        raise UsageError("give --slopes (2^g values ordered by subset size, then lexicographically)")
    vals = _rationals(args.slopes, "--slopes")
    n = len(vals)
    g = n.bit_length() - 1
    if n < 2 or 2 ** g != n:
        raise UsageError(f"--slopes needs 2^g values, got {n}")
    if args.g is not None and args.g != g:
        raise UsageError(f"--slopes has 2^{g} values but --g is {args.g}")
    return _slopes_payload(g, hp.SlopeSystem.from_sequence(g, vals), args.mode)


def cmd_ao(args) -> dict:
    lam = _dominant(parse_weight(args))
    if args.valuations is None:
        raise UsageError("give --valuations")
    vals = _rationals(args.valuations, "--valuations")
    if len(vals) != lam.g:
        raise UsageError(f"need {lam.g} valuations, got {len(vals)}")
    return {"lambda": lam.to_json(), "valuations": [str(v) for v in vals],
            "expected": list(hp.ao_valuations(lam)), "ao": hp.ao_predicate(vals, lam)}


def cmd_satake(args) -> dict:
    if args.exponents is None:
        raise UsageError("give --exponents (2g weakly increasing integers)")
    try:
        x = hp.TorusDoubleCoset(tuple(_ints(args.exponents, "--exponents")))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.g is not None and args.g != x.g:
        raise UsageError(f"--exponents describe genus {x.g} but --g is {args.g}")
    r = 1 if args.r is None else args.r
    if not 1 <= r <= x.g:
        raise UsageError(f"--r must lie in 1..{x.g}")
    img = hp.satake_restrict(x, r)
    return {"input": x.to_json(), "r": r, "image": None if img is None else img.to_json(), "zero": img is None}


def cmd_strata(args) -> Any:
    g = _genus(args)
    return bh.strata_dims(g)


def cmd_verify_all(args) -> dict:
    from .verify import run_all

    g = 3 if args.g is None else args.g
    if not 1 <= g <= 4:
        raise UsageError("verify-all supports 1 <= --g <= 4")
    results = run_all(g)
    out = {"g": g, "ok": all(r.ok for r in results), "criteria": [r.to_json() for r in results]}
    if args.format == "table":
        for r in results:
            sys.stderr.write(r.line() + "\n")
    if not out["ok"]:
        raise MathFailure(out, "acceptance criteria failed: " + ", ".join(str(r.number) for r in results if not r.ok))
    return out


COMMANDS = {
    "roots": (cmd_roots, "simple roots, coroots, Cartan matrix, rho, dual datum"),
    "weyl": (cmd_weyl, "Weyl group order and length distribution"),
    "kostant": (cmd_kostant, "Kostant representatives (Siegel, or P_r with --r)"),
    "hodge": (cmd_hodge, "Hodge weights j_B"),
    "bgg": (cmd_bgg, "BGG complex descriptor"),
    "kostant-modp": (cmd_kostant_modp, "Levi decomposition over W^(P_r)"),
    "claim84": (cmd_claim84, "boundary jump sets never contain both 0 and w"),
    "claim87": (cmd_claim87, "iterated boundary version"),
    "lattice": (cmd_lattice, "Weyl lattice from a Young symmetrizer"),
    "traceless": (cmd_traceless, "dimension of the traceless tensors (--s)"),
    "idempotent-check": (cmd_idempotent, "measured Theta^2 versus kappa Theta"),
    "slopes": (cmd_slopes, "spin slopes from --t/--z or from lambda"),
    "solve-slopes": (cmd_solve_slopes, "solve a slope system"),
    "ao": (cmd_ao, "ordinarity predicate on T_(p,r) valuations"),
    "satake": (cmd_satake, "restriction of a torus double coset"),
    "strata": (cmd_strata, "dimensions of the boundary strata"),
    "verify-all": (cmd_verify_all, "run the acceptance checks"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--g", type=int)
    common.add_argument("--lambda", dest="lam", help="a_g,...,a_1 (optionally ';c')")
    common.add_argument("--c", type=int, help="central value; defaults to the coordinate sum")
    common.add_argument("--p", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--depth", type=int)
    common.add_argument("--s", type=int, help="tensor degree")
    common.add_argument("--t", help="ord theta_g,...,ord theta_1")
    common.add_argument("--z", help="ord zeta")
    common.add_argument("--slopes", help="2^g slopes, subsets by size then lexicographic")
    common.add_argument("--mode", choices=("literal", "displayed"), default="literal")
    common.add_argument("--valuations")
    common.add_argument("--exponents")
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--budget", type=int, help="tensor/representation dimension budget")
    parser = _Parser(prog="siegelcomb", description="GSp(2g) weight and Weyl-group combinatorics")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, helptext) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=helptext)
    return parser


# ---------------------------------------------------------------------- output


def _plain(x):
    if isinstance(x, Q):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def render_json(payload) -> str:
    return json.dumps(_plain(payload), sort_keys=True, indent=2)


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def render_table(payload) -> str:
    payload = _plain(payload)
    if not isinstance(payload, dict):
        return _cell(payload)
    lines = []
    scalars = {k: v for k, v in payload.items() if not (isinstance(v, list) and v and isinstance(v[0], dict))}
    width = max((len(k) for k in scalars), default=0)
    for k in sorted(scalars):
        lines.append(f"{k.ljust(width)}  {_cell(scalars[k])}")
    for k in sorted(payload):
        rows = payload[k]
        if not (isinstance(rows, list) and rows and isinstance(rows[0], dict)):
            continue
        cols = sorted({c for row in rows for c in row})
        cells = [[_cell(row.get(c, "")) for c in cols] for row in rows]
        widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in zip(range(len(cols)), cols)]
        lines.append("")
        lines.append(k)
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
        for r in cells:
            lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fn = COMMANDS[args.command][0]
    render = render_json if args.format == "json" else render_table
    saved = (wm.MAX_TENSOR_DIMENSION, characters.MAX_DIMENSION)
    try:
        _apply_budget(args)
        payload = fn(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except MathFailure as exc:
        print(render(exc.payload))
        sys.stderr.write(f"check failed: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    finally:
        wm.MAX_TENSOR_DIMENSION, characters.MAX_DIMENSION = saved
    print(render(payload))
    return 0


if __name__ == "__main__":
    sys.exit(main())
