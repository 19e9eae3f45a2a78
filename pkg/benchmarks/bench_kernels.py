"""Compare the numba and numpy kernels on the full Weyl group of GSp(2g).

    python benchmarks/bench_kernels.py [--gmax 7] [--repeat 5]

Prints per-kernel timings and an end-to-end run of ``kostant_reps`` under each
setting of SIEGELCOMB_DISABLE_NUMBA (each in a fresh interpreter).
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from siegelcomb import _kernels as K


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


END_TO_END = """
import time, sys
t0 = time.perf_counter()
from siegelcomb import _kernels
from siegelcomb.weyl import kostant_reps
g = int(sys.argv[1])
for r in range(1, g + 1):
    kostant_reps(g, r)
print(_kernels.USE_NUMBA, time.perf_counter() - t0)
"""


def end_to_end(g: int, disable: bool) -> tuple[str, float]:
    env = dict(os.environ, SIEGELCOMB_DISABLE_NUMBA="1" if disable else "0")
    out = subprocess.run([sys.executable, "-c", END_TO_END, str(g)], env=env, capture_output=True, text=True, check=True)
    flag, secs = out.stdout.split()
    return flag, float(secs)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--gmax", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not K.NUMBA_AVAILABLE:
        print("numba is not installed; only the numpy kernels can run")
        return
    # compile once outside the timings
    warm = K.signed_permutations(2)
    K.lengths_numba(warm)
    K.act_numba(warm, np.arange(2, 0, -1, dtype=np.int64))

    print(f"{'g':>2} {'|W|':>8} {'kernel':>8} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for g in range(3, args.gmax + 1):
        table = K.signed_permutations(g)
        x = np.arange(g, 0, -1, dtype=np.int64)
        assert np.array_equal(K.lengths_numpy(table), K.lengths_numba(table))
        assert np.array_equal(K.act_numpy(table, x), K.act_numba(table, x))
        for name, a, b in (
            ("lengths", lambda: K.lengths_numpy(table), lambda: K.lengths_numba(table)),
            ("act", lambda: K.act_numpy(table, x), lambda: K.act_numba(table, x)),
        ):
            ta, tb = best_of(a, args.repeat), best_of(b, args.repeat)
            print(f"{g:>2} {len(table):>8} {name:>8} {1e3 * ta:>10.2f} {1e3 * tb:>10.2f} {ta / tb:>8.1f}")

    print()
    print("end to end: all parabolics of one genus, fresh interpreter (includes import and JIT)")
    for g in (5, min(6, args.gmax)):
        for disable in (True, False):
            flag, secs = end_to_end(g, disable)
            print(f"  g={g} numba={flag:<5} {secs:.2f}s")


if __name__ == "__main__":
    main()
