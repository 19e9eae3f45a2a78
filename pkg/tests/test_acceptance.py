"""Exit criteria, one printed pass/fail line each."""
import pytest

from siegelcomb import verify

GMAX = 4

PLAN = [
    (1, "Hodge-weight quadruples", 1, verify.c1_hodge),
    (2, "Kostant/Hodge bijection", 10, lambda: verify.c2_bijection(GMAX)),
    (3, "boundary claims", 60, lambda: verify.c3_claims(3)),
    (4, "Weyl-lattice ranks", 120, verify.c4_lattices),
    (5, "Kostant dimension identity", 5, verify.c5_dimension_identity),
    (6, "slope-system round trip", 2, lambda: verify.c6_slopes(GMAX)),
    (7, "minuscule pairing", 1, lambda: verify.c7_minuscule(5)),
    (8, "plethysm verifier", 60, verify.c8_plethysm),
    (9, "p-smallness gate", 1, verify.c9_min_prime),
]


@pytest.mark.parametrize("number,name,limit,fn", PLAN, ids=[f"criterion_{n}" for n, *_ in PLAN])
def test_criterion(number, name, limit, fn, capsys):
    import time

    t0 = time.perf_counter()
    passed, detail = fn()
    res = verify.CheckResult(number, name, passed, time.perf_counter() - t0, limit, detail)
    with capsys.disabled():
        print("\n" + res.line())
    assert res.ok, res.line()
