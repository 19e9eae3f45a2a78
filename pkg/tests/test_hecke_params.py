from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from siegelcomb.hecke_params import (
    SlopeSystem,
    TorusDoubleCoset,
    UnramifiedParameter,
    all_subsets,
    ao_predicate,
    ao_valuations,
    displayed_slopes,
    hodge_slope_system,
    parse_subset,
    satake_restrict,
    solve_slope_system,
    spin_slopes,
    subset_key,
    twist,
    valuations_from_theta,
)
from siegelcomb.root_datum import Weight, grid, motivic_weight

W = Weight.from_partition


def test_subsets_order():
    assert [subset_key(J) for J in all_subsets(2)] == ["{}", "{1}", "{2}", "{1,2}"]
    for J in all_subsets(3):
        assert parse_subset(subset_key(J)) == J


def test_twist():
    phi = UnramifiedParameter((Q(3), Q(1)), Q(4))
    assert twist(phi).gamma == 1
    assert twist(phi, 2).gamma == -2
    assert twist(phi).alphas == phi.alphas


def test_evaluate():
    phi = UnramifiedParameter((2, 1), 5)
    theta, (a, b) = phi.evaluate()
    assert theta == (-2, -1) and a == Q(-3, 2) and b == Q(-5, 2)
    assert phi.character_exponents((1, 0), 0) == -2


rat = st.fractions(min_value=-100, max_value=100, max_denominator=12)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda g: st.tuples(st.lists(rat, min_size=g, max_size=g), rat)))
def test_literal_round_trip(data):
    t, z = data
    sol = solve_slope_system(SlopeSystem(len(t), spin_slopes(t, z)))
    assert sol.consistent and sol.t == tuple(t) and sol.z == z


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda g: st.tuples(st.lists(rat, min_size=g, max_size=g), rat)))
def test_displayed_round_trip(data):
    x, y = data
    sol = solve_slope_system(SlopeSystem(len(x), displayed_slopes(x, y)), "displayed")
    assert sol.consistent and sol.t == tuple(x) and sol.z == y


def test_inconsistent_system():
    sys_ = SlopeSystem.from_sequence(2, [0, 1, 1, 5])
    sol = solve_slope_system(sys_)
    assert not sol.consistent and sol.t is None
    assert "{1,2}" in sol.to_json()["violations"]


def test_hodge_slopes_solution():
    for lam in grid(3, 2):
        g = lam.g
        lit = solve_slope_system(hodge_slope_system(lam))
        assert lit.t == tuple(Q(-(lam.a(i) + i)) for i in range(g, 0, -1))
        assert lit.z == Q(motivic_weight(lam), 2)
        dis = solve_slope_system(hodge_slope_system(lam), "displayed")
        assert dis.t == lit.t
        assert dis.z == -(motivic_weight(lam) + g * (g + 1) // 2)


def test_bad_system_shape():
    with pytest.raises(ValueError):
        SlopeSystem.from_sequence(2, [0, 1, 2])
    with pytest.raises(ValueError):
        solve_slope_system(hodge_slope_system(W((1, 0))), "other")


def test_ao():
    lam = W((5, 3, 1))
    assert ao_valuations(lam) == (8, 5, 0)
    assert ao_predicate([8, 5, 0], lam)
    assert not ao_predicate([8, 5, 1], lam)
    with pytest.raises(ValueError):
        ao_predicate([0], lam)


def test_valuations_from_theta_satisfy_ao():
    for g in (1, 2, 3):
        for lam in grid(g, 3):
            t = solve_slope_system(hodge_slope_system(lam)).t
            assert ao_predicate(valuations_from_theta(t), lam)


def test_satake():
    x = TorusDoubleCoset((0, 1, 2, 3))
    assert satake_restrict(x, 1) == TorusDoubleCoset((1, 2))
    assert satake_restrict(TorusDoubleCoset((1, 1, 2, 2)), 1) is None
    assert satake_restrict(TorusDoubleCoset.unit(3), 2) == TorusDoubleCoset.unit(1)
    assert satake_restrict(TorusDoubleCoset((0, 0, 0, 0)), 2) == TorusDoubleCoset(())
    with pytest.raises(ValueError):
        TorusDoubleCoset((0, 2, 1, 3))
    with pytest.raises(ValueError):
        TorusDoubleCoset((0, 1, 1, 3))
