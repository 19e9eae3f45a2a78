from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from siegelcomb.root_datum import (
    HalfWeight,
    Weight,
    cartan_matrix,
    dual_root_datum,
    dual_weight,
    exceeds_five,
    grid,
    h_pairing,
    is_p_small,
    is_p_small_levi_bound,
    minimal_admissible_prime,
    minuscule_pairing,
    motivic_weight,
    positive_roots,
    rho,
    rho_tilde,
    root_system,
    simple_roots,
    spin_weights,
    symplectic_root_datum,
    varpi_hat,
)

W = Weight.from_partition


def type_c_cartan(g):
    # rows/columns alpha_g..alpha_1; alpha_1 = 2e_1 is the long root
    A = [[0] * g for _ in range(g)]
    for i in range(g):
        A[i][i] = 2
        if i + 1 < g:
            A[i][i + 1] = -1
            A[i + 1][i] = -1
    if g > 1:
        A[g - 1][g - 2] = -2
    return A


def test_parity_is_enforced():
    with pytest.raises(ValueError, match="parity"):
        Weight((1, 0), 0)
    assert Weight((1, 0), 3).central == 3


def test_simple_roots_g2():
    a2, a1 = simple_roots(2)
    assert a2.vector == (1, -1) and a1.vector == (0, 2)
    assert a2.coroot() == (1, -1) and a1.coroot() == (0, 1)


def test_simple_roots_g1():
    (a1,) = simple_roots(1)
    assert a1.vector == (2,) and a1.coroot() == (1,)


def test_g0_rejected():
    with pytest.raises(ValueError):
        simple_roots(0)


@pytest.mark.parametrize("g", range(1, 7))
def test_cartan_and_root_count(g):
    assert cartan_matrix(g) == type_c_cartan(g)
    assert len(positive_roots(g)) == g * g
    full = {r.vector for r in root_system(g)}
    expected = set()
    for i in range(g):
        for j in range(g):
            if i == j:
                continue
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0] * g
                    v[i], v[j] = si, sj
                    expected.add(tuple(v))
        for s in (2, -2):
            v = [0] * g
            v[i] = s
            expected.add(tuple(v))
    assert full == expected


def test_cartan_g3_literal():
    assert cartan_matrix(3) == [[2, -1, 0], [-1, 2, -1], [0, -2, 2]]


@pytest.mark.parametrize("g", range(1, 6))
def test_double_duality_and_rho(g):
    rd = symplectic_root_datum(g)
    assert dual_root_datum(dual_root_datum(rd)) == rd
    assert dual_root_datum(rd).side == "spin"
    assert rd.rho == tuple(Q(g - k) for k in range(g)) + (Q(0),)
    dual = dual_root_datum(rd).pairing_matrix()
    assert dual == [list(map(Q, row)) for row in zip(*cartan_matrix(g))]


def test_rho_values():
    assert rho(2) == HalfWeight((2, 1), 0)
    assert rho_tilde(2) == Weight((2, 1), 3)
    assert dual_weight(W((5, 5))) == Weight((5, 5), -10)
    assert dual_weight(W((0, 0, 0))) == W((0, 0, 0))


def test_rho_parity():
    # |rho| = d is odd for g = 1, 2, so rho is not a character; it stays in the half lattice
    with pytest.raises(ValueError):
        rho(2).to_weight()
    assert rho(3).to_weight() == Weight((3, 2, 1), 0)


@pytest.mark.parametrize("parts,w", [((5, 5), 13), ((3, 3), 9), ((0, 0), 3)])
def test_motivic_weight(parts, w):
    assert motivic_weight(W(parts)) == w


def test_motivic_weight_rejects_non_dominant():
    with pytest.raises(ValueError, match="not dominant"):
        motivic_weight(Weight((0, 1), 1))


def test_p_small():
    assert is_p_small(W((5, 5)), 31)
    assert not is_p_small(W((5, 5)), 13)
    assert is_p_small(W((0, 0)), 7)
    assert not exceeds_five(5) and exceeds_five(7)
    assert minimal_admissible_prime(W((0, 0))) == 7
    with pytest.raises(ValueError):
        is_p_small(W((0, 0)), 2)
    with pytest.raises(ValueError):
        is_p_small(W((0, 0)), 9)


def test_levi_bound_is_separate():
    # a_g + a_(g-1) + g + (g-1) < p ignores a_1, ..., a_(g-2), so it is weaker for g >= 3
    lam = W((5, 5, 5))
    assert is_p_small_levi_bound(lam, 17) and not is_p_small(lam, 17)
    assert is_p_small(lam, 23)
    assert not is_p_small_levi_bound(lam, 13)


def test_h_pairing_examples():
    assert h_pairing(rho(2)) == Q(3, 2)
    assert h_pairing(W((4, 4))) == 0
    assert h_pairing(Weight((1, 0), 1)) == 0
    assert h_pairing(Weight((0, -1), 1)) == -1


def test_minuscule_examples():
    assert minuscule_pairing(W((5, 5)) + rho_tilde(2)) == 13
    assert minuscule_pairing(W((0, 0))) == 0
    for n in range(8):
        assert minuscule_pairing(W((n,)) + rho_tilde(1)) == n + 1
    assert varpi_hat(3) == HalfWeight((Q(1, 2),) * 3, Q(1, 2))


@pytest.mark.parametrize("g", range(1, 6))
def test_minuscule_equals_motivic_on_grid(g):
    for lam in grid(g, 3):
        assert minuscule_pairing(lam + rho_tilde(g)) == motivic_weight(lam) == lam.size + g * (g + 1) // 2


def test_spin_weights_pair_to_hodge_weights():
    lam = W((5, 5))
    vals = sorted(
        sum(a * b for a, b in zip((*eta.coords, eta.central), (*(lam + rho_tilde(2)).coords, (lam + rho_tilde(2)).central)))
        for eta in spin_weights(2).values()
    )
    assert vals == [0, 6, 7, 13]


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6), st.integers(-20, 20))
def test_pairings_integral(coords, c):
    if (sum(coords) - c) % 2:
        c += 1
    mu = Weight(tuple(coords), c)
    assert isinstance(h_pairing(mu), int)
    assert isinstance(minuscule_pairing(mu), int)
    assert minuscule_pairing(mu) - h_pairing(mu) == c
