import pytest

from siegelcomb.bgg_hodge import (
    bgg_complex,
    claim_84_check,
    claim_87_check,
    coherent_degrees,
    hodge_jump,
    hodge_weights,
    j_B,
    kostant_character_identity,
    kostant_mod_p,
    levi_dimension_sum,
    r_sequences,
    split_levi,
    strata_dims,
    zero_and_top_loci,
)
from siegelcomb.root_datum import Weight, grid, h_pairing, half_dimension, motivic_weight
from siegelcomb.weyl import WeylElement, siegel_reps

W = Weight.from_partition


@pytest.mark.parametrize(
    "parts,want",
    [((5, 5), [0, 6, 7, 13]), ((3, 3), [0, 4, 5, 9]), ((0, 0), [0, 1, 2, 3]), ((0, 0, 0), [0, 1, 2, 3, 3, 4, 5, 6])],
)
def test_hodge_examples(parts, want):
    assert hodge_weights(W(parts)) == want


def test_jump_equals_j_of_sign_labels():
    for g in (1, 2, 3):
        for lam in grid(g, 2):
            for w, _ in siegel_reps(g):
                assert hodge_jump(w, lam) == j_B(lam, w.sign_labels())


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_zero_and_top_loci(g):
    for lam in grid(g, 1):
        assert zero_and_top_loci(lam) == (True, True)


def test_complement_symmetry():
    for lam in grid(3, 2):
        w = motivic_weight(lam)
        hw = hodge_weights(lam)
        assert sorted(w - j for j in hw) == hw


def test_bgg_descriptor():
    lam = W((2, 1))
    desc = bgg_complex(lam, 11)
    assert all(desc.checks().values())
    assert desc.jumps() == hodge_weights(lam)
    assert desc.p_small is True
    assert [e.length for e in desc.entries] == [0, 1, 2, 3]
    js = desc.to_json()
    assert js["realizable_jumps"]["3"][-1] == motivic_weight(lam)


def test_coherent_degrees():
    lam = W((2, 1))
    (mu0, d), (mu1, q) = coherent_degrees(lam)
    assert mu0 == lam and d == half_dimension(2) and q == 0
    assert -h_pairing(mu1) == motivic_weight(lam)


def test_kostant_mod_p_g1():
    lam = W((3,))
    dec = kostant_mod_p(lam, 1)
    assert sorted(dec.by_degree) == [0, 1]
    (w0, m0), = dec.by_degree[0]
    (w1, m1), = dec.by_degree[1]
    assert m0.linear == (3,) and m1.linear == (-5,)
    assert m0.hermitian.coords == () and m1.hermitian.coords == ()


@pytest.mark.parametrize("parts", [(0, 0), (1, 0), (1, 1), (2, 1), (1, 0, 0), (1, 1, 0)])
def test_character_identity(parts):
    lam = W(parts)
    for r in range(1, lam.g + 1):
        assert kostant_character_identity(lam, r)


def test_levi_dimension_sum_differs_from_dim():
    # the Levi pieces over W^(P_r) add up to more than dim V_lambda
    assert levi_dimension_sum(W((0, 0)), 1) == (6, 1)
    assert levi_dimension_sum(W((0, 0)), 2) == (8, 1)


def test_split_levi():
    mu = Weight((3, 1, 0), 4)
    m = split_levi(mu, 1)
    assert m.linear == (3,) and m.hermitian == Weight((1, 0), 1)


def test_claims():
    for g in (2, 3):
        for lam in grid(g, 1):
            for r in range(1, g + 1):
                rep = claim_84_check(lam, r)
                assert rep.ok and len(rep.rows) > 0
    for lam in grid(3, 1):
        rep = claim_87_check(lam, 2)
        assert rep.ok and rep.dot_consistent


def test_r_sequences():
    assert r_sequences(3, 2) == [(1, 1), (1, 2), (2, 1)]


def test_claims_need_standard_weights():
    with pytest.raises(ValueError):
        claim_84_check(Weight((1, 1), 0), 1)


def test_strata():
    assert strata_dims(2) == [3, 1, 0]
    assert strata_dims(0) == [0]
