import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from siegelcomb.root_datum import Weight, half_dimension, rho
from siegelcomb.weyl import (
    MAX_GENUS,
    WeylElement,
    dot_action,
    elements,
    embed,
    enumerate as enumerate_group,
    iterated_dot,
    kostant_reps,
    length,
    longest_element,
    order,
    parabolic,
    unique_top_rep,
)

W = Weight.from_partition


@pytest.mark.parametrize("g,n", [(1, 2), (2, 8), (3, 48), (4, 384)])
def test_enumerate(g, n):
    els = enumerate_group(g)
    assert len(els) == n == len(set(els)) == order(g)


def test_size_guard():
    with pytest.raises(ValueError, match="limited"):
        elements(MAX_GENUS + 1)


@pytest.mark.parametrize("g", range(1, 4))
def test_group_axioms(g):
    G = elements(g)
    e = WeylElement.identity(g)
    rnd = random.Random(g)
    for _ in range(200):
        a, b, c = rnd.choice(G), rnd.choice(G), rnd.choice(G)
        assert (a * b) * c == a * (b * c)
    for a in G:
        assert a * e == e * a == a
        assert a * a.inverse() == e
    assert all(a * b in set(G) for a in G[:8] for b in G)


@pytest.mark.parametrize("g", range(1, 4))
def test_action_is_action_and_fixes_centre(g):
    G = elements(g)
    lam = Weight(tuple(range(5, 5 - g, -1)), 7 + (sum(range(5, 5 - g, -1)) - 7) % 2)
    for a in G:
        assert a.act(lam).central == lam.central
        for b in G[:12]:
            assert (a * b).act(lam) == a.act(b.act(lam))
            # the shifted identity for the dot action
            assert dot_action(a * b, lam) == dot_action(a, dot_action(b, lam))


def test_lengths():
    assert length(WeylElement.identity(3)) == 0
    for g in range(1, 6):
        w0 = longest_element(g)
        assert length(w0) == g * g
        assert max(length(w) for w in elements(min(g, 4))) == min(g, 4) ** 2


def test_flip_both_has_length_d_representative():
    # (a_2, a_1; c) -> (-a_2, -a_1; c): its coset representative in W^M has length d = 3
    w = longest_element(2)
    rep = [r for r, _ in kostant_reps(2) if all(x == 1 for x in (r * w.inverse()).signs)]
    assert len(rep) == 1 and length(rep[0]) == 3 == half_dimension(2)


def gaussian_counts(g):
    poly = {0: 1}
    for i in range(1, g + 1):
        new = {}
        for k, v in poly.items():
            new[k] = new.get(k, 0) + v
            new[k + i] = new.get(k + i, 0) + v
        poly = new
    return dict(sorted(poly.items()))


def strictly_levi_dominant(vec, r):
    head, tail = vec[:r], vec[r:]
    ok_head = all(head[k] > head[k + 1] for k in range(len(head) - 1))
    ok_tail = all(tail[k] > tail[k + 1] for k in range(len(tail) - 1)) and (not tail or tail[-1] > 0)
    return ok_head and ok_tail


@pytest.mark.parametrize("g", range(1, 6))
def test_siegel_reps(g):
    table = kostant_reps(g, "siegel")
    assert len(table) == 2 ** g
    assert table.length_counts() == gaussian_counts(g)
    assert len(table.of_length(half_dimension(g))) == 1
    assert unique_top_rep(g) == table.of_length(half_dimension(g))[0]


@pytest.mark.parametrize("g", range(1, 5))
def test_parabolic_reps_against_dominance_oracle(g):
    for r in range(1, g + 1):
        table = kostant_reps(g, r)
        assert len(table) == 2 ** r * comb(g, r) == parabolic(g, r).index()
        oracle = {w for w in elements(g) if strictly_levi_dominant(w.apply(rho(g).coords), r)}
        assert set(table.reps) == oracle
        par = parabolic(g, r)
        # each rep is the unique shortest element of its right coset
        levi = [v for v in elements(g) if par.contains(v)]
        assert len(levi) == par.levi_order()
        for w in table.reps[:12]:
            coset = [length(v * w) for v in levi]
            assert coset.count(min(coset)) == 1 and min(coset) == length(w)


def test_small_examples():
    assert sorted(n for _, n in kostant_reps(2)) == [0, 1, 2, 3]
    assert sorted(n for _, n in kostant_reps(1)) == [0, 1]
    assert len(kostant_reps(2, 1)) == 4
    assert parabolic(3, "siegel").r == 3 and parabolic(3, "P_2").r == 2
    with pytest.raises(ValueError):
        kostant_reps(2, 3)


def test_dot_examples():
    lam = W((5, 5))
    assert dot_action(WeylElement.identity(2), lam) == lam
    assert iterated_dot(lam, []) == lam
    top = unique_top_rep(2)
    mu = dot_action(top, lam)
    assert -((sum(mu.coords) - mu.central) // 2) == 13


def test_embed_and_iterated_dot():
    g = 3
    lam = W((4, 2, 1))
    rnd = random.Random(3)
    G3, G2, G1 = elements(3), [embed(w, 3) for w in elements(2)], [embed(w, 3) for w in elements(1)]
    for _ in range(100):
        chain = [rnd.choice(G3), rnd.choice(G2), rnd.choice(G1)]
        comp = chain[2] * chain[1] * chain[0]
        assert iterated_dot(lam, chain) == dot_action(comp, lam)
    with pytest.raises(ValueError, match="does not lie"):
        iterated_dot(lam, [G3[0], WeylElement.flip(3, {3})])


def test_flip_labels():
    w = WeylElement.flip(2, {1})
    assert w.act(Weight((5, 3), 8)) == Weight((5, -3), 8)
    assert w.sign_labels() == frozenset({1})


@settings(max_examples=50)
@given(st.integers(1, 5), st.randoms())
def test_signed_roundtrip(g, rnd):
    perm = list(range(g))
    rnd.shuffle(perm)
    signs = [rnd.choice((1, -1)) for _ in range(g)]
    w = WeylElement(tuple(perm), tuple(signs))
    assert WeylElement.from_signed(w.signed()) == w
    assert length(w) == length(w.inverse())
