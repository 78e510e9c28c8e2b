"""Weyl group enumeration, coset graphs, and sign assignments."""
from __future__ import annotations

import pytest

from qbgg.cartan import ParabolicData, RootSystem, Weight
from qbgg.weyl import (BruhatGraph, incomparability_report,
                       kostant_decompose, weyl_group)


@pytest.mark.parametrize("name,order", [
    ("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("B3", 48), ("G2", 12),
    ("D4", 192),
])
def test_group_orders(name, order):
    assert len(weyl_group(RootSystem(name)).elements) == order


def test_longest_length_is_root_count():
    for name in ("A3", "B3", "G2"):
        rs = RootSystem(name)
        W = weyl_group(rs)
        assert max(w.length for w in W.elements) == len(rs.positive_roots)


def test_length_by_inversions_matches_word_length():
    for name in ("A3", "B2", "G2"):
        W = weyl_group(RootSystem(name))
        for w in W.elements:
            assert W.length_by_inversions(w) == w.length


def test_simple_reflection_action():
    rs = RootSystem("A2")
    W = weyl_group(rs)
    s1 = W.simple(1)
    assert W.act(s1, rs.simple_root(1)).coords == (-rs.simple_root(1)).coords
    # s_i permutes the other positive roots
    assert W.act_root(s1, (0, 1)) == (1, 1)


def test_shifted_action_at_zero():
    rs = RootSystem("A2")
    W = weyl_group(rs)
    s1 = W.simple(1)
    # s_1 . 0 = -alpha_1
    assert rs.weight_root_coords_int(W.shifted_act(s1, Weight((0, 0)))) == (-1, 0)


@pytest.mark.parametrize("name,S,levels", [
    ("A1", set(), [1, 1]),
    ("A2", {1}, [1, 1, 1]),
    ("A3", {1, 3}, [1, 1, 2, 1, 1]),
    ("A3", {2, 3}, [1, 1, 1, 1]),
])
def test_coset_levels(name, S, levels):
    G = BruhatGraph(ParabolicData(RootSystem(name), S))
    assert [len(lvl) for lvl in G.levels] == levels


def test_gr24_graph_shape():
    G = BruhatGraph(ParabolicData(RootSystem("A3"), {1, 3}))
    assert len(G.arrows) == 6
    assert len(G.squares) == 1
    for a in G.arrows:
        assert a.target.length == a.source.length + 1
        assert G.P.rs.is_positive_root(a.root)


def test_signs_product_minus_one_on_squares():
    for name, S in [("A3", {1, 3}), ("A3", set()), ("A4", {1, 3, 4})]:
        G = BruhatGraph(ParabolicData(RootSystem(name), S))
        assert G.squares
        for (w1, w2, w3, w4) in G.squares:
            prod = (G.sign(w1, w2) * G.sign(w2, w4)
                    * G.sign(w1, w3) * G.sign(w3, w4))
            assert prod == -1


def test_kostant_decompose():
    rs = RootSystem("A3")
    P = ParabolicData(rs, {1, 3})
    W = weyl_group(rs)
    G = BruhatGraph(P, W=W)
    for w in W.elements:
        wS, wup = kostant_decompose(P, W, w, G.cosets)
        assert wS.length + wup.length == w.length
        assert W.product(wS, wup).matrix == w.matrix


def test_incomparability_positive_cases():
    for name, S in [("A2", {1}), ("A3", {1, 3})]:
        G = BruhatGraph(ParabolicData(RootSystem(name), S))
        assert incomparability_report(G)["ok"]


def test_incomparability_negative_controls():
    # dropping the parabolic makes the pairwise condition fail
    G = BruhatGraph(ParabolicData(RootSystem("A2"), set()))
    assert not incomparability_report(G)["ok"]
    # a non-orbit highest weight breaks the general statement
    rs = RootSystem("A3")
    G2 = BruhatGraph(ParabolicData(rs, {1, 3}))
    rep = incomparability_report(G2, mu=rs.fundamental_weight(3))
    assert not rep["ok"]
