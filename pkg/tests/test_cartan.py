"""Root system data against classical tables."""
from __future__ import annotations


import pytest
from hypothesis import given
from hypothesis import strategies as st

from qbgg.cartan import ParabolicData, RootSystem, Weight


@pytest.mark.parametrize("name,count", [
    ("A1", 1), ("A2", 3), ("A3", 6), ("A4", 10), ("B2", 4), ("B3", 9),
    ("C3", 9), ("D4", 12), ("G2", 6), ("F4", 24), ("B5", 25), ("C5", 25),
    ("D5", 20),
])
def test_positive_root_counts(name, count):
    assert len(RootSystem(name).positive_roots) == count


@pytest.mark.parametrize("name,height", [
    ("A1", 1), ("A3", 3), ("A5", 5), ("B3", 5), ("C3", 5), ("D4", 5),
    ("G2", 5), ("F4", 11),
])
def test_highest_root_height(name, height):
    rs = RootSystem(name)
    assert sum(rs.highest_root()) == height


def test_symmetrizers():
    assert RootSystem("A3").d == [1, 1, 1]
    assert RootSystem("B2").d == [2, 1]
    assert RootSystem("C3").d == [1, 1, 2]
    assert RootSystem("G2").d == [1, 3] or RootSystem("G2").d == [3, 1]


def test_inner_product_symmetric_and_norms():
    for name in ("A2", "B2", "G2", "C3"):
        rs = RootSystem(name)
        for i in range(1, rs.rank + 1):
            ai = rs.simple_root(i)
            assert rs.inner(ai, ai) == 2 * rs.d[i - 1]
            for j in range(1, rs.rank + 1):
                aj = rs.simple_root(j)
                assert rs.inner(ai, aj) == rs.inner(aj, ai)
                assert rs.bform[i - 1][j - 1] == rs.inner(ai, aj)


@given(st.sampled_from(["A2", "B2", "B3", "G2"]),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_weight_root_coordinate_roundtrip(name, coords):
    rs = RootSystem(name)
    beta = tuple(coords[:rs.rank])
    w = rs.root_to_weight(beta)
    assert rs.weight_root_coords_int(w) == beta


def test_fundamental_weight_pairing():
    for name in ("A3", "B3", "G2"):
        rs = RootSystem(name)
        for i in range(1, rs.rank + 1):
            w = rs.fundamental_weight(i)
            for j in range(1, rs.rank + 1):
                assert rs.pairing_coroot(w, j) == (1 if i == j else 0)


def test_cominuscule_classification():
    # every node of A_n; only the first node of B_n; only the last of C_n
    for s in (1, 2, 3):
        assert ParabolicData(RootSystem("A3"), {1, 2, 3} - {s}).irreducible_flag
    assert ParabolicData(RootSystem("B3"), {2, 3}).irreducible_flag
    assert not ParabolicData(RootSystem("B3"), {1, 2}).irreducible_flag
    assert ParabolicData(RootSystem("C3"), {1, 2}).irreducible_flag
    assert not ParabolicData(RootSystem("C3"), {2, 3}).irreducible_flag
    assert not ParabolicData(RootSystem("G2"), {1}).irreducible_flag
    assert not ParabolicData(RootSystem("G2"), {2}).irreducible_flag
    # S missing more than one node is never an irreducible flag here
    assert not ParabolicData(RootSystem("A3"), {2}).irreducible_flag


def test_QS_membership():
    rs = RootSystem("A2")
    P = ParabolicData(rs, {1})
    a1, a2 = rs.simple_root(1), rs.simple_root(2)
    # Q_S is spanned by the simple roots inside S = {1}
    assert P.in_QS(a1) and P.in_QS_plus(a1)
    assert P.in_QS(-a1) and not P.in_QS_plus(-a1)
    assert not P.in_QS(a1 + a2)
    assert P.alpha_s_coefficient(a1 + a2) == 1
    assert P.alpha_s_coefficient(a2.scale(2)) == 2
    # a weight outside the root lattice
    assert not P.in_QS(rs.fundamental_weight(1))


def test_is_positive_root():
    rs = RootSystem("B2")
    assert rs.is_positive_root((1, 1))
    assert rs.is_positive_root((1, 2))
    assert not rs.is_positive_root((2, 1))
    assert not rs.is_positive_root((0, 0))


def test_weight_arithmetic():
    w = Weight((1, -2))
    assert (w + w).coords == (2, -4)
    assert (-w).coords == (-1, 2)
    assert w.scale(3).coords == (3, -6)
    assert (w - w).is_zero()
