"""Induced-module weight slices, singular vectors, and the standard maps."""
from __future__ import annotations

import pytest

from qbgg.cartan import ParabolicData, RootSystem, Weight
from qbgg.qfield import RatFunc, solve_in_span
from qbgg.reps import gvm_char, kostant_partition
from qbgg.uqalg import UqAlgebra
from qbgg.verma import (LowestSliceFamily, SliceFamily, StandardMapFamily,
                        dot_offset, evaluate_on_highest, singular_vectors)
from qbgg.weyl import BruhatGraph


def _graph(name: str, S) -> BruhatGraph:
    return BruhatGraph(ParabolicData(RootSystem(name), set(S)))


def test_borel_slice_dims_are_partition_counts():
    rs = RootSystem("B2")
    uq = UqAlgebra(rs)
    fam = SliceFamily(uq, Weight((0, 0)))
    for a in range(4):
        for b in range(4):
            assert fam.get((a, b)).dim == kostant_partition(rs, (a, b))


def test_parabolic_slice_dims_match_induced_character():
    rs = RootSystem("A2")
    P = ParabolicData(rs, {1})
    uq = UqAlgebra(rs)
    lam = Weight((1, 0))
    fam = SliceFamily(uq, lam, P.S)
    ch = gvm_char(P, lam, 3)
    for wt, mult in ch.items():
        off = rs.weight_root_coords_int(lam - wt)
        if 0 < sum(off) <= 3:
            assert fam.get(off).dim == mult


def test_evaluate_on_highest_k_eigenvalue():
    rs = RootSystem("A2")
    uq = UqAlgebra(rs)
    lam = Weight((2, 1))
    out = evaluate_on_highest(uq, lam, uq.K(1))
    assert out == {(): RatFunc.q_power(rs.d[0] * 2)}
    # E kills the highest vector
    assert not evaluate_on_highest(uq, lam, uq.E(2))


def test_rank_one_singular_vector_power():
    # arrow of the projective line at mu = 0: the singular vector is F
    rs = RootSystem("A1")
    uq = UqAlgebra(rs)
    fam = SliceFamily(uq, Weight((0,)))
    sv = singular_vectors(fam, (1,))
    assert len(sv) == 1
    ((fw, kv, ew),) = sv[0].keys()
    assert fw == (1,) and ew == ()


@pytest.mark.parametrize("name,S", [("A1", ()), ("A2", (1,)), ("A3", (1, 3))])
def test_singular_vectors_one_dimensional(name, S):
    G = _graph(name, S)
    uq = UqAlgebra(G.P.rs)
    mu = Weight((0,) * G.P.rs.rank)
    for a in G.arrows:
        lam = G.W.shifted_act(a.source, mu)
        beta = dot_offset(G, a.source, a.target, mu)
        fam = SliceFamily(uq, lam, G.P.S)
        sv = singular_vectors(fam, beta)
        assert len(sv) == 1
        assert sv[0]


@pytest.mark.parametrize("name,S", [("A1", ()), ("A2", (1,))])
def test_eta_mirror_of_singular_vectors(name, S):
    G = _graph(name, S)
    uq = UqAlgebra(G.P.rs)
    mu = Weight((0,) * G.P.rs.rank)
    for a in G.arrows:
        lam = G.W.shifted_act(a.source, mu)
        beta = dot_offset(G, a.source, a.target, mu)
        sv = singular_vectors(SliceFamily(uq, lam, G.P.S), beta)[0]
        lf = LowestSliceFamily(uq, lam)
        sols = lf.annihilated_by_all_f(beta)
        assert len(sols) == 1
        coords = lf.coords_of(uq.eta(sv), beta)
        assert any(not c.is_zero() for c in coords)
        assert solve_in_span([sols[0]], coords) is not None


def test_dot_offsets_gr24():
    G = _graph("A3", (1, 3))
    mu = Weight((0, 0, 0))
    for a in G.arrows:
        off = dot_offset(G, a.source, a.target, mu)
        assert all(c >= 0 for c in off)
        assert sum(off) >= 1
        # cominuscule arrows step by exactly one along the excluded node
        assert off[G.P.s - 1] == 1


def test_standard_maps_square_compatible():
    G = _graph("A3", (1, 3))
    maps = StandardMapFamily(G)
    uq = maps.uq
    mu = maps.mu
    (w1, w2, w3, w4) = G.squares[0]
    c1 = uq.multiply(maps.y(w2, w4), maps.y(w1, w2))
    c2 = uq.multiply(maps.y(w3, w4), maps.y(w1, w3))
    fam = maps._family(G.W.shifted_act(w1, mu))
    beta = dot_offset(G, w1, w4, mu)
    v1 = fam.get(beta).reduce_element(c1)
    v2 = fam.get(beta).reduce_element(c2)
    assert v1 == v2
    assert any(not c.is_zero() for c in v1)
