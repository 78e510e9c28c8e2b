"""Induced double complex: tensor fibers, window slices, and the rank-one
verification suite."""
from __future__ import annotations

import pytest

from qbgg.bgg import DoubleComplex, LeviModuleData
from qbgg.cartan import ParabolicData, RootSystem, Weight
from qbgg.qfield import QMatrix, RatFunc
from qbgg.weyl import BruhatGraph


def _dc(name: str, S) -> DoubleComplex:
    return DoubleComplex(BruhatGraph(ParabolicData(RootSystem(name), set(S))))


@pytest.fixture(scope="module")
def rank_one():
    return _dc("A1", ())


@pytest.fixture(scope="module")
def cp2():
    return _dc("A2", (1,))


def test_levi_module_commutator(cp2):
    # [E_1, F_1] acts as ([wt_1])-diagonal on a Levi module of the flag
    uq = cp2.uq
    P = cp2.G.P
    data = LeviModuleData(uq, P, Weight((1, 0)))
    assert data.dim == 2
    e = QMatrix.from_rows(data.matrix_E(1), data.dim)
    f = QMatrix.from_rows(data.matrix_F(1), data.dim)
    comm = e.matmul(f)
    fe = f.matmul(e)
    d = uq.rs.d[0]
    den = RatFunc.q_power(d) - RatFunc.q_power(-d)
    for r in range(data.dim):
        for c in range(data.dim):
            expect = RatFunc.zero()
            if r == c:
                k = data.k_exponents(1)[r]
                expect = (RatFunc.q_power(k) - RatFunc.q_power(-k)) / den
            assert comm.entries[r][c] - fe.entries[r][c] == expect


def test_tensor_fiber_commutator(cp2):
    uq = cp2.uq
    w0, w1 = cp2._chain()[0], cp2._chain()[1]
    fb = cp2.fiber(w1, w0)
    e = QMatrix.from_rows(fb.generator_matrix(("E", 1)), fb.dim)
    f = QMatrix.from_rows(fb.generator_matrix(("F", 1)), fb.dim)
    den = RatFunc.q_power(1) - RatFunc.q_power(-1)
    comm = e.matmul(f)
    fe = f.matmul(e)
    for r in range(fb.dim):
        for c in range(fb.dim):
            expect = RatFunc.zero()
            if r == c:
                k = fb.k_exponent(1, r)
                expect = (RatFunc.q_power(k) - RatFunc.q_power(-k)) / den
            assert comm.entries[r][c] - fe.entries[r][c] == expect


def test_cyclic_lift(cp2):
    w0, w1 = cp2._chain()[0], cp2._chain()[1]
    fb = cp2.fiber(w1, w0)
    lift = fb.cyclic_lift()
    assert len(lift) == fb.dim


def test_wslice_dim_matches_oracle(cp2):
    w0, w1 = cp2._chain()[0], cp2._chain()[1]
    fb = cp2.fiber(w1, w0)
    omega = fb.weights[fb.gen_index]
    sl = cp2.wslice(w1, w0, omega, 1, 1)
    assert sl.dim == sl.oracle_dim()
    assert sl.dim > 0


def test_rank_one_anticommute(rank_one):
    rep = rank_one.verify_anticommute(k1cap=2, k2cap=2)
    assert rep["ok"]
    assert rep["pairs"]


def test_rank_one_rows_and_columns(rank_one):
    rows = rank_one.verify_rows(k2cap=1, k1lim=2)
    cols = rank_one.verify_columns(k1cap=1, k2lim=2)
    assert rows["ok"] and cols["ok"]
    for line in rows["lines"] + cols["lines"]:
        for rec in line["slices"]:
            assert rec["exact"]


def test_x_elements_mirror_y(rank_one):
    # the column maps are the eta-images of the row maps
    dc = rank_one
    chain = dc._chain()
    # chain runs from the longest coset down; the arrow goes short to long
    x = dc.x_element(chain[1], chain[0])
    for (fw, kv, ew), c in x.items():
        assert fw == ()
        assert ew
