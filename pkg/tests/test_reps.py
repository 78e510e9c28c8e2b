"""Finite-dimensional module characters and the partition-function oracle."""
from __future__ import annotations

import pytest

from qbgg.cartan import ParabolicData, RootSystem, Weight
from qbgg.weyl import BruhatGraph
from qbgg.reps import (char_equal, exterior_power_char, gvm_char,
                       kostant_partition, levi_dim_weyl, levi_irrep,
                       levi_weight_multiplicities, quotient_weights,
                       verify_dim_identity)


def _full(name: str) -> ParabolicData:
    rs = RootSystem(name)
    return ParabolicData(rs, set(range(1, rs.rank + 1)))


@pytest.mark.parametrize("name,coords,dim", [
    ("A1", (3,), 4),
    ("A2", (1, 0), 3),
    ("A2", (1, 1), 8),
    ("A2", (2, 2), 27),
    ("A3", (0, 1, 0), 6),
    ("B2", (1, 0), 5),
    ("B2", (0, 1), 4),
    ("C3", (1, 0, 0), 6),
])
def test_weyl_dimension_formula(name, coords, dim):
    P = _full(name)
    assert levi_dim_weyl(P, Weight(coords)) == dim


def test_g2_fundamental_dims():
    P = _full("G2")
    dims = sorted(levi_dim_weyl(P, Weight(c)) for c in [(1, 0), (0, 1)])
    assert dims == [7, 14]


def test_freudenthal_adjoint_multiplicities():
    # the A2 adjoint module: six roots once, zero weight twice
    P = _full("A2")
    ch = levi_weight_multiplicities(P, Weight((1, 1)))
    assert sum(ch.values()) == 8
    assert ch[Weight((0, 0))] == 2
    rs = P.rs
    for beta in rs.positive_roots:
        w = rs.root_to_weight(beta)
        assert ch[w] == 1
        assert ch[-w] == 1


def test_char_dim_agreement():
    # multiplicity sums match the closed-form dimension
    for name, coords in [("A2", (2, 1)), ("B2", (1, 1)), ("G2", (1, 0))]:
        P = _full(name)
        ch, dim = levi_irrep(P, Weight(coords))
        assert sum(ch.values()) == dim == levi_dim_weyl(P, Weight(coords))


def test_levi_restriction():
    # Levi of A2 at node 1: the quotient weights split into sl2 strings
    rs = RootSystem("A2")
    P = ParabolicData(rs, {1})
    qw = quotient_weights(P)
    assert len(qw) == 2
    ch, dim = levi_irrep(P, rs.root_to_weight(rs.highest_root()))
    assert dim == 2


def _partition_by_polynomial(rs: RootSystem, beta: tuple[int, ...]) -> int:
    """Independent oracle: coefficient extraction from the product of
    geometric series over the positive roots."""
    coeffs = {tuple([0] * rs.rank): 1}
    for root in rs.positive_roots:
        new = dict(coeffs)
        # multiply by 1/(1 - x^root) truncated at beta
        stack = sorted(coeffs)
        for mono in stack:
            shifted = mono
            while True:
                shifted = tuple(a + b for a, b in zip(shifted, root))
                if any(a > b for a, b in zip(shifted, beta)):
                    break
                new[shifted] = new.get(shifted, 0) + coeffs[mono]
        coeffs = new
    return coeffs.get(beta, 0)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_kostant_partition_against_series(name):
    rs = RootSystem(name)
    for a in range(4):
        for b in range(4):
            beta = (a, b)
            assert kostant_partition(rs, beta) == _partition_by_polynomial(rs, beta)


def test_kostant_partition_frozen():
    rs = RootSystem("A2")
    assert kostant_partition(rs, (1, 1)) == 2
    assert kostant_partition(rs, (2, 1)) == 2
    assert kostant_partition(rs, (2, 2)) == 3
    g2 = RootSystem("G2")
    assert kostant_partition(g2, (1, 1)) == 2


def test_exterior_power_char():
    P = ParabolicData(RootSystem("A3"), {1, 3})
    qw = quotient_weights(P)
    assert len(qw) == 4
    total = 0
    for k in range(5):
        ch = exterior_power_char(3, qw, k)
        total += sum(ch.values())
    assert total == 16


def test_dim_identity_small_flags():
    for name, S in [("A2", {1}), ("A3", {1, 3}), ("B3", {2, 3})]:
        G = BruhatGraph(ParabolicData(RootSystem(name), S))
        rep = verify_dim_identity(G)
        assert rep["ok"]
        for lvl in rep["levels"]:
            assert lvl["dims_match"] and lvl["weights_match"]


def test_gvm_char_borel_is_partition_function():
    rs = RootSystem("A2")
    P = ParabolicData(rs, set())
    ch = gvm_char(P, Weight((0, 0)), 4)
    for wt, mult in ch.items():
        beta = tuple(-c for c in rs.weight_root_coords_int(wt))
        assert mult == kostant_partition(rs, beta)


def test_char_equal():
    assert char_equal({(0, 0): 1}, {(0, 0): 1})
    assert not char_equal({(0, 0): 1}, {(0, 0): 2})
    assert not char_equal({(0, 0): 1}, {(1, 0): 1})
