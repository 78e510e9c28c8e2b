"""Rank-one coordinate algebra and the quantum-sphere calculus."""
from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from qbgg import qsphere as qs
from qbgg.qfield import RatFunc


def test_relations_certified_against_pairing():
    rep = qs.verify_relations()
    assert rep["ok"]
    assert rep["degree2_kernel_dim"] == 6


def test_pairing_frozen_values():
    assert qs.pair_word("a", [("K", 1)]) == RatFunc.q_power(1)
    assert qs.pair_word("d", [("K", 1)]) == RatFunc.q_power(-1)
    assert qs.pair_word("b", ["E"]) == RatFunc.one()
    assert qs.pair_word("c", ["F"]) == RatFunc.one()
    assert qs.pair_word("a", []) == RatFunc.one()
    assert qs.pair_word("b", []).is_zero()
    assert qs.pair_word("", [("K", 3)]) == RatFunc.one()


def test_determinant_relation():
    # ad - q^{-1} bc = 1 in normal form
    ad = qs.mul(qs.gen("a"), qs.gen("d"))
    bc = qs.mul(qs.gen("b"), qs.gen("c"))
    diff = dict(ad)
    qs.add_into(diff, bc, -RatFunc.q_power(-1))
    assert diff == qs.one()


@settings(max_examples=40, deadline=None)
@given(st.text(alphabet="abcd", min_size=0, max_size=5))
def test_normal_form_matches_pairing(word):
    prod = qs.mul_all([qs.gen(x) for x in word])
    # normal monomials satisfy the basis condition
    for (i, j, k, l) in prod:
        assert i * l == 0
    for u in qs._spanning_words(min(len(word), 3)):
        assert (qs.pair_elem(prod, u) - qs.pair_word(word, u)).is_zero()


@settings(max_examples=25, deadline=None)
@given(st.text(alphabet="abcd", min_size=0, max_size=3),
       st.text(alphabet="abcd", min_size=0, max_size=3))
def test_multiplication_associative(w1, w2):
    x = qs.mul_all([qs.gen(c) for c in w1])
    y = qs.mul_all([qs.gen(c) for c in w2])
    z = qs.gen("d")
    left = qs.mul(qs.mul(x, y), z)
    right = qs.mul(x, qs.mul(y, z))
    assert left == right


def test_weight_grading_multiplicative():
    for m in qs.monomials_of_weight(0, 4):
        assert qs.weight(m) == 0
    x = qs.mul(qs.gen("a"), qs.gen("b"))
    for m in x:
        assert qs.weight(m) == 0


def test_component_fiber_dims():
    rep = qs.component_fiber_dims(6)
    assert rep["ok"]
    assert rep["total_by_degree"] == {0: 1, 1: 2, 2: 1}


def test_differentials_shift_weight():
    f = qs.b_gen("x_zero")
    up = qs.del_antihol(f)
    dn = qs.del_hol(f)
    for m in up:
        assert qs.weight(m) == 2
    for m in dn:
        assert qs.weight(m) == -2


def test_leibniz():
    assert qs.verify_leibniz(3)["ok"]


def test_d_squared():
    assert qs.verify_d_squared(4)["ok"]


def test_volume_form():
    rep = qs.verify_volume_form(4)
    assert rep["ok"]
    assert rep["generated_dim"] == rep["subalgebra_window_dim"]


def test_sphere_relation_unique():
    rep = qs.sphere_relation()
    assert rep["ok"]
    # q x_0 + x_0^2 = q^3 x_- x_+ checked directly in the algebra
    x0 = qs.b_gen("x_zero")
    xm = qs.b_gen("x_minus")
    xp = qs.b_gen("x_plus")
    lhs = qs.mul(x0, x0)
    qs.add_into(lhs, x0, RatFunc.q_power(1))
    qs.add_into(lhs, qs.mul(xm, xp), -RatFunc.q_power(3))
    assert not lhs


def test_full_calculus_report():
    assert qs.verify_calculus()["ok"]
