from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordan_hopf.catalog import build_algebra
from jordan_hopf.ncalg import (
    NCPoly,
    TensorElem,
    add_into,
    format_word,
    poly_arith,
    tensor_multiply,
)
from jordan_hopf.pbw import enumerate_basis
from jordan_hopf.scalars import FieldCfg

F5 = FieldCfg.prime(5)
AB = ("a", "b")

words = st.lists(st.integers(0, 1), max_size=4).map(tuple)
polys = st.dictionaries(words, st.integers(-4, 4), max_size=4).map(
    lambda terms: NCPoly(terms, F5, AB)
)


def _free(w1, w2):
    return {w1 + w2: 1}


def test_add_into_drops_zeros():
    acc = {(0,): 2}
    add_into(acc, {(0,): 3, (1,): 1}, 1, F5)
    assert acc == {(1,): 1}
    assert add_into(acc, {(1,): 1}, 0, F5) == {(1,): 1}


def test_format_word_groups_runs():
    assert format_word((), AB) == "1"
    assert format_word((0, 0, 1, 0), AB) == "a^2 b a"


def test_format_terms_symmetric_coefficients():
    f3 = FieldCfg.prime(3)
    p = NCPoly({(0,): 1, (0, 0): 2}, f3, AB)
    assert str(p) == "a - a^2"
    assert str(NCPoly.zero(f3, AB)) == "0"
    q = NCPoly({(): Fraction(1, 2), (1,): -1}, FieldCfg.rational(), AB)
    assert str(q) == "1/2 - b"


def test_letter_lookup():
    assert NCPoly.letter("b", F5, AB).terms == {(1,): 1}
    with pytest.raises(KeyError):
        NCPoly.letter("c", F5, AB)


def test_mixing_alphabets_is_an_error():
    with pytest.raises(ValueError):
        NCPoly.one(F5, AB) + NCPoly.one(F5, ("a",))
    with pytest.raises(ValueError):
        poly_arith("twist", NCPoly.one(F5, AB), NCPoly.one(F5, AB))


def test_power_and_coefficient():
    a_plus_b = NCPoly({(0,): 1, (1,): 1}, F5, AB)
    square = a_plus_b**2
    assert square.coefficient((0, 1)) == 1
    assert square.coefficient((1, 0)) == 1
    assert square.max_length() == 2
    assert (a_plus_b**0) == NCPoly.one(F5, AB)


@given(polys, polys, polys)
def test_free_algebra_is_associative_and_distributive(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) - q == p
    assert poly_arith("concat", p, q) == p * q


@given(polys, st.integers(-10, 10))
def test_scaling(p, c):
    assert poly_arith("scale", p, c) == c * p
    assert p.scale(c) + p.scale(-c) == NCPoly.zero(F5, AB)


def test_tensor_rank_is_checked():
    with pytest.raises(ValueError):
        TensorElem({}, F5, (AB,))


def test_plain_tensor_product_swaps_middle_legs():
    a = {((), (0,)): 1}
    b = {((1,), ()): 1}
    assert tensor_multiply(a, b, _free, F5) == {((1,), (0,)): 1}
    with pytest.raises(ValueError):
        tensor_multiply(a, b, _free, F5, mode="braided")


def test_jordan_braiding_and_action(f3):
    btilde = build_algebra("Btilde", f3)
    x, y = btilde.letter("x"), btilde.letter("y")
    yd = btilde.yd
    # g acts by y -> y + x, so g.y^2 = y^2 + 2xy + 1/2 x^2
    assert yd.act((y, y)) == {(y, y): 1, (x, y): 2, (x, x): 2}
    assert yd.act((y,), 0) == {(y,): 1}
    assert yd.braid((x,), (y,)) == {((y,), (x,)): 1, ((x,), (x,)): 1}
    assert yd.codegree((x, y, y)) == 3


def test_braided_tensor_product_uses_the_braiding(f3):
    btilde = build_algebra("Btilde", f3)
    x, y = btilde.letter("x"), btilde.letter("y")
    # (1 ⊗ x)(y ⊗ 1) = c(x ⊗ y) = (y + x) ⊗ x
    got = tensor_multiply({((), (x,)): 1}, {((y,), ()): 1},
                          btilde.system.multiply, f3, "braided", btilde.yd)
    assert got == {((y,), (x,)): 1, ((x,), (x,)): 1}


def test_primitive_yd_acts_by_degree(f5):
    bhat = build_algebra("Bhat", f5)
    u, v = bhat.letter("u"), bhat.letter("v")
    assert bhat.yd.act((u, v)) == {(u, v): 2}
    assert bhat.yd.act((u, u, v), 2) == {(u, u, v): 4}
    assert bhat.yd.coaction((v,)) == {0: {(v,): 1}, 1: {(u,): 1}}
    assert bhat.yd.coaction(()) == {0: {(): 1}}


def test_braided_tensor_square_is_associative(f3):
    bv = build_algebra("BV", f3)
    basis = enumerate_basis(bv.system, "all").words
    rng = np.random.default_rng(7)

    def mul(a, b):
        return tensor_multiply(a, b, bv.system.multiply, f3, "braided",
                               bv.yd)

    for picks in rng.integers(0, len(basis), size=(50, 6)):
        w = [basis[int(i)] for i in picks]
        a, b, c = ({(w[i], w[i + 1]): 1} for i in (0, 2, 4))
        assert mul(mul(a, b), c) == mul(a, mul(b, c)), w
