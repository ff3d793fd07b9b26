from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordan_hopf.scalars import (
    FieldCfg,
    binomial,
    raising_factorial,
    stirling_unsigned,
)

F7 = FieldCfg.prime(7)
QQ = FieldCfg.rational()


def test_prime_field_rejects_bad_characteristic():
    for p in (0, 1, 2, 9):
        with pytest.raises(ValueError):
            FieldCfg.prime(p)


def test_rational_field_has_characteristic_zero():
    assert QQ.p == 0
    assert not QQ.is_prime
    assert QQ.label() == "rational"
    assert F7.label() == "p=7"


def test_half_and_fractions():
    assert F7.half() == 4
    assert F7.reduce(Fraction(1, 2)) == 4
    assert F7.reduce(Fraction(-3, 2)) == 2
    assert QQ.half() == Fraction(1, 2)
    assert QQ.reduce(Fraction(4, 2)) == 2
    assert isinstance(QQ.reduce(Fraction(4, 2)), int)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        F7.inv(7)
    with pytest.raises(ZeroDivisionError):
        F7.reduce(Fraction(1, 7))
    with pytest.raises(ZeroDivisionError):
        QQ.inv(0)


def test_symmetric_representative():
    assert F7.fmt(6) == "-1"
    assert F7.fmt(3) == "3"
    assert QQ.fmt(Fraction(-1, 2)) == "-1/2"


def test_elements_only_for_prime_fields():
    assert list(F7.elements()) == list(range(7))
    with pytest.raises(ValueError):
        list(QQ.elements())


def test_binomial_mod_p():
    assert binomial(7, 3, F7) == 0
    assert binomial(6, 2, F7) == 1
    assert binomial(3, 5, F7) == 0
    assert binomial(4, 2, QQ) == 6


def test_raising_factorial():
    assert raising_factorial(3, 0, QQ) == 1
    assert raising_factorial(3, 2, QQ) == 12
    assert raising_factorial(Fraction(1, 2), 2, QQ) == Fraction(3, 4)
    # t (t+1) ... (t+p-1) vanishes for t in F_p
    assert raising_factorial(5, 7, F7) == 0


def test_stirling_first_kind():
    assert [stirling_unsigned(4, k) for k in range(5)] == [0, 6, 11, 6, 1]
    assert stirling_unsigned(3, 4) == 0


@given(st.integers(), st.integers())
def test_field_operations_agree_with_integers(a, b):
    assert F7.add(a, b) == (a + b) % 7
    assert F7.mul(a, b) == (a * b) % 7
    assert F7.sub(a, b) == F7.add(a, F7.neg(b))


@given(st.integers(min_value=1, max_value=6), st.integers(0, 20))
def test_inverse_and_power(a, n):
    assert F7.mul(a, F7.inv(a)) == 1
    assert F7.power(a, n) == pow(a, n, 7)
    assert F7.power(a, -n) == F7.inv(F7.power(a, n))


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20))
def test_rational_division(a, b):
    if b == 0:
        return
    assert QQ.mul(QQ.div(a, b), b) == a


def _base_digits(n: int, p: int) -> list[int]:
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return digits


@settings(max_examples=100)
@given(st.sampled_from([3, 5, 7, 11]), st.integers(0, 2000),
       st.integers(0, 2000))
def test_binomial_is_lucas_consistent(p, n, k):
    cfg = FieldCfg.prime(p)
    dn, dk = _base_digits(n, p), _base_digits(k, p)
    if len(dk) > len(dn):
        want = 0
    else:
        dk += [0] * (len(dn) - len(dk))
        want = 1
        for a, b in zip(dn, dk, strict=True):
            want = want * math.comb(a, b) % p
    assert binomial(n, k, cfg) == want


@given(st.integers(0, 30), st.integers(0, 32))
def test_stirling_recurrence(n, k):
    assert stirling_unsigned(n + 1, k) == (
        stirling_unsigned(n, k - 1) + n * stirling_unsigned(n, k)
    )


@given(st.integers(0, 12), st.fractions(max_denominator=9))
def test_stirling_numbers_expand_the_raising_factorial(n, t):
    expanded = sum(stirling_unsigned(n, k) * t**k for k in range(n + 1))
    assert raising_factorial(t, n, QQ) == expanded


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_stirling_row_p_is_x_to_the_p_minus_x(p):
    cfg = FieldCfg.prime(p)
    row = [cfg.reduce(stirling_unsigned(p, k)) for k in range(p + 1)]
    assert row == [0, p - 1] + [0] * (p - 2) + [1]


@settings(max_examples=20)
@given(st.sampled_from([3, 5, 7, 11]), st.integers())
def test_raising_factorial_at_p_is_t_to_the_p_minus_t(p, t):
    cfg = FieldCfg.prime(p)
    assert raising_factorial(t, p, cfg) == cfg.sub(cfg.power(t, p), t)
