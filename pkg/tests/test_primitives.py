from __future__ import annotations

from fractions import Fraction

import pytest

from jordan_hopf.catalog import apply_morphism, build_algebra
from jordan_hopf.primitives import (
    expected_invariants,
    invariant_space,
    power_of_p,
    primitive_space,
    psi_twist_identity,
    same_span,
    twist,
    twisted_power,
    verify_primitives,
)


def test_power_of_p():
    assert power_of_p(1, 3)
    assert power_of_p(9, 3)
    assert not power_of_p(6, 3)
    assert power_of_p(1, 0)
    assert not power_of_p(2, 0)


def test_rational_invariants_are_powers_of_x(qq):
    btilde = build_algebra("Btilde", qq)
    for n in range(1, 5):
        inv = invariant_space(btilde, n)
        assert len(inv) == 1
        assert same_span(btilde, n, inv, [btilde.poly(f"x^{n}")])


def test_invariants_in_characteristic_p(btilde):
    inv = invariant_space(btilde, 3)
    assert len(inv) == 2
    assert same_span(btilde, 3, inv, expected_invariants(btilde, 3))
    assert same_span(btilde, 3, inv, [btilde.poly("x^3"),
                                      btilde.poly("y^3")])


def test_primitives(btilde, qq):
    assert len(primitive_space(btilde, 1)) == 2
    assert primitive_space(btilde, 2) == []
    prim = primitive_space(btilde, 3)
    assert same_span(btilde, 3, prim, [btilde.poly("x^3"),
                                       btilde.poly("y^3")])
    assert primitive_space(build_algebra("Btilde", qq), 3) == []


def test_only_pre_nichols_algebras(h3):
    with pytest.raises(ValueError, match="pre-Nichols"):
        invariant_space(h3, 1)


@pytest.mark.parametrize(
    ("name", "params"),
    [("Btilde", {}), ("K", {"k": 1}), ("F", {"ell": 2}),
     ("G", {"k": 1, "ell": 2}), ("G", {"k": 2, "ell": 1})],
)
def test_verify_primitives(name, params, f3):
    checks = verify_primitives(build_algebra(name, f3, **params), 7)
    for check in checks:
        if check.id == "invariants/clause-split":
            assert check.status in {"pass", "paper-discrepancy"}
        else:
            assert check.status == "pass", (check.id, check.params,
                                             check.detail)


def test_twist_sends_y_to_shifted(btilde):
    psi = twist(btilde, 2)
    assert apply_morphism(psi, btilde.poly("y").terms) == btilde.poly(
        "y + 2 x"
    )


def test_twisted_power_degree_two(qq):
    btilde = build_algebra("Btilde", qq)
    # (y + 3x)^2 = y^2 + 6xy + (9 - 3/2) x^2
    assert twisted_power(btilde, 3, 2) == btilde.poly(
        "y^2 + 6 x y + 15/2 x^2"
    )


@pytest.mark.parametrize("t", [1, 2])
def test_psi_twist_identity_mod_p(t, f3):
    checks = psi_twist_identity(t, 1, f3, ell=2)
    ids = {c.id for c in checks}
    assert {"twist/p-power", "twist/frobenius", "twist/relations"} <= ids
    assert all(c.status == "pass" for c in checks), [
        (c.id, c.detail) for c in checks if c.status != "pass"
    ]


def test_psi_twist_identity_over_q(qq):
    checks = psi_twist_identity(Fraction(1, 2), 1, qq, bound=6, s=3)
    assert [c.id for c in checks] == [
        "twist/expansion", "twist/yd", "twist/group-law",
    ]
    assert all(c.status == "pass" for c in checks)


def test_psi_twist_identity_needs_positive_k(f3):
    with pytest.raises(ValueError, match="positive"):
        psi_twist_identity(1, 0, f3)
