from __future__ import annotations

import pytest

from jordan_hopf.catalog import build_algebra
from jordan_hopf.pairing import (
    PairingOracle,
    check_pairing_axioms,
    pairing_eval,
    twisted_cross_relation,
    verify_twisted_relations,
)


@pytest.fixture(scope="module")
def tau(qq):
    return PairingOracle(qq)


def test_generator_table(tau):
    assert pairing_eval(tau, tau.source.poly("y"), tau.target.poly("u")) == 1
    assert pairing_eval(tau, tau.source.poly("x"), tau.target.poly("v")) == 1
    assert pairing_eval(tau, tau.source.poly("x"), tau.target.poly("u")) == 0
    assert pairing_eval(tau, tau.source.poly("ginv"),
                        tau.target.poly("zeta")) == -1


def test_units_pair_through_the_counit(tau):
    assert pairing_eval(tau, tau.source.poly("1"), tau.target.poly("1")) == 1
    assert pairing_eval(tau, tau.source.poly("g"), tau.target.poly("1")) == 1
    assert pairing_eval(tau, tau.source.poly("1"),
                        tau.target.poly("zeta")) == 0


def test_products_of_grouplikes_and_primitives(tau):
    # ζ is primitive, g is group-like
    assert pairing_eval(tau, tau.source.poly("g^2"),
                        tau.target.poly("zeta")) == 2
    assert pairing_eval(tau, tau.source.poly("g"),
                        tau.target.poly("zeta^2")) == 1


def test_peeling_orders_agree(tau):
    h = tau.source.poly("y x g").terms
    k = tau.target.poly("u v").terms
    assert pairing_eval(tau, h, k) == pairing_eval(tau, h, k, "k-first")


def test_pairing_axioms(qq, rng):
    checks = check_pairing_axioms(PairingOracle(qq), rng, samples=20)
    assert [c.id for c in checks] == [
        "pairing/table",
        "pairing/order",
        "pairing/multiplicative-left",
        "pairing/multiplicative-right",
    ]
    assert all(c.status == "pass" for c in checks), [
        c.detail for c in checks if c.status != "pass"
    ]


def test_pairing_axioms_mod_p(f3, rng):
    checks = check_pairing_axioms(PairingOracle(f3), rng, samples=10)
    assert all(c.status == "pass" for c in checks)


def test_twisted_product_without_pairing_terms(tau):
    dtilde = build_algebra("Dtilde", tau.cfg)
    assert twisted_cross_relation(tau, "u", "x") == dtilde.poly("x u")


def test_twisted_relations(tau):
    checks = verify_twisted_relations(tau)
    assert len(checks) == 3 * 4
    assert all(c.status == "pass" for c in checks), [
        c.detail for c in checks if c.status != "pass"
    ]
