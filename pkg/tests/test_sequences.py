from __future__ import annotations

import itertools

import pytest

from jordan_hopf.catalog import build_morphism, restrict_morphism
from jordan_hopf.hopfstr import check_morphism
from jordan_hopf.sequences import (
    poset_brute_force,
    poset_compare,
    verify_quotient_sequence,
)

SMALL = [(1, 1, 0), (1, 2, 0), (1, 2, 1), (1, 2, 2), (2, 1, 0), (2, 2, 0)]


@pytest.mark.parametrize(
    ("src", "dst", "geq", "clause"),
    [
        ((2, 2, 0), (1, 1, 0), True, "zero-zero"),
        ((1, 1, 0), (2, 2, 0), False, "zero-zero"),
        ((1, 2, 1), (1, 2, 1), True, "nonzero-nonzero/twisted"),
        ((1, 2, 1), (1, 2, 2), False, "nonzero-nonzero/split"),
        ((1, 2, 1), (1, 1, 0), True, "nonzero-zero"),
        ((2, 2, 0), (1, 2, 1), True, "zero-nonzero"),
        ((1, 2, 0), (1, 2, 1), False, "zero-nonzero"),
    ],
)
def test_poset_compare(src, dst, geq, clause, f3):
    decision = poset_compare(src, dst, f3)
    assert decision.geq is geq
    assert decision.clause == clause
    assert (decision.certificate is not None) is geq


def test_poset_certificate_is_a_hopf_map(f3):
    decision = poset_compare((2, 2, 0), (1, 1, 0), f3)
    assert check_morphism(decision.certificate).status == "pass"


def test_poset_matches_brute_force(f3):
    for src, dst in itertools.product(SMALL, repeat=2):
        decision = poset_compare(src, dst, f3)
        assert decision.geq == poset_brute_force(src, dst, f3), (src, dst)


def test_poset_is_reflexive(f3):
    assert all(poset_compare(q, q, f3).geq for q in SMALL)


@pytest.mark.parametrize(
    "params", [(0, 1, 0), (1, 1, 3), (2, 1, 1)],
)
def test_poset_rejects_parameters(params, f3):
    with pytest.raises(ValueError):
        poset_compare(params, (1, 1, 0), f3)


def test_poset_needs_prime_field(qq):
    with pytest.raises(ValueError, match="F_p"):
        poset_compare((1, 1, 0), (1, 1, 0), qq)


def test_truncated_sequence_over_q(qq):
    checks = verify_quotient_sequence(
        build_morphism("OG->Dtilde", qq),
        build_morphism("Dtilde->Usl2", qq),
        truncation=4,
    )
    assert [c.id for c in checks] == [
        "exact/injective",
        "exact/surjective",
        "exact/composite",
        "exact/kernel",
        "exact/normal",
    ]
    assert all(c.status == "pass" for c in checks), [
        c.detail for c in checks if c.status != "pass"
    ]


def test_central_sequence(f3):
    checks = verify_quotient_sequence(
        build_morphism("Z->Dtilde", f3),
        build_morphism("Dtilde->DH", f3),
        truncation=4,
        central=True,
    )
    assert checks[-1].id == "exact/central"
    assert all(c.status == "pass" for c in checks), [
        c.detail for c in checks if c.status != "pass"
    ]


def test_missing_generator_leaves_kernel(f3):
    z_dtilde = build_morphism("Z->Dtilde", f3)
    letters = [n for n in z_dtilde.source.alphabet if n != "X5"]
    checks = verify_quotient_sequence(
        restrict_morphism(z_dtilde, letters),
        build_morphism("Dtilde->DH", f3),
        truncation=4,
    )
    (kernel,) = [c for c in checks if c.id == "exact/kernel"]
    assert kernel.status == "fail"


def test_sequence_needs_matching_middle(f3):
    with pytest.raises(ValueError, match="lands in"):
        verify_quotient_sequence(build_morphism("OG->Dtilde", f3),
                                 build_morphism("DH->usl2", f3))


def test_infinite_middle_needs_truncation(qq):
    with pytest.raises(ValueError, match="truncation"):
        verify_quotient_sequence(build_morphism("OG->Dtilde", qq),
                                 build_morphism("Dtilde->Usl2", qq))


@pytest.mark.slow
def test_finite_sequence(f3):
    checks = verify_quotient_sequence(
        build_morphism("R->DH", f3), build_morphism("DH->usl2", f3)
    )
    assert all(c.status == "pass" for c in checks), [
        c.detail for c in checks if c.status != "pass"
    ]
