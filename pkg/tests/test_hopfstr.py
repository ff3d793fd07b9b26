from __future__ import annotations

import pytest

from jordan_hopf.catalog import (
    MORPHISM_VARIANTS,
    MORPHISMS,
    PRINTED_MORPHISMS,
    build_algebra,
    build_morphism,
)
from jordan_hopf.hopfstr import (
    antipode,
    check_bosonized_vp,
    check_hopf_axioms,
    check_morphism,
    check_printed_morphism,
    coproduct,
    counit,
    derive_antipode,
    sample_words,
    verify_commutation_formulas,
    verify_coproduct_formulas,
)
from jordan_hopf.ncalg import TensorElem


def _tensor(alg, pairs):
    terms = {}
    for left, right, c in pairs:
        (w1,) = alg.poly(left).terms
        (w2,) = alg.poly(right).terms
        terms[(w1, w2)] = c
    return TensorElem(terms, alg.cfg, (alg.alphabet, alg.alphabet))


def test_generator_coproducts(h3):
    assert coproduct(h3, "x") == _tensor(h3, [("x", "1", 1), ("g", "x", 1)])
    assert coproduct(h3, "g") == _tensor(h3, [("g", "g", 1)])


def test_coproduct_is_multiplicative_on_x_squared(h3):
    # Δ(x^2) = x^2⊗1 + 2 xg⊗x + g^2⊗x^2
    assert coproduct(h3, "x^2") == _tensor(h3, [
        ("x^2", "1", 1), ("x g", "x", 2), ("g^2", "x^2", 1),
    ])


def test_counit(h3):
    assert counit(h3, "g") == 1
    assert counit(h3, "x") == 0
    assert counit(h3, "g^2 + x g + 2") == 0


def test_derived_antipode(h3):
    s = derive_antipode(h3)
    assert s[h3.letter("g")] == h3.poly("g^2")
    assert s[h3.letter("x")] == h3.poly("-g^2 x")
    assert s[h3.letter("y")] == h3.poly("-g^2 y")
    # cached per algebra
    assert derive_antipode(h3) is s


def test_antipode_is_antimultiplicative(h3):
    sx = antipode(h3, "x")
    sy = antipode(h3, "y")
    assert antipode(h3, "x y") == h3.elem((sy * sx).terms)


def test_antipode_needs_hopf_data(qq):
    with pytest.raises(ValueError, match="no Hopf data"):
        derive_antipode(build_algebra("E", qq, n=3))


def test_braided_specs_have_no_antipode(btilde):
    with pytest.raises(ValueError, match="braided"):
        derive_antipode(btilde)


def test_sample_words(h3, rng):
    assert len(sample_words(h3, "full", rng)) == 27
    picks = sample_words(h3, 5, rng)
    assert len(picks) == 5
    assert all(h3.system.is_normal(w) for w in picks)


def test_sample_words_of_infinite_algebra(btilde, rng):
    words = sample_words(btilde, "full", rng, max_length=2)
    assert len(words) == 1 + 2 + 3


@pytest.mark.parametrize("name", ["H", "BV", "Bhat", "R", "OG"])
def test_hopf_axioms_small(name, f3, rng):
    checks = check_hopf_axioms(build_algebra(name, f3), 20, rng)
    assert checks
    assert all(c.status == "pass" for c in checks), [
        (c.id, c.detail) for c in checks if c.status != "pass"
    ]


def test_hopf_axioms_braided_jordan_plane(btilde, rng):
    checks = check_hopf_axioms(btilde, 15, rng)
    ids = {c.id for c in checks}
    assert "hopf/antipode" not in ids
    assert all(c.status == "pass" for c in checks)


@pytest.mark.slow
def test_hopf_axioms_double(dh, rng):
    checks = check_hopf_axioms(dh, 30, rng)
    assert all(c.status == "pass" for c in checks)


@pytest.mark.parametrize("name", MORPHISMS)
def test_morphisms(name, f3):
    check = check_morphism(build_morphism(name, f3))
    assert check.status == "pass", check.detail


@pytest.mark.parametrize("name", MORPHISM_VARIANTS)
def test_rescaled_morphisms_fail(name, f3):
    check = check_morphism(build_morphism(name, f3))
    assert check.status == "fail"
    assert "maps to" in check.detail


def test_printed_quotient_map_is_a_discrepancy(f3):
    ((printed, corrected),) = PRINTED_MORPHISMS.items()
    check = check_printed_morphism(build_morphism(printed, f3),
                                   build_morphism(corrected, f3))
    assert check.id == "morphism/DH->usl2:printed"
    assert check.status == "paper-discrepancy"
    assert "maps to" in check.detail
    # only the image of zeta is rescaled
    assert "corrected: zeta -> " in check.detail
    assert "y -> " not in check.detail


def test_printed_check_passes_a_correct_map(f3):
    usl2 = build_morphism("DH->usl2", f3)
    check = check_printed_morphism(usl2, usl2)
    assert check.status == "pass"


def test_rational_morphisms(qq):
    for name in ("OG->Dtilde", "Dtilde->Usl2"):
        assert check_morphism(build_morphism(name, qq)).status == "pass"


@pytest.mark.parametrize("name", ["Btilde", "Htilde", "H", "DH"])
def test_commutation_formulas(name, f3):
    checks = verify_commutation_formulas(build_algebra(name, f3), 4)
    assert checks
    for check in checks:
        assert check.status in {"pass", "paper-discrepancy"}, (check.id,
                                                          check.params)


def test_commutation_formulas_over_q(qq):
    checks = verify_commutation_formulas(build_algebra("Dtilde", qq), 4)
    printed = {"commutation/v^n*y", "commutation/u*y^n",
               "commutation/v*y^n"}
    plain = [c for c in checks if c.id not in printed]
    assert all(c.status == "pass" for c in plain)
    assert {c.status for c in checks} <= {"pass", "paper-discrepancy"}


def test_printed_v_power_y_is_flagged(qq):
    checks = verify_commutation_formulas(build_algebra("Dtilde", qq), 3)
    flagged = [c for c in checks if c.id == "commutation/v^n*y"]
    assert len(flagged) == 3
    assert all(c.status != "fail" for c in flagged)


@pytest.mark.parametrize("name", ["Btilde", "Bhat", "H", "Htilde"])
def test_coproduct_formulas(name, f3):
    checks = verify_coproduct_formulas(build_algebra(name, f3), 4)
    assert checks
    for check in checks:
        assert check.status in {"pass", "paper-discrepancy"}, (check.id,
                                                          check.detail)


def test_coproduct_formulas_include_vp_from_bhat(f3):
    checks = verify_coproduct_formulas(build_algebra("Bhat", f3), 3)
    assert "coproduct/v^p-from-Bhat" in {c.id for c in checks}


def test_bosonized_vp(f5):
    check = check_bosonized_vp(build_algebra("Bhat", f5))
    assert check.status == "pass", check.detail
