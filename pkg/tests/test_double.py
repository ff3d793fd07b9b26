from __future__ import annotations

import dataclasses

import numpy as np
import pytest

from jordan_hopf.catalog import build_algebra
from jordan_hopf.double import (
    build_drinfeld_double,
    check_antipode_antimultiplicative,
    compare_with_presentation,
    structure_constants,
    verify_structure,
)


@pytest.fixture(scope="module")
def dkg(f3):
    return structure_constants(build_algebra("DkG", f3))


def test_structure_constants_of_h(h3):
    sc = structure_constants(h3)
    assert sc.dim == 27
    assert sc.basis[0] == ()
    assert verify_structure(sc) == []


def test_structure_constants_need_ordinary_algebra(btilde, qq):
    with pytest.raises(ValueError, match="not an ordinary"):
        structure_constants(btilde)
    with pytest.raises(ValueError, match="F_p only"):
        structure_constants(build_algebra("Htilde", qq))


def test_broken_counit_is_detected(dkg):
    counit = dkg.counit.copy()
    counit[0] = 0
    broken = dataclasses.replace(dkg, counit=counit)
    assert "counit" in verify_structure(broken)
    with pytest.raises(ValueError, match="not a Hopf algebra"):
        build_drinfeld_double(broken)


def test_double_unit_and_subalgebra(dkg, rng):
    double = build_drinfeld_double(dkg)
    assert double.dim == 81
    one = double.one()
    z = rng.integers(0, 3, size=(9, 9))
    assert (double.multiply(one, z) == z).all()
    assert (double.multiply(z, one) == z).all()

    # L sits in D(L) as h ⋈ ε
    eye = np.eye(dkg.dim, dtype=np.int64)
    for i in range(dkg.dim):
        for j in range(dkg.dim):
            got = double.multiply(double.element(eye[i]),
                                  double.element(eye[j]))
            assert (got == double.element(dkg.mult[i, j])).all()


def test_double_is_associative(dkg, rng):
    double = build_drinfeld_double(dkg)
    a, b, c = (rng.integers(0, 3, size=(9, 9)) for _ in range(3))
    left = double.multiply(double.multiply(a, b), c)
    right = double.multiply(a, double.multiply(b, c))
    assert (left == right).all()


def test_double_antipode_of_unit(dkg):
    double = build_drinfeld_double(dkg)
    assert (double.antipode(double.one()) == double.one()).all()


def test_double_antipode_reverses_products(dkg, rng):
    double = build_drinfeld_double(dkg)
    check = check_antipode_antimultiplicative(double, rng, pairs=100)
    assert check.id == "double/antipode-anti"
    assert check.status == "pass", check.detail
    assert check.params == {"p": 3, "pairs": 100}

    # S(xy) = S(y)S(x) on one explicit pair, through the public product
    x, y = double.basis_element(1, 2), double.basis_element(4, 5)
    got = double.antipode(double.multiply(x, y))
    want = double.multiply(double.antipode(y), double.antipode(x))
    assert (got == want).all()


@pytest.mark.slow
def test_double_matches_presentation(h3, dh, rng):
    double = build_drinfeld_double(structure_constants(h3))
    checks = compare_with_presentation(double, h3, dh, rng, sample=200)
    assert [c.id for c in checks] == [
        "double/dimension",
        "double/relations",
        "double/bijection",
        "double/products",
        "double/hopf",
        "double/antipode-anti",
    ]
    assert all(c.status == "pass" for c in checks), [
        c.detail for c in checks if c.status != "pass"
    ]
