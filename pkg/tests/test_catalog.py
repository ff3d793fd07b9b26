from __future__ import annotations

from fractions import Fraction

import pytest

from jordan_hopf.catalog import (
    MORPHISMS,
    apply_morphism,
    build_algebra,
    build_morphism,
    graded_dimension,
    identity_morphism,
    restrict,
    restrict_morphism,
)
from jordan_hopf.pbw import check_confluence, check_termination
from jordan_hopf.scalars import FieldCfg

FIXED = {"BV": 2, "DkG": 2, "H": 3, "Hstar": 3, "R": 3, "usl2": 3}


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("name", sorted(FIXED))
def test_fixed_dimensions(p, name):
    alg = build_algebra(name, FieldCfg.prime(p))
    assert alg.is_finite()
    assert graded_dimension(alg) == p ** FIXED[name]


def test_double_has_dimension_p6(dh):
    assert graded_dimension(dh) == 3**6


@pytest.mark.slow
def test_double_has_dimension_p6_at_5():
    assert graded_dimension(build_algebra("DH", FieldCfg.prime(5))) == 5**6


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("k, ell", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_pre_nichols_dimensions(p, k, ell):
    cfg = FieldCfg.prime(p)
    g = build_algebra("G", cfg, k=k, ell=ell)
    assert graded_dimension(g) == p ** (k + ell)
    h = build_algebra("Hkla", cfg, k=k, ell=ell)
    assert graded_dimension(h) == p ** (k + ell + 1)


def test_jordan_plane_graded_dimensions(btilde):
    assert not btilde.is_finite()
    assert [graded_dimension(btilde, n) for n in range(5)] == [1, 2, 3, 4, 5]


def _systems(p):
    cfg = FieldCfg.prime(p)
    names = ["BV", "Btilde", "Bhat", "H", "DkG", "Hstar", "DH", "Htilde",
             "Ktilde", "Dtilde", "usl2", "Usl2", "R", "OG", "Z"]
    out = [build_algebra(n, cfg) for n in names]
    for k in (1, 2):
        for ell in (1, 2):
            for a in range(p):
                if a and k >= ell:
                    continue
                out.append(build_algebra("G", cfg, k=k, ell=ell, a=a))
                out.append(build_algebra("Hkla", cfg, k=k, ell=ell, a=a))
        for a in range(p):
            out.append(build_algebra("K", cfg, k=k, a=a))
        out.append(build_algebra("F", cfg, ell=k))
    return out


@pytest.mark.parametrize("alg", _systems(3), ids=lambda a: a.name)
def test_catalog_is_confluent(alg):
    assert check_termination(alg.system) == []
    assert check_confluence(alg.system) == []


def test_building_is_cached(f3):
    assert build_algebra("DH", f3) is build_algebra("DH", f3)
    assert build_algebra("G", f3, k=1, ell=2) is not build_algebra(
        "G", f3, k=2, ell=2
    )


def test_invalid_parameters(f3, qq):
    with pytest.raises(ValueError):
        build_algebra("nope", f3)
    with pytest.raises(ValueError):
        build_algebra("G", f3, k=2, ell=1, a=1)
    with pytest.raises(ValueError):
        build_algebra("G", f3, k=0, ell=1)
    with pytest.raises(ValueError):
        build_algebra("G", f3, k=1, ell=2, a=3)
    with pytest.raises(ValueError):
        build_algebra("H", qq)
    with pytest.raises(KeyError):
        build_algebra("DH", f3).letter("w")


def test_defining_relations_normalize(dh):
    assert dh.poly("v x") == dh.poly("x v + 1 - g + x u")
    assert dh.poly("g^3") == dh.poly("1")
    assert dh.poly("zeta^3") == dh.poly("zeta")
    assert not dh.poly("u^3")


def test_dual_truncation_multiplies_divided_powers(qq):
    e = build_algebra("E", qq, n=4)
    x1, x2 = e.letter("x1"), e.letter("x2")
    y1 = e.letter("y1")
    assert e.system.nf((x1, x1)) == {(x2,): 2}
    assert e.system.nf((x1, y1)) == {(y1, x1): 1, (x2,): 1}
    assert e.system.nf((x2, x2, x1)) == {}
    x3 = e.letter("x3")
    # x[1] y[2] = y[2] x[1] + y[1] x[2] + 3/2 x[3]
    y2 = e.letter("y2")
    assert e.system.nf((x1, y2)) == {
        (y2, x1): 1, (y1, x2): 1, (x3,): Fraction(3, 2),
    }


def test_restrict_keeps_closed_generator_sets(dh):
    sub = restrict(dh, ["x", "g"])
    assert sub.alphabet == ("x", "g")
    assert graded_dimension(sub) == 9
    with pytest.raises(ValueError):
        restrict(dh, ["x"])


@pytest.mark.parametrize("name", MORPHISMS)
def test_morphisms_build(f3, name):
    m = build_morphism(name, f3)
    assert set(m.images) == set(range(len(m.source.alphabet)))


def test_apply_morphism(f3):
    m = build_morphism("Z->Dtilde", f3)
    dtilde = m.target
    got = apply_morphism(m, m.source.poly("X3"))
    assert got == dtilde.poly("zeta^3 - zeta")
    got = apply_morphism(m, m.source.poly("T Tinv"))
    assert got == dtilde.poly("1")
    with pytest.raises(ValueError):
        build_morphism("nope", f3)
    with pytest.raises(ValueError):
        build_morphism("Z->Dtilde", FieldCfg.rational())


def test_identity_and_restricted_morphisms(f3):
    g12 = build_algebra("G", f3, k=1, ell=2)
    g11 = build_algebra("G", f3, k=1, ell=1)
    m = identity_morphism("id", g12, g11, {"y": "y + x"})
    assert apply_morphism(m, g12.poly("y")) == g11.poly("y + x")
    z_dtilde = build_morphism("Z->Dtilde", f3)
    letters = [n for n in z_dtilde.source.alphabet if n != "X5"]
    partial = restrict_morphism(z_dtilde, letters)
    assert "X5" not in partial.source.alphabet
    assert partial.target is z_dtilde.target
