from __future__ import annotations

import numpy as np
import pytest

from jordan_hopf.catalog import ALGEBRAS, build_algebra
from jordan_hopf.ncalg import NCPoly
from jordan_hopf.pbw import (
    MissingRuleError,
    NotFiniteError,
    ambiguities,
    check_confluence,
    check_termination,
    dump_presentation,
    enumerate_basis,
    load_presentation,
    parse_poly,
)
from jordan_hopf.scalars import FieldCfg

F3 = FieldCfg.prime(3)

JORDAN = """
# restricted Jordan plane
name jordan
field p=3
gen x nilpotent=3 degree=1
gen y nilpotent=3 degree=1
order x y
rule y x -> x y - 1/2 x^2
rule x^3 -> 0
rule y^3 -> 0
"""

BROKEN = """
name broken
field rational
gen a
gen b
gen c
rule c b -> a
rule b a -> a
rule c a -> a c
"""


def test_parse_poly():
    xy = ("x", "y")
    assert parse_poly("x y - 1/2 x^2", xy, F3).terms == {
        (0, 1): 1, (0, 0): 1,
    }
    assert parse_poly("-x", xy, F3).terms == {(0,): 2}
    assert parse_poly("2 y^2 + 1", xy, F3).terms == {(1, 1): 2, (): 1}
    assert not parse_poly("0", xy, F3)
    with pytest.raises(KeyError):
        parse_poly("x z", xy, F3)
    with pytest.raises(ValueError):
        parse_poly("x % y", xy, F3)


def test_normal_forms_of_the_jordan_plane():
    system = load_presentation(JORDAN)
    assert system.nf((1, 0)) == {(0, 1): 1, (0, 0): 1}
    assert system.multiply((0, 0), (0,)) == {}
    assert system.is_normal((0, 1, 1))
    assert not system.is_normal((1, 0))
    assert system.degree((0, 1, 1)) == 3


def test_jordan_plane_basis():
    system = load_presentation(JORDAN)
    basis = enumerate_basis(system)
    assert len(basis.words) == 9
    assert basis.dims == {0: 1, 1: 2, 2: 3, 3: 2, 4: 1}
    assert basis.words[:3] == [(), (0,), (1,)]
    assert check_confluence(system) == []
    assert check_termination(system) == []


def test_infinite_systems_need_a_bound(f3):
    btilde = build_algebra("Btilde", f3)
    with pytest.raises(NotFiniteError):
        enumerate_basis(btilde.system)
    basis = enumerate_basis(btilde.system, up_to=3)
    assert basis.dims == {0: 1, 1: 2, 2: 3, 3: 4}


def test_non_confluent_overlap_is_reported():
    system = load_presentation(BROKEN)
    amb = ambiguities(system)
    assert len(amb) == 1
    bad = check_confluence(system)
    assert [a.label for a in bad] == ["c · b · a"]
    assert bad[0].word == (2, 1, 0)
    assert str(bad[0].left) == "a^2"
    assert str(bad[0].right) == "a c"


def test_missing_rule():
    with pytest.warns(UserWarning):
        system = load_presentation("field p=3\ngen a\ngen b\n")
    with pytest.raises(MissingRuleError):
        system.nf((1, 0))
    assert check_termination(system) == ["no rule for b a"]


def test_increasing_rule_warns_on_load():
    text = "name up\nfield p=3\ngen a\ngen b\nrule a b -> b a\n"
    with pytest.warns(UserWarning, match="may not terminate"):
        system = load_presentation(text)
    assert "b a does not precede a b" in check_termination(system)


def test_malformed_presentations():
    with pytest.raises(ValueError):
        load_presentation("gen x\n")
    with pytest.raises(ValueError):
        load_presentation("field p=3\ngen x\nrule x x\n")
    with pytest.raises(ValueError):
        load_presentation("field p=3\ngen x\nbogus line\n")
    with pytest.raises(ValueError):
        load_presentation("field p=3\ngen x nilpotent=3\n")


@pytest.mark.parametrize(
    "name", ["BV", "Btilde", "Bhat", "H", "DH", "Dtilde", "Z", "OG"]
)
def test_dump_and_load_round_trip(f3, name):
    system = build_algebra(name, f3).system
    text = dump_presentation(system)
    again = load_presentation(text)
    assert dump_presentation(again) == text
    assert again.alphabet == system.alphabet


def _random_poly(alg, rng, terms=3, length=4):
    n = len(alg.alphabet)
    out = {}
    for _ in range(terms):
        word = tuple(int(a) for a in
                     rng.integers(0, n, size=int(rng.integers(0, length + 1))))
        out[word] = alg.cfg.random(rng)
    return NCPoly(out, alg.cfg, alg.alphabet)


CATALOGED = [(name, 3) for name in ALGEBRAS if name != "E"] + [("E", 0)]


@pytest.mark.parametrize(("name", "p"), CATALOGED)
def test_normalize_is_idempotent_and_multiplicative(name, p):
    cfg = FieldCfg.prime(p) if p else FieldCfg.rational()
    alg = build_algebra(name, cfg)
    system = alg.system
    rng = np.random.default_rng(11)
    for _ in range(200):
        a, b = _random_poly(alg, rng), _random_poly(alg, rng)
        na, nb = system.normalize(a), system.normalize(b)
        assert system.normalize(na) == na
        assert all(system.is_normal(w) for w in na.terms)
        assert system.normalize(a * b) == system.normalize(na * nb)
