from __future__ import annotations

import json

import pytest

from jordan_hopf.repmod import (
    certify_simple,
    check_relations,
    expected_action,
    head_dimension,
    irrep_table,
    simple_module,
    verify_irreps,
    verma_module,
)
from jordan_hopf.scalars import FieldCfg


def test_verma_module(f3, dh):
    verma = verma_module(f3, 1)
    assert verma.dim == 9
    assert verma.labels[0] == "w(0,0)"
    assert check_relations(verma, dh) == []


@pytest.mark.parametrize(("k", "dim"), [(0, 1), (1, 2), (2, 3)])
def test_simple_dimensions(k, dim, f3):
    assert simple_module(f3, k).dim == dim


def test_simple_dimensions_mod_5(f5):
    # dim L_k = ((-2k) mod p) + 1
    assert [d for _, d in irrep_table(f5)] == [1, 4, 2, 5, 3]


def test_weights_are_taken_mod_p(f3):
    assert simple_module(f3, 4).dim == simple_module(f3, 1).dim


@pytest.mark.parametrize("k", [0, 1, 2])
def test_closed_action_formulas(k, f3):
    simple = simple_module(f3, k)
    want = expected_action(f3, k, simple.dim)
    for name, m in simple.matrices.items():
        assert (m == want[name]).all(), name


def test_head_of_verma(f5):
    for k in range(5):
        head = head_dimension(verma_module(f5, k))
        assert head == simple_module(f5, k).dim


def test_certificates(f3):
    cert = certify_simple(simple_module(f3, 2))
    assert cert.simple
    assert cert.method == "burnside"
    cert = certify_simple(simple_module(f3, 2), mode="exhaustive")
    assert cert.simple
    assert cert.method == "exhaustive"


def test_verma_is_not_simple(f3):
    cert = certify_simple(verma_module(f3, 0))
    assert not cert.simple
    assert cert.witness is not None


def test_modules_need_prime_field(qq):
    with pytest.raises(ValueError, match="F_p only"):
        simple_module(qq, 0)


def test_to_dict_is_json(f3):
    data = json.loads(json.dumps(simple_module(f3, 1).to_dict()))
    assert data["dim"] == 2
    assert data["basis"] == ["z0", "z1"]
    assert set(data["matrices"]) == {"x", "y", "g", "zeta", "u", "v"}


@pytest.mark.parametrize("p", [3, 5, pytest.param(7, marks=pytest.mark.slow)])
def test_verify_irreps(p):
    checks = verify_irreps(FieldCfg.prime(p))
    assert checks[-1].id == "irreps/dimensions"
    assert all(c.status == "pass" for c in checks), [
        (c.id, c.detail) for c in checks if c.status != "pass"
    ]


def test_verify_irreps_without_certificates(f3):
    checks = verify_irreps(f3, certify=False)
    assert "irreps/simple" not in {c.id for c in checks}


@pytest.mark.parametrize("p", [5, 7])
def test_line_enumeration_agrees_with_burnside(p):
    cfg = FieldCfg.prime(p)
    for k in range(p):
        simple = simple_module(cfg, k)
        if simple.dim > 4:
            continue
        auto = certify_simple(simple)
        lines = certify_simple(simple, mode="exhaustive")
        assert auto.method == "burnside"
        assert auto.simple and lines.simple
        assert lines.method == "exhaustive"
