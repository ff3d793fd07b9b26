"""Drinfeld double and skew-pairing suites."""

from __future__ import annotations

import warnings
from typing import TYPE_CHECKING

from ...catalog import build_algebra
from ...double import (
    build_drinfeld_double,
    compare_with_presentation,
    structure_constants,
    verify_structure,
)
from ...pairing import (
    PairingOracle,
    check_pairing_axioms,
    verify_twisted_relations,
)
from ...report import make_check

if TYPE_CHECKING:
    import argparse

    import numpy as np

    from ...report import Check
    from ...scalars import FieldCfg

# dense tables of D(H) have p^18 entries
_MAX_DOUBLE_P = 3


def double(
    args: argparse.Namespace, cfg: FieldCfg, rng: np.random.Generator
) -> list[Check]:
    if cfg.p > _MAX_DOUBLE_P:
        wrnmsg = (
            f"The Drinfeld double is only tabulated for p <= "
            f"{_MAX_DOUBLE_P}; skipping at p = {cfg.p}."
        )
        warnings.warn(wrnmsg, UserWarning, stacklevel=2)
        return []

    h_alg = build_algebra("H", cfg)
    sc = structure_constants(h_alg)
    bad = verify_structure(sc)
    checks = [make_check(
        "double/structure", "tables of H satisfy the Hopf axioms",
        {"p": cfg.p}, not bad, "; ".join(bad[:3]),
    )]
    if bad:
        return checks

    dh = build_algebra("DH", cfg)
    checks.extend(compare_with_presentation(
        build_drinfeld_double(sc), h_alg, dh, rng, sample=args.double_sample
    ))
    return checks


def pairing(
    args: argparse.Namespace, cfg: FieldCfg, rng: np.random.Generator
) -> list[Check]:
    tau = PairingOracle(cfg)
    checks = check_pairing_axioms(tau, rng, samples=max(10, args.sample // 4))
    checks.extend(verify_twisted_relations(tau))
    return checks
