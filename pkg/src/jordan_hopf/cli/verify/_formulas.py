"""Closed-formula suites: commutation rules and coproducts."""

from __future__ import annotations

from typing import TYPE_CHECKING

from ...catalog import AlgebraSpec, build_algebra
from ...hopfstr import (
    check_bosonized_vp,
    verify_commutation_formulas,
    verify_coproduct_formulas,
)

if TYPE_CHECKING:
    import argparse

    import numpy as np

    from ...report import Check
    from ...scalars import FieldCfg


def formula_bound(args: argparse.Namespace, cfg: FieldCfg) -> int:
    """Largest formula index: ``2p`` over F_p, 6 over Q, capped by maxdeg."""
    top = 2 * cfg.p if cfg.is_prime else 6
    return max(1, min(args.maxdeg, top))


def _algebras(
    args: argparse.Namespace, cfg: FieldCfg, bhat: bool = False
) -> list[AlgebraSpec]:
    names = ["Btilde", "Htilde", "Dtilde"]
    if bhat:
        names.append("Bhat")
    out = [build_algebra(name, cfg) for name in names]
    if cfg.is_prime:
        out.extend(build_algebra(name, cfg) for name in ("BV", "H", "DH"))
        out.append(build_algebra("G", cfg, k=args.k, ell=args.ell, a=args.a))
    return out


def commutation(
    args: argparse.Namespace, cfg: FieldCfg, rng: np.random.Generator
) -> list[Check]:
    bound = formula_bound(args, cfg)
    checks = []
    for alg in _algebras(args, cfg):
        checks.extend(verify_commutation_formulas(alg, bound))
    return checks


def coproducts(
    args: argparse.Namespace, cfg: FieldCfg, rng: np.random.Generator
) -> list[Check]:
    bound = formula_bound(args, cfg)
    checks = []
    for alg in _algebras(args, cfg, bhat=True):
        checks.extend(verify_coproduct_formulas(alg, bound))
    if cfg.is_prime:
        checks.append(check_bosonized_vp(build_algebra("Bhat", cfg)))
    return checks
