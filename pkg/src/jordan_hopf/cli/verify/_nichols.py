"""Invariants, primitives and twists of the pre-Nichols algebras."""

from __future__ import annotations

from typing import TYPE_CHECKING

from ...catalog import build_algebra
from ...primitives import psi_twist_identity, verify_primitives

if TYPE_CHECKING:
    import argparse

    import numpy as np

    from ...report import Check
    from ...scalars import FieldCfg


def primitives(
    args: argparse.Namespace, cfg: FieldCfg, rng: np.random.Generator
) -> list[Check]:
    algebras = [build_algebra("Btilde", cfg)]
    if cfg.is_prime:
        algebras += [
            build_algebra("K", cfg, k=args.k, a=args.a),
            build_algebra("F", cfg, ell=args.ell),
            build_algebra("G", cfg, k=args.k, ell=args.ell, a=args.a),
        ]
    checks = []
    for alg in algebras:
        checks.extend(verify_primitives(alg, args.maxdeg))

    for t in (1, -1):
        checks.extend(psi_twist_identity(
            t, args.k, cfg, ell=args.ell, a=args.a, s=2,
        ))
    return checks
