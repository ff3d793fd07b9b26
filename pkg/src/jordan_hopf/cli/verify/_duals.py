"""Graded dual of the Jordan plane and the duals of G(k, ℓ)."""

from __future__ import annotations

from typing import TYPE_CHECKING

from ...gradedual import build_G_dual, verify_dual_presentation

if TYPE_CHECKING:
    import argparse

    import numpy as np

    from ...report import Check
    from ...scalars import FieldCfg


def dual(
    args: argparse.Namespace, cfg: FieldCfg, rng: np.random.Generator
) -> list[Check]:
    checks = verify_dual_presentation(
        max(2, args.maxdeg), cfg, rng, samples=max(5, args.sample // 8)
    )
    if cfg.is_prime:
        checks.extend(build_G_dual(args.k, args.ell, cfg).checks)
    return checks
