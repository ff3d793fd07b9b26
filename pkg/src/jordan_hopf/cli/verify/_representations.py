"""Simple modules of the double."""

from __future__ import annotations

from typing import TYPE_CHECKING

from ...repmod import verify_irreps

if TYPE_CHECKING:
    import argparse

    import numpy as np

    from ...report import Check
    from ...scalars import FieldCfg


def irreps(
    args: argparse.Namespace, cfg: FieldCfg, rng: np.random.Generator
) -> list[Check]:
    return verify_irreps(cfg, certify=not args.no_certify)
