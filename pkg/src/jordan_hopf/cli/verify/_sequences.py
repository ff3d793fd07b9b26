"""Exact sequences, morphisms and the pre-Nichols poset."""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING

from ...catalog import (
    MORPHISM_VARIANTS,
    MORPHISMS,
    PRINTED_MORPHISMS,
    build_morphism,
    restrict_morphism,
)
from ...hopfstr import check_morphism, check_printed_morphism
from ...report import make_check
from ...sequences import (
    poset_brute_force,
    poset_compare,
    verify_quotient_sequence,
)

if TYPE_CHECKING:
    import argparse

    import numpy as np

    from ...report import Check
    from ...scalars import FieldCfg

_ANY_FIELD = ("OG->Dtilde", "Dtilde->Usl2")
# shortest word length the truncated sequences are checked on
MIN_TRUNCATION = 12


def exact_sequences(
    args: argparse.Namespace, cfg: FieldCfg, rng: np.random.Generator
) -> list[Check]:
    names = MORPHISMS if cfg.is_prime else _ANY_FIELD
    truncation = max(args.maxdeg, MIN_TRUNCATION)
    checks = [check_morphism(build_morphism(name, cfg)) for name in names]
    if not cfg.is_prime:
        checks.extend(verify_quotient_sequence(
            build_morphism("OG->Dtilde", cfg),
            build_morphism("Dtilde->Usl2", cfg),
            truncation=truncation,
        ))
        return checks

    for printed, corrected in PRINTED_MORPHISMS.items():
        checks.append(check_printed_morphism(
            build_morphism(printed, cfg), build_morphism(corrected, cfg)
        ))
    for name in MORPHISM_VARIANTS:
        rejected = check_morphism(build_morphism(name, cfg)).status != "pass"
        checks.append(make_check(
            "morphism/rescaled-rejected", "rescaled generator breaks a map",
            {"map": name}, rejected,
            "" if rejected else "rescaled map passed",
        ))

    checks.extend(verify_quotient_sequence(
        build_morphism("R->DH", cfg), build_morphism("DH->usl2", cfg)
    ))
    z_dtilde = build_morphism("Z->Dtilde", cfg)
    checks.extend(verify_quotient_sequence(
        z_dtilde, build_morphism("Dtilde->DH", cfg),
        truncation=truncation, central=True,
    ))
    checks.extend(verify_quotient_sequence(
        build_morphism("OG->Dtilde", cfg),
        build_morphism("Dtilde->Usl2", cfg),
        truncation=truncation,
    ))

    # without v^p the ideal misses part of the kernel, from length p on
    short = max(args.maxdeg, cfg.p)
    letters = [n for n in z_dtilde.source.alphabet if n != "X5"]
    partial = verify_quotient_sequence(
        restrict_morphism(z_dtilde, letters),
        build_morphism("Dtilde->DH", cfg),
        truncation=short,
    )
    caught = any(c.id == "exact/kernel" and c.status == "fail"
                 for c in partial)
    checks.append(make_check(
        "exact/kernel-too-small", "dropping v^p leaves a larger kernel",
        {"map": "Z->Dtilde without X5", "truncation": short}, caught,
        "" if caught else "kernel check passed without v^p",
    ))
    return checks


def _poset_params(top: int, p: int) -> list[tuple[int, int, int]]:
    out = []
    for k, ell in itertools.product(range(1, top + 1), repeat=2):
        out.extend((k, ell, a) for a in range(p) if a == 0 or k < ell)
    return out


def poset(
    args: argparse.Namespace, cfg: FieldCfg, rng: np.random.Generator
) -> list[Check]:
    """Compare the poset rule with brute force on every pair."""
    top = max(2, args.k, args.ell)
    params = _poset_params(top, cfg.p)
    checks = []
    for src, dst in itertools.product(params, repeat=2):
        decision = poset_compare(src, dst, cfg)
        brute = poset_brute_force(src, dst, cfg)
        ok = decision.geq == brute
        detail = f"{decision.clause}: {decision.condition}"
        if ok and decision.certificate is not None:
            cert = check_morphism(decision.certificate)
            ok = cert.status == "pass"
            if not ok:
                detail = f"certificate fails: {cert.detail}"
        elif not ok:
            detail += f"; brute force says {brute}"
        checks.append(make_check(
            "poset/compare", "G(src) >= G(dst)",
            {"src": src, "dst": dst, "geq": decision.geq}, ok, detail,
        ))
    return checks
