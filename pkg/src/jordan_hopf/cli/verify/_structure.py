"""Presentation and Hopf-axiom suites."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

from ...catalog import AlgebraSpec, build_algebra, graded_dimension
from ...hopfstr import check_hopf_axioms
from ...ncalg import format_word
from ...pbw import (
    RewriteSystem,
    check_confluence,
    check_termination,
    dump_presentation,
    load_presentation,
)
from ...report import Check, make_check

if TYPE_CHECKING:
    import argparse

    import numpy as np

    from ...scalars import FieldCfg

# algebras that exist over every field of characteristic != 2
_ANY_FIELD = ("Btilde", "Bhat", "Htilde", "Ktilde", "Dtilde", "Usl2", "OG")


def catalog_algebras(
    args: argparse.Namespace, cfg: FieldCfg
) -> list[AlgebraSpec]:
    """Every cataloged algebra at the requested parameters."""
    if not cfg.is_prime:
        return [build_algebra(name, cfg) for name in _ANY_FIELD]
    k, ell, a = args.k, args.ell, args.a
    out = [build_algebra(name, cfg) for name in ("BV", "Btilde", "Bhat")]
    out.append(build_algebra("K", cfg, k=k, a=a))
    out.append(build_algebra("F", cfg, ell=ell))
    out.append(build_algebra("G", cfg, k=k, ell=ell, a=a))
    out.append(build_algebra("Hkla", cfg, k=k, ell=ell, a=a))
    out.extend(
        build_algebra(name, cfg)
        for name in ("H", "DkG", "Hstar", "DH", "Htilde", "Ktilde",
                     "Dtilde", "usl2", "Usl2", "R", "OG", "Z")
    )
    return out


def expected_dimension(alg: AlgebraSpec) -> int | None:
    """Dimension of a finite cataloged algebra, or None."""
    p = alg.cfg.p
    params = alg.params
    fixed = {"BV": 2, "DkG": 2, "H": 3, "Hstar": 3, "R": 3, "usl2": 3,
             "DH": 6}
    if alg.name in fixed:
        return p ** fixed[alg.name]
    if alg.name.startswith("G("):
        return p ** (params["k"] + params["ell"])
    if alg.name.startswith("H("):
        return p ** (params["k"] + params["ell"] + 1)
    return None


def system_checks(system: RewriteSystem, params: dict) -> list[Check]:
    checks = []
    violations = check_termination(system)
    checks.append(make_check(
        "presentation/termination", "rules decrease in length-lex order",
        params, not violations, "; ".join(violations[:3]),
    ))
    bad = check_confluence(system)
    detail = "; ".join(
        f"{amb.label} at {format_word(amb.word, system.alphabet)}"
        for amb in bad[:3]
    )
    checks.append(make_check(
        "presentation/confluence", "all overlap ambiguities resolve",
        params, not bad, detail,
    ))
    return checks


def presentations(
    args: argparse.Namespace, cfg: FieldCfg, rng: np.random.Generator
) -> list[Check]:
    checks = []
    for alg in catalog_algebras(args, cfg):
        params = {"algebra": alg.name, "p": cfg.p}
        checks.extend(system_checks(alg.system, params))

        want = expected_dimension(alg)
        if want is not None:
            got = graded_dimension(alg)
            checks.append(make_check(
                "presentation/dimension", f"dim {alg.name} = {want}",
                params, got == want, f"{got} PBW monomials",
            ))

        text = dump_presentation(alg.system)
        again = dump_presentation(load_presentation(text))
        checks.append(make_check(
            "presentation/round-trip", "dump and load agree", params,
            again == text, "" if again == text else again,
        ))

    if args.presentation is not None:
        path = Path(args.presentation)
        system = load_presentation(path.read_text())
        checks.extend(system_checks(
            system, {"algebra": system.name or path.name, "p": system.cfg.p}
        ))
    return checks


def hopf_axioms(
    args: argparse.Namespace, cfg: FieldCfg, rng: np.random.Generator
) -> list[Check]:
    checks = []
    for alg in catalog_algebras(args, cfg):
        if alg.hopf is None:
            continue
        checks.extend(check_hopf_axioms(alg, args.sample, rng))
    return checks
