from __future__ import annotations

import argparse
import warnings
from collections.abc import Callable
from pathlib import Path

import numpy as np
from rich.console import Console
from rich.live import Live
from rich.table import Table

from ...report import Check, Report, render_checks
from ...scalars import FieldCfg
from ._double import double, pairing
from ._duals import dual
from ._formulas import commutation, coproducts
from ._nichols import primitives
from ._representations import irreps
from ._sequences import exact_sequences, poset
from ._structure import hopf_axioms, presentations

Suite = Callable[
    [argparse.Namespace, FieldCfg, np.random.Generator], list[Check]
]

SUITES: dict[str, Suite] = {
    "presentations": presentations,
    "hopf-axioms": hopf_axioms,
    "commutation": commutation,
    "coproducts": coproducts,
    "double": double,
    "pairing": pairing,
    "exact-sequences": exact_sequences,
    "irreps": irreps,
    "primitives": primitives,
    "poset": poset,
    "dual": dual,
}

# suites whose objects only exist in positive characteristic
PRIME_ONLY = frozenset({"double", "irreps", "poset"})


def field_of(args: argparse.Namespace) -> FieldCfg:
    return FieldCfg.rational() if args.rational else FieldCfg.prime(args.p)


def suite_names(suite: str) -> list[str]:
    if suite == "all":
        return list(SUITES)
    if suite not in SUITES:
        errmsg = f"Unknown suite {suite!r}; choose from {[*SUITES, 'all']}."
        raise ValueError(errmsg)
    return [suite]


def resolve_defaults(args: argparse.Namespace, cfg: FieldCfg) -> None:
    """Fill in the options whose default depends on the field."""
    if args.maxdeg is None:
        args.maxdeg = 3 * cfg.p if cfg.is_prime else 9
    if args.maxdeg < 1:
        errmsg = f"--maxdeg must be positive, got {args.maxdeg}."
        raise ValueError(errmsg)
    if args.sample < 1:
        errmsg = f"--sample must be positive, got {args.sample}."
        raise ValueError(errmsg)


def run_suite(
    name: str, args: argparse.Namespace, cfg: FieldCfg
) -> list[Check]:
    """Run one suite with its own generator seeded from ``--seed``.

    Suites that need a prime field are skipped with a warning over Q.
    """
    if name in PRIME_ONLY and not cfg.is_prime:
        wrnmsg = f"Suite {name!r} needs a prime field; skipping."
        warnings.warn(wrnmsg, UserWarning, stacklevel=2)
        return []
    rng = np.random.default_rng(args.seed)
    return SUITES[name](args, cfg, rng)


def report_params(args: argparse.Namespace, cfg: FieldCfg) -> dict:
    return {
        "field": cfg.label(),
        "k": args.k,
        "ell": args.ell,
        "a": args.a,
        "maxdeg": args.maxdeg,
        "sample": args.sample,
        "seed": args.seed,
    }


def generate_table(names: list[str]) -> Callable[..., Table]:
    rows = {name: {"status": "waiting", "result": ""} for name in names}

    def update_table(
        name: str | None = None,
        status: str | None = None,
        result: str | None = None,
    ) -> Table:
        if name is not None and name in rows:
            if status is not None:
                rows[name]["status"] = status

            if result is not None:
                rows[name]["result"] = result

        table = Table(expand=True)
        table.add_column("suite", justify="right", style="cyan", ratio=2)
        table.add_column("status", style="magenta", ratio=6)
        table.add_column("checks", justify="center", style="green", ratio=2)

        for suite, row in rows.items():
            table.add_row(suite, row["status"], row["result"])

        return table

    return update_table


def _tally(checks: list[Check]) -> str:
    counts = {"pass": 0, "fail": 0, "paper-discrepancy": 0}
    for check in checks:
        counts[check.status] += 1
    return " / ".join(f"{v} {k}" for k, v in counts.items() if v) or "none"


def main(args: argparse.Namespace) -> int:
    console = Console()

    try:
        cfg = field_of(args)
        names = suite_names(args.suite)
        resolve_defaults(args, cfg)
    except ValueError as exc:
        console.print(f"[bold red]error:[/bold red] {exc}")
        return 2

    update_table = generate_table(names)
    checks: list[Check] = []

    with Live(update_table(), refresh_per_second=4, transient=True,
              console=console) as live:
        for name in names:
            live.update(update_table(name=name, status="running..."))

            with warnings.catch_warnings(record=True) as wrns:
                warnings.simplefilter("always")
                try:
                    suite_checks = run_suite(name, args, cfg)
                except ValueError as exc:
                    console.print(f"[bold red]error:[/bold red] {exc}")
                    return 2

            status = "done"
            if len(wrns) > 0:
                status += " (" + "; ".join(str(w.message) for w in wrns) + ")"

            checks.extend(suite_checks)
            live.update(update_table(name=name, status=status,
                                     result=_tally(suite_checks)))

    console.print(update_table())
    console.print(render_checks(checks, verbose=args.verbose))

    report = Report(args.suite, cfg.p, report_params(args, cfg), checks)
    summary = report.summary()
    console.print(
        f"{summary['total']} checks: {summary['pass']} pass, "
        f"{summary['fail']} fail, "
        f"{summary['paper-discrepancy']} paper-discrepancy"
    )

    if args.out is not None:
        Path(args.out).write_text(report.to_json())

    return report.exit_code(strict=args.strict)


def parser(subparsers):
    parser = subparsers.add_parser(
        "verify",
        description="Verifies the identities of the Jordan plane, its "
        "Hopf algebras and their duals",
    )

    parser.add_argument(
        "--suite",
        dest="suite",
        action="store",
        type=str,
        metavar="name",
        default="all",
        choices=[*SUITES, "all"],
        help="verification suite to run (default: all)",
    )

    parser.add_argument(
        "--strict",
        dest="strict",
        action="store_true",
        help="also fail on discrepancies of printed identities",
    )

    parser.add_argument(
        "--out",
        dest="out",
        action="store",
        type=str,
        metavar="path",
        default=None,
        help="write the JSON report to this file (default: none)",
    )

    parser.add_argument(
        "--verbose",
        dest="verbose",
        action="store_true",
        help="list passing checks too",
    )

    field_group = parser.add_argument_group("field and parameters")

    field_group.add_argument(
        "--p",
        dest="p",
        action="store",
        type=int,
        metavar="prime",
        default=3,
        help="odd characteristic of the coefficient field (default: 3)",
    )

    field_group.add_argument(
        "--rational",
        dest="rational",
        action="store_true",
        help="work over the rationals instead; suites that need a prime "
        "field are skipped",
    )

    field_group.add_argument(
        "--k",
        dest="k",
        action="store",
        type=int,
        metavar="int",
        default=1,
        help="y-truncation exponent of K, G and H(k, ell, a) (default: 1)",
    )

    field_group.add_argument(
        "--ell",
        dest="ell",
        action="store",
        type=int,
        metavar="int",
        default=2,
        help="x-truncation exponent of F, G and H(k, ell, a) (default: 2)",
    )

    field_group.add_argument(
        "--a",
        dest="a",
        action="store",
        type=int,
        metavar="int",
        default=0,
        help="field parameter of K, G and H(k, ell, a) (default: 0)",
    )

    sample_group = parser.add_argument_group("bounds and sampling")

    sample_group.add_argument(
        "--maxdeg",
        dest="maxdeg",
        action="store",
        type=int,
        metavar="int",
        default=None,
        help="largest degree or word length checked (default: 3p, "
        "9 over the rationals)",
    )

    sample_group.add_argument(
        "--sample",
        dest="sample",
        action="store",
        type=int,
        metavar="int",
        default=200,
        help="number of random words per sampled check (default: 200)",
    )

    sample_group.add_argument(
        "--double-sample",
        dest="double_sample",
        action="store",
        type=int,
        metavar="int",
        default=10_000,
        help="number of sampled products in the Drinfeld double "
        "(default: 10000)",
    )

    sample_group.add_argument(
        "--seed",
        dest="seed",
        action="store",
        type=int,
        metavar="int",
        default=0,
        help="seed of the random generator (default: 0)",
    )

    sample_group.add_argument(
        "--no-certify",
        dest="no_certify",
        action="store_true",
        help="skip the simplicity certificates of the irreps suite",
    )

    sample_group.add_argument(
        "--presentation",
        dest="presentation",
        action="store",
        type=str,
        metavar="path",
        default=None,
        help="also check termination and confluence of a presentation "
        "file (default: none)",
    )

    parser.set_defaults(func=main)
