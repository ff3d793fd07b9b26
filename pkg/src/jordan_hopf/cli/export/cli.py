from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from rich.console import Console

from ...catalog import ALGEBRAS, build_algebra
from ...pbw import dump_presentation
from ...repmod import simple_module
from ...scalars import FieldCfg


def export_presentation(args: argparse.Namespace, cfg: FieldCfg) -> str:
    if args.name is None:
        errmsg = f"An algebra name is required, one of {ALGEBRAS}."
        raise ValueError(errmsg)
    alg = build_algebra(args.name, cfg, k=args.k, ell=args.ell, a=args.a,
                        n=args.n)
    return dump_presentation(alg.system)


def export_irreps(args: argparse.Namespace, cfg: FieldCfg) -> str:
    """Dense matrices of every simple module, as JSON."""
    modules = [simple_module(cfg, k).to_dict() for k in range(cfg.p)]
    return json.dumps({"p": cfg.p, "modules": modules}, indent=2) + "\n"


def main(args: argparse.Namespace) -> int:
    console = Console(stderr=True)

    try:
        cfg = FieldCfg.rational() if args.rational else FieldCfg.prime(args.p)
        if args.what == "presentation":
            text = export_presentation(args, cfg)
        else:
            text = export_irreps(args, cfg)
    except ValueError as exc:
        console.print(f"[bold red]error:[/bold red] {exc}")
        return 2

    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        console.print(f"wrote {args.what} to {args.out}")
    return 0


def parser(subparsers):
    parser = subparsers.add_parser(
        "export",
        description="Writes a cataloged presentation or the simple modules "
        "of the double",
    )

    parser.add_argument(
        "what",
        action="store",
        type=str,
        choices=["presentation", "irreps"],
        help="what to export",
    )

    parser.add_argument(
        "name",
        action="store",
        type=str,
        nargs="?",
        default=None,
        choices=ALGEBRAS,
        help="cataloged algebra, required for presentation exports",
    )

    parser.add_argument(
        "--out",
        dest="out",
        action="store",
        type=str,
        metavar="path",
        default=None,
        help="output file (default: standard output)",
    )

    param_group = parser.add_argument_group("field and parameters")

    param_group.add_argument(
        "--p",
        dest="p",
        action="store",
        type=int,
        metavar="prime",
        default=3,
        help="odd characteristic of the coefficient field (default: 3)",
    )

    param_group.add_argument(
        "--rational",
        dest="rational",
        action="store_true",
        help="export over the rationals instead",
    )

    param_group.add_argument(
        "--k",
        dest="k",
        action="store",
        type=int,
        metavar="int",
        default=1,
        help="y-truncation exponent (default: 1)",
    )

    param_group.add_argument(
        "--ell",
        dest="ell",
        action="store",
        type=int,
        metavar="int",
        default=2,
        help="x-truncation exponent (default: 2)",
    )

    param_group.add_argument(
        "--a",
        dest="a",
        action="store",
        type=int,
        metavar="int",
        default=0,
        help="field parameter (default: 0)",
    )

    param_group.add_argument(
        "--n",
        dest="n",
        action="store",
        type=int,
        metavar="int",
        default=6,
        help="truncation degree of the graded dual E (default: 6)",
    )

    parser.set_defaults(func=main)
