from __future__ import annotations

import argparse

from .cli.export import cli as export
from .cli.verify import cli as verify


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jordan-hopf")
    subparsers = parser.add_subparsers(dest="command", required=True)

    verify.parser(subparsers)
    export.parser(subparsers)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
