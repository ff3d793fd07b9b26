"""Check records and report rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Literal

from rich.table import Table
from rich.text import Text

__all__ = ["Check", "Report", "make_check", "render_checks"]

Status = Literal["pass", "fail", "paper-discrepancy"]

_STYLES = {
    "pass": "green", "fail": "bold red", "paper-discrepancy": "yellow",
}


@dataclass
class Check:
    """Outcome of one verified identity or property.

    Attributes
    ----------
    id: str
        Identity name, e.g. ``"commutation/v^n*x"``.
    paper_ref: str
        Short human-readable label of the checked statement.
    params: dict
        Parameter values the identity was instantiated with.
    status: str
        ``"pass"``, ``"fail"`` or ``"paper-discrepancy"``.
    detail: str
        Free text, for failures the computed difference.

    """

    id: str
    paper_ref: str
    params: dict[str, Any] = field(default_factory=dict)
    status: Status = "pass"
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "paper_ref": self.paper_ref,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "status": self.status,
            "detail": self.detail,
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool | int | float | str) or value is None:
        return value
    if isinstance(value, list | tuple):
        return [_jsonable(v) for v in value]
    return str(value)


def make_check(
    id: str,  # noqa: A002
    paper_ref: str,
    params: dict[str, Any] | None = None,
    ok: bool = True,
    detail: str = "",
    flagged: bool = False,
) -> Check:
    """Build a check; a flagged identity that fails is a discrepancy."""
    if ok:
        status: Status = "pass"
    else:
        status = "paper-discrepancy" if flagged else "fail"
    return Check(id, paper_ref, dict(params or {}), status, detail)


@dataclass
class Report:
    suite: str
    p: int
    params: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def summary(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "paper-discrepancy": 0}
        for check in self.checks:
            out[check.status] += 1
        out["total"] = len(self.checks)
        return out

    def to_json(self) -> str:
        data = {
            "suite": self.suite,
            "p": self.p,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary(),
        }
        return json.dumps(data, indent=2) + "\n"

    def exit_code(self, strict: bool = False) -> int:
        summary = self.summary()
        if summary["fail"] or (strict and summary["paper-discrepancy"]):
            return 1
        return 0


def render_checks(checks: list[Check], verbose: bool = False) -> Table:
    """Table of checks; passing rows are folded unless ``verbose``."""
    table = Table(expand=True)
    table.add_column("id", justify="right", style="cyan", ratio=3)
    table.add_column("params", style="magenta", ratio=2)
    table.add_column("status", justify="center", ratio=1)
    table.add_column("detail", style="green", ratio=4)

    folded = 0
    for check in checks:
        if check.status == "pass" and not verbose:
            folded += 1
            continue
        params = ", ".join(f"{k}={v}" for k, v in check.params.items())
        style = _STYLES[check.status]
        table.add_row(
            Text(check.id),
            Text(params),
            Text(check.status, style=style),
            Text(check.detail or check.paper_ref),
        )
    if folded:
        table.add_row("...", "...", f"[green]{folded} pass[/green]", "...")
    return table
