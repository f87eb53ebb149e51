"""Human-readable rendering of reports and hom-sets."""

from __future__ import annotations

from typing import TYPE_CHECKING

from rich.table import Table

if TYPE_CHECKING:
    from rich.console import Console

    from xmodalg.exceptions import XmodError
    from xmodalg.models.report import Report
    from xmodalg.models.results import HomSet


def _values(values: tuple[int, ...]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")" if values else ""


def report_table(report: Report) -> Table:
    """Table of the violations in a report."""
    table = Table(title=f"{report.subject}: {len(report.violations)} violation(s)")
    table.add_column("Axiom", style="bold red")
    table.add_column("Basis tuple")
    table.add_column("LHS")
    table.add_column("RHS")
    table.add_column("Count", justify="right")
    table.add_column("Detail", style="dim")
    for violation in report.violations:
        table.add_row(
            violation.axiom,
            _values(violation.indices),
            _values(violation.lhs),
            _values(violation.rhs),
            str(violation.count),
            violation.detail,
        )
    return table


def print_report(console: Console, report: Report) -> None:
    """Print a report summary, with a violation table when something failed."""
    if report.ok:
        console.print(f"✅ [green]{report.subject}: all axioms hold[/green]")
    else:
        console.print(report_table(report))
    if report.stats:
        stats = ", ".join(f"{key}={value}" for key, value in sorted(report.stats.items()))
        console.print(f"   [dim]{stats}[/dim]")


def print_homset(console: Console, homs: HomSet) -> None:
    """Print the matrices of every element of a hom-set."""
    table = Table(title=f"{len(homs)} {homs.kind} morphism(s)")
    table.add_column("#", justify="right")
    if homs.kind == "algebra":
        table.add_column("matrix")
        for n, f in enumerate(homs.elements):
            table.add_row(str(n), str(f.matrix))
    elif homs.kind == "xmod":
        table.add_column("f1")
        table.add_column("f0")
        for n, f in enumerate(homs.elements):
            table.add_row(str(n), str(f.f1.matrix), str(f.f0.matrix))
    else:
        table.add_column("f2")
        table.add_column("f1")
        table.add_column("f0")
        for n, f in enumerate(homs.elements):
            table.add_row(str(n), str(f.f2.matrix), str(f.f1.matrix), str(f.f0.matrix))
    console.print(table)


def print_error(console: Console, error: XmodError) -> None:
    """Print an error with its structured details."""
    console.print(f"❌ [bold red]{type(error).__name__}[/bold red]: {error.message}")
    for key, value in sorted(error.details.items()):
        console.print(f"   [dim]{key}: {value}[/dim]")
