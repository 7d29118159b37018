"""CLI interface for chebyshev-derivations."""

import asyncio
from pathlib import Path
from typing import Any

import typer
from pydantic import ValidationError
from rich import box
from rich.console import Console
from rich.table import Table

from chebyshev_derivations.cayley import cayley_element
from chebyshev_derivations.config import Settings, get_settings, reload_settings
from chebyshev_derivations.derivation import make_derivation_T, make_derivation_U
from chebyshev_derivations.exceptions import ChebyshevError
from chebyshev_derivations.log import configure_logging
from chebyshev_derivations.models import (
    Command,
    IdentityId,
    IdentityReport,
    Kind,
    Method,
    OutputFormat,
    RunConfig,
)
from chebyshev_derivations.orchestrator import VerificationOrchestrator
from chebyshev_derivations.render import dumps_json, multipoly_latex, render_multipoly

app = typer.Typer(
    name="chebyshev-derivations",
    help="Chebyshev derivations, their Cayley elements, and the identities they induce",
    rich_markup_mode="rich",
    no_args_is_help=True,
)


def build_config(**fields: Any) -> RunConfig:
    """Validate a command's options; any violation is a usage error (exit 2)."""
    settings = get_settings()
    try:
        return RunConfig(max_n=settings.max_n, **fields)
    except ValidationError as e:
        message = "; ".join(str(error["msg"]).removeprefix("Value error, ") for error in e.errors())
        raise typer.BadParameter(message) from e


def write_output(path: Path | None, payload: Any) -> None:
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps_json(payload) + "\n", encoding="utf-8")


def parse_identities(name: str) -> list[IdentityId]:
    if name == "all":
        return list(IdentityId)
    try:
        return [IdentityId.from_cli(name)]
    except ValueError as e:
        choices = ", ".join([member.cli_name for member in IdentityId] + ["all"])
        raise typer.BadParameter(f"{e}; choose from {choices}", param_hint="--identity") from e


@app.callback()
def main_callback(
    config: Path | None = typer.Option(
        None, "--config", "-c", exists=True, dir_okay=False, help="YAML settings file"
    ),
) -> None:
    """Exact Chebyshev derivation toolkit."""
    settings = reload_settings(config)
    configure_logging(settings.log_level, settings.log_json)


@app.command()
def cayley(
    kind: Kind = typer.Option(Kind.FIRST, "--kind", "-k", help="Derivation kind"),
    n: int = typer.Option(2, "--n", "-n", help="Order of the Cayley element"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", "-f", help="Output format"),
    method: Method = typer.Option(Method.CLOSED, "--method", "-m", help="closed or dixmier"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Also write JSON here"),
) -> None:
    """Print the Cayley element of order n."""
    cfg = build_config(
        command=Command.CAYLEY, kind=kind, n=n, format=fmt, method=method, output_path=output
    )
    try:
        element = cayley_element(cfg.kind, cfg.n, cfg.method)
    except ChebyshevError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(1) from e
    typer.echo(render_multipoly(element.poly, cfg.format))
    write_output(cfg.output_path, element.model_dump(mode="json"))


@app.command()
def verify(
    identity: str = typer.Option("all", "--identity", "-i", help="t-i ... hg-u, or all"),
    n_from: int = typer.Option(1, "--n-from", help="First n of the sweep"),
    n_to: int | None = typer.Option(None, "--n-to", help="Last n of the sweep"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", "-f", help="text or json"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Also write JSON reports here"),
) -> None:
    """Verify identities over a range of n; exit 1 if any check fails."""
    identities = parse_identities(identity)
    settings = get_settings()
    upper = max(settings.default_n_to, n_from) if n_to is None else n_to
    cfg = build_config(
        command=Command.VERIFY, n=upper, n_from=n_from, n_to=upper, format=fmt, output_path=output
    )

    async def run() -> list[IdentityReport]:
        orchestrator = VerificationOrchestrator(settings.workers)
        reports = []
        async for report in orchestrator.stream(identities, cfg.n_from, cfg.n_to):
            if cfg.format is not OutputFormat.JSON:
                typer.echo(report.to_text())
            reports.append(report)
        return reports

    reports = asyncio.run(run())
    payload = [report.to_json() for report in reports]
    if cfg.format is OutputFormat.JSON:
        typer.echo(dumps_json(payload))
    write_output(cfg.output_path, payload)
    if not all(report.passed for report in reports):
        raise typer.Exit(1)


@app.command("derivation-table")
def derivation_table(
    n: int = typer.Option(8, "--n", "-n", help="Largest generator index"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", "-f", help="Output format"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Also write JSON here"),
) -> None:
    """Print D_T(x_m) and D_U(x_m) for m = 0..n."""
    cfg = build_config(command=Command.DERIVATION_TABLE, n=n, format=fmt, output_path=output)
    first, second = make_derivation_T(cfg.n), make_derivation_U(cfg.n)
    rows = list(zip(first.images, second.images))
    payload = [
        {"m": m, "first": t.to_json(), "second": u.to_json()} for m, (t, u) in enumerate(rows)
    ]
    if cfg.format is OutputFormat.JSON:
        typer.echo(dumps_json(payload))
    elif cfg.format is OutputFormat.LATEX:
        for m, (t, u) in enumerate(rows):
            typer.echo(
                f"D_T(x_{{{m}}}) = {multipoly_latex(t)}, D_U(x_{{{m}}}) = {multipoly_latex(u)}"
            )
    else:
        console = Console(
            width=get_settings().console_width, color_system=None, highlight=False
        )
        table = Table(title=f"Chebyshev derivations, m = 0..{cfg.n}", box=box.ASCII)
        table.add_column("m", justify="right")
        table.add_column("D_T(x_m)", overflow="fold")
        table.add_column("D_U(x_m)", overflow="fold")
        for m, (t, u) in enumerate(rows):
            table.add_row(str(m), str(t), str(u))
        console.print(table)
    write_output(cfg.output_path, payload)


@app.command("series-check")
def series_check(
    kind: Kind | None = typer.Option(None, "--kind", "-k", help="Family to check (default both)"),
    order: int = typer.Option(20, "--order", min=2, help="Truncation order M >= 2"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", "-f", help="text or json"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Also write JSON here"),
) -> None:
    """Check the generating functions and the derivative expansions up to the order."""
    cfg = build_config(command=Command.SERIES_CHECK, n=order, format=fmt, output_path=output)
    kinds = [kind] if kind is not None else list(Kind)
    orchestrator = VerificationOrchestrator(get_settings().workers)
    checks = asyncio.run(orchestrator.series_check(kinds, cfg.n))
    payload = [check.model_dump(mode="json", by_alias=True) for check in checks]
    if cfg.format is OutputFormat.JSON:
        typer.echo(dumps_json(payload))
    else:
        for check in checks:
            typer.echo(check.to_text())
    write_output(cfg.output_path, payload)
    if not all(check.passed for check in checks):
        raise typer.Exit(1)


@app.command("init-config")
def init_config(
    path: Path = typer.Option(Path("config.yaml"), "--path", "-p", help="Config file path"),
) -> None:
    """Initialize a new configuration file."""
    Settings().to_yaml(path)
    typer.echo(f"Configuration written to {path}")


def main() -> None:
    """Entry point."""
    app()


if __name__ == "__main__":
    main()
