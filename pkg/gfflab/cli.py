"""CLI interface for the GFF percolation lab."""

import sys
from pathlib import Path
from typing import Callable, NoReturn

import click
import yaml
from pydantic import ValidationError
from rich.console import Console

from gfflab import __version__
from gfflab.errors import CapacityError, ConfigError, DomainError
from gfflab.harness import EXPERIMENTS, ExperimentRunner, load_experiment_config, resolve_workers, summarize

console = Console()
stderr_console = Console(file=sys.stderr)

EXIT_CONFIG = 2
EXIT_CAPACITY = 3
EXIT_IO = 4


def _fail(message: str, code: int) -> NoReturn:
    stderr_console.print(f"[red]✗ {message}[/red]")
    sys.exit(code)


def _guarded(action: str, body: Callable[[], None]) -> None:
    """Run ``body`` and map gfflab failures onto the documented exit codes."""
    try:
        body()
    except (ConfigError, DomainError, ValidationError, yaml.YAMLError) as e:
        _fail(f"{action} failed: invalid configuration: {e}", EXIT_CONFIG)
    except CapacityError as e:
        _fail(f"{action} failed: {e}", EXIT_CAPACITY)
    except OSError as e:
        path = e.filename if e.filename is not None else ""
        _fail(f"{action} failed: I/O error on {path}: {e.strerror or e}", EXIT_IO)


@click.group()
@click.version_option(version=__version__)
def cli():
    """gfflab - Monte Carlo lab for level-set percolation of the 2D Gaussian free field"""
    pass


@cli.group()
def simulate():
    """Run one experiment over the (N, h) grid of a YAML config."""
    pass


def _simulate_command(name: str) -> click.Command:
    experiment = EXPERIMENTS[name]

    @click.option(
        '--config', '-c',
        'config_path',
        required=True,
        type=click.Path(path_type=Path),
        help='Path to experiment config'
    )
    @click.option('--seed', type=click.IntRange(min=0), default=None, help='Override the config seed')
    @click.option('--workers', type=click.IntRange(min=1), default=None, help='Worker processes')
    @click.option('--out', 'out_path', type=click.Path(path_type=Path), default=None, help='JSONL output path')
    def command(config_path: Path, seed: int | None, workers: int | None, out_path: Path | None) -> None:
        console.print(f"[blue]Starting {name} from {config_path}...[/blue]")

        def body() -> None:
            config = load_experiment_config(
                config_path, {"experiment": name, "seed": seed, "out": out_path}
            )
            config = config.model_copy(update={"workers": resolve_workers(workers, config.workers)})
            records = ExperimentRunner(config).run()
            console.print(f"[green]✓ {name} wrote {len(records)} records to {config.out}[/green]")

        _guarded(name, body)

    command.__doc__ = experiment.__doc__
    return simulate.command(name=name)(command)


for _name in EXPERIMENTS:
    _simulate_command(_name)


@cli.command(name="summarize")
@click.option(
    '--in', 'records_path',
    required=True,
    type=click.Path(path_type=Path),
    help='JSONL result file'
)
@click.option(
    '--out', 'out_dir',
    required=True,
    type=click.Path(file_okay=False, path_type=Path),
    help='Directory for the CSV tables'
)
def summarize_command(records_path: Path, out_dir: Path) -> None:
    """Write estimate, claim and slope tables from a result file."""
    console.print(f"[blue]Summarizing {records_path}...[/blue]")

    def body() -> None:
        summary = summarize(records_path, out_dir)
        for warning in summary.warnings:
            console.print(f"[yellow]{warning}[/yellow]")
        console.print(
            f"[green]✓ {len(summary.estimates)} estimates, {len(summary.slopes)} slopes "
            f"written to {out_dir}[/green]"
        )

    _guarded("summarize", body)


if __name__ == "__main__":
    cli()
