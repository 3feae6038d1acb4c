"""Experiment execution: config loading, parallel replicas, resume and metrics."""

from __future__ import annotations

import errno
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterator

import yaml
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn, TimeElapsedColumn
from rich.table import Table

from gfflab.config import settings
from gfflab.errors import ConfigError
from gfflab.geometry import BoxSpec
from gfflab.solver import check_dense_capacity

from .experiments import EXPERIMENTS, CellGroup, Experiment, cell_key
from .models import EstimateRecord, ExperimentConfig
from .records import append_records, completed_cells

console = Console()


def load_experiment_config(path: Path, overrides: dict[str, Any] | None = None) -> ExperimentConfig:
    """Read a YAML experiment file and validate it, applying non-None overrides."""
    if not path.exists():
        raise FileNotFoundError(errno.ENOENT, "Config file not found", str(path))
    with open(path, "r", encoding="utf-8") as handle:
        data = yaml.safe_load(handle) or {}
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a mapping at the top level")
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key == "experiment" and data.get("experiment") not in (None, value):
            raise ConfigError(f"{path} configures experiment {data['experiment']!r}, not {value!r}")
        data[key] = value
    return ExperimentConfig(**data)


def _run_chunk(name: str, config: ExperimentConfig, group: CellGroup, start: int, stop: int) -> list[Any]:
    return EXPERIMENTS[name].run_chunk(config, group, start, stop)


class _InlineExecutor:
    """Sequential stand-in for a process pool when a single worker is requested."""

    def map(self, fn, *iterables):
        return map(fn, *iterables)

    def __enter__(self) -> _InlineExecutor:
        return self

    def __exit__(self, *exc_info: object) -> None:
        return None


class ExperimentRunner:
    """Runs an experiment cell group by cell group, appending records as groups finish."""

    def __init__(self, config: ExperimentConfig, show_progress: bool = True) -> None:
        self.config = config
        self.experiment: Experiment = EXPERIMENTS[config.experiment]
        self.show_progress = show_progress

    @property
    def metrics_path(self) -> Path:
        return self.config.out.with_name(self.config.out.name + ".metrics.log")

    def _log_metrics(self, lines: list[str]) -> None:
        """Append metric lines to the metrics log with timestamps."""
        timestamp = datetime.now(timezone.utc).isoformat()
        self.metrics_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.metrics_path, "a", encoding="utf-8") as log_file:
            for line in lines:
                log_file.write(f"{timestamp} {line}\n")

    def _check_capacity(self) -> None:
        if self.config.sampler == "cholesky":
            for n in self.config.N:
                check_dense_capacity(BoxSpec(n))

    def _pending(self) -> list[CellGroup]:
        done = completed_cells(self.config.out)
        pending = []
        for group in self.experiment.groups(self.config):
            labels = {cell.label for cell in group.cells if cell_key(self.config, cell) not in done}
            if labels:
                pending.append(group.only(labels))
        return pending

    def _executor(self) -> Executor | _InlineExecutor:
        if self.config.workers == 1:
            return _InlineExecutor()
        return ProcessPoolExecutor(max_workers=self.config.workers)

    def _outcomes(self, executor, group: CellGroup, progress: Progress | None, task) -> Iterator[Any]:
        bounds = self.experiment.chunks(self.config, group)
        name = self.experiment.name
        results = executor.map(
            _run_chunk,
            [name] * len(bounds),
            [self.config] * len(bounds),
            [group] * len(bounds),
            [b[0] for b in bounds],
            [b[1] for b in bounds],
        )
        for chunk in results:
            if progress is not None:
                progress.advance(task, len(chunk))
            yield from chunk

    def run(self) -> list[EstimateRecord]:
        """Execute every pending cell and return the records written by this run."""
        self._check_capacity()
        groups = self._pending()
        written: list[EstimateRecord] = []
        if not groups:
            console.print(f"[yellow]All cells already present in {self.config.out}; nothing to do[/yellow]")
            return written

        progress = Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TaskProgressColumn(),
            TimeElapsedColumn(),
            console=console,
            transient=True,
            disable=not self.show_progress,
        )
        with progress, self._executor() as executor:
            for group in groups:
                label = f"N={group.N}" if group.N is not None else group.cells[0].label
                task = progress.add_task(
                    f"[blue]{self.experiment.name} {label} ({len(group.cells)} cells)[/blue]",
                    total=group.replicas or None,
                )
                started = time.perf_counter()
                outcomes = list(self._outcomes(executor, group, progress, task))
                records = self.experiment.reduce(self.config, group, outcomes)
                elapsed = time.perf_counter() - started
                if self.config.record_wall_time:
                    records = [record.model_copy(update={"wall_time": elapsed}) for record in records]
                append_records(self.config.out, records)
                written.extend(records)
                self._log_metrics(
                    [
                        f"experiment={self.config.id} command={self.experiment.name} cell={cell.label} "
                        f"replicas={cell.replicas} workers={self.config.workers} wall_time={elapsed:.3f}s"
                        for cell in group.cells
                    ]
                )
                progress.remove_task(task)

        self._summary(written)
        return written

    def _summary(self, records: list[EstimateRecord]) -> None:
        table = Table(title=f"{self.config.id}: {self.experiment.name}")
        table.add_column("Cell", style="cyan")
        table.add_column("Mode")
        table.add_column("Event")
        table.add_column("n", justify="right")
        table.add_column("Estimate", style="green", justify="right")
        table.add_column("SE", justify="right")
        table.add_column("Oracle", style="yellow", justify="right")
        for record in records:
            table.add_row(
                record.cell.split("|", 2)[2].rsplit("|mode=", 1)[0],
                record.mode,
                record.event,
                str(record.replicas),
                _fmt(record.estimate),
                _fmt(record.se),
                _fmt(record.oracle),
            )
        console.print(table)


def _fmt(value: float | None) -> str:
    return "-" if value is None else f"{value:.6g}"


def resolve_workers(flag: int | None, config_workers: int) -> int:
    """Worker count precedence: CLI flag, then GFFLAB_WORKERS, then the config file."""
    if flag is not None:
        return flag
    if settings.workers is not None:
        return settings.workers
    return config_workers


def run_experiment(config: ExperimentConfig, show_progress: bool = False) -> list[EstimateRecord]:
    return ExperimentRunner(config, show_progress=show_progress).run()
