"""Experiment configuration, parallel execution, persistence and summaries."""

from .experiments import EXPERIMENTS, Cell, CellGroup, Experiment, cell_key
from .models import DEFAULT_REPLICAS, EstimateRecord, ExperimentConfig, ExperimentName, PsiPoint, RunMode
from .records import append_records, completed_cells, read_records
from .runner import ExperimentRunner, load_experiment_config, resolve_workers, run_experiment
from .stats import Estimate, SlopeFit, linear_slope, loglog_slope, mean_estimate, proportion, wilson_interval
from .summary import Summary, summarize

__all__ = [
    "DEFAULT_REPLICAS",
    "EXPERIMENTS",
    "Cell",
    "CellGroup",
    "Estimate",
    "EstimateRecord",
    "Experiment",
    "ExperimentConfig",
    "ExperimentName",
    "ExperimentRunner",
    "PsiPoint",
    "RunMode",
    "SlopeFit",
    "Summary",
    "append_records",
    "cell_key",
    "completed_cells",
    "linear_slope",
    "load_experiment_config",
    "loglog_slope",
    "mean_estimate",
    "proportion",
    "read_records",
    "resolve_workers",
    "run_experiment",
    "summarize",
    "wilson_interval",
]
