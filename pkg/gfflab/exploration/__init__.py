"""Discrete exploration process, exploration martingale and harmonic diagnostics."""

from .diagnostics import harmonic_support, xi_diagnostic
from .martingale import (
    MartingalePath,
    Observable,
    layer_increments,
    martingale_path,
    martingale_step,
    martingale_step_green,
)
from .process import UNSEEN, ExplorationTrace, explore, stopping_times

__all__ = [
    "UNSEEN",
    "ExplorationTrace",
    "MartingalePath",
    "Observable",
    "explore",
    "harmonic_support",
    "layer_increments",
    "martingale_path",
    "martingale_step",
    "martingale_step_green",
    "stopping_times",
    "xi_diagnostic",
]
