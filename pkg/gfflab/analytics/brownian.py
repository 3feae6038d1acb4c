"""Reference simulator for Brownian motion staying above a line."""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from gfflab.sampling import RngStream

from .tails import PsiParams

STEPS_PER_UNIT_TIME = 64


class SurvivalEstimate(NamedTuple):
    estimate: float
    se: float
    successes: int
    replicas: int


def survival_flags(
    params: PsiParams,
    steps: int,
    replicas: int,
    generator: np.random.Generator,
) -> np.ndarray:
    """Per-path survival indicators of the bridge-corrected scheme."""
    if steps < 1 or replicas < 1:
        raise ValueError(f"Need at least one step and one replica, got steps={steps}, replicas={replicas}")
    dt = params.T / steps
    y = np.full(replicas, params.b)
    alive = np.ones(replicas, dtype=bool)
    for _ in range(steps):
        following = y + math.sqrt(dt) * generator.standard_normal(replicas) - params.m * dt
        dip = np.exp(-2.0 * np.clip(y, 0.0, None) * np.clip(following, 0.0, None) / dt)
        alive &= (following > 0) & (generator.random(replicas) >= dip)
        y = following
    return alive


def default_steps(params: PsiParams) -> int:
    return max(1, math.ceil(STEPS_PER_UNIT_TIME * params.T))


def brownian_line_hitting_mc(
    params: PsiParams,
    steps: int | None = None,
    replicas: int = 10_000,
    rng: RngStream | np.random.Generator | int = 0,
) -> SurvivalEstimate:
    """Estimate P[B_t > m t - b for all t <= T] on a grid with bridge correction.

    Tracks Y = B - m t + b. Between grid points Y is a Brownian bridge, so given
    both endpoints positive it dips below 0 with probability exp(-2 y0 y1 / dt);
    the estimator is unbiased at any step count.
    """
    if isinstance(rng, RngStream):
        generator = rng.generator()
    elif isinstance(rng, np.random.Generator):
        generator = rng
    else:
        generator = np.random.default_rng(rng)
    alive = survival_flags(params, steps if steps is not None else default_steps(params), replicas, generator)
    successes = int(alive.sum())
    p = successes / replicas
    return SurvivalEstimate(
        estimate=p,
        se=math.sqrt(p * (1.0 - p) / replicas),
        successes=successes,
        replicas=replicas,
    )
