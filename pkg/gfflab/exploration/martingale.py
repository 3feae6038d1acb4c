"""Exploration martingale M_k = E[X_U | phi on V_k] and its harmonic-measure clock."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from gfflab.errors import DomainError
from gfflab.geometry import BoxSpec
from gfflab.solver import green_table, harmonic_extension, harmonic_mass

from .process import ExplorationTrace, stopping_times


@dataclass(frozen=True, eq=False)
class Observable:
    """X_U = sum of phi over U, and X̄_U = X_U / |U|."""

    box: BoxSpec
    sites: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if not self.sites.any():
            raise DomainError("Observable needs a non-empty site set")
        if (self.sites & ~self.box.interior_mask).any():
            raise DomainError(f"Observable sites must lie in B_{self.box.N}")

    @classmethod
    def bulk(cls, box: BoxSpec) -> Observable:
        """U = ∂B_{floor(3N/4)}."""
        return cls(box, box.outer_boundary((3 * box.N) // 4))

    @classmethod
    def boundary(cls, box: BoxSpec) -> Observable:
        """U = ∂_i B_N."""
        return cls(box, box.shell(box.N))

    @property
    def size(self) -> int:
        return int(self.sites.sum())

    def aggregate(self, values: np.ndarray) -> float:
        return float(values[self.sites].sum())

    def normalized(self, values: np.ndarray) -> float:
        return self.aggregate(values) / self.size


def martingale_step(
    trace: ExplorationTrace,
    observable: Observable,
    k: int,
    allow_overlap: bool = False,
) -> float:
    """M_k by harmonic extension of phi from V_k (0 on the ring), summed over U."""
    explored = trace.explored(k)
    if not allow_overlap and (explored & observable.sites).any():
        raise DomainError(f"Observable meets the explored set at step {k}")
    extension = harmonic_extension(trace.box, explored, trace.values)
    return observable.aggregate(extension.full())


def martingale_step_green(trace: ExplorationTrace, observable: Observable, k: int) -> float:
    """M_k as the Gaussian conditional mean G_{UV} G_{VV}^{-1} phi_V, summed over U."""
    box = trace.box
    explored = trace.explored(k) & box.interior_mask
    table = green_table(box)
    v_sites = box.sites_of(explored)
    g_vv = table.submatrix(v_sites)
    g_uv = table.submatrix(box.sites_of(observable.sites), v_sites)
    phi_v = trace.values[explored]
    return float(g_uv.sum(axis=0) @ np.linalg.solve(g_vv, phi_v))


@dataclass(frozen=True, eq=False)
class MartingalePath:
    """M̄_k and H̄_N(U, V_k) for k = 0 .. n_steps of one trace."""

    h: float
    frozen: bool
    martingale: np.ndarray = field(repr=False)
    harmonic: np.ndarray = field(repr=False)
    explored: np.ndarray = field(repr=False)

    @property
    def n_steps(self) -> int:
        return len(self.martingale) - 1

    @property
    def terminal_gap(self) -> float:
        """M̄_∞ - h H̄_N(U, V_∞); strictly negative for a frozen discrete trace that stays off U."""
        return float(self.martingale[-1] - self.h * self.harmonic[-1])

    def at(self, step: float) -> tuple[float, float]:
        """(M̄, H̄) at min(step, n_steps)."""
        k = self.n_steps if math.isinf(step) else min(int(step), self.n_steps)
        return float(self.martingale[k]), float(self.harmonic[k])

    def increments(self, times: Sequence[float]) -> list[tuple[float, float]]:
        """(ΔM̄, ΔH̄) between consecutive entries of times, each capped at n_steps."""
        points = [self.at(t) for t in times]
        return [(b[0] - a[0], b[1] - a[1]) for a, b in zip(points, points[1:])]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "step": np.arange(self.n_steps + 1),
                "explored": self.explored,
                "martingale": self.martingale,
                "harmonic": self.harmonic,
            }
        )


def martingale_path(trace: ExplorationTrace, observable: Observable) -> MartingalePath:
    """One adjoint harmonic-mass solve per step gives both M̄_k and H̄_N(U, V_k).

    M_k = sum_{x in V_k} phi_x H_N(U, x; V_k), with H̄ restricted to V_k ∩ B_N
    since ring sites carry the value 0.
    """
    box = trace.box
    size = observable.size
    martingale = np.empty(trace.n_steps + 1)
    harmonic = np.empty(trace.n_steps + 1)
    explored_sizes = np.empty(trace.n_steps + 1, dtype=np.int64)
    for k in range(trace.n_steps + 1):
        explored = trace.explored(k)
        mass = harmonic_mass(box, observable.sites, explored).mass
        inside = explored & box.interior_mask
        martingale[k] = float((mass * trace.values)[inside].sum()) / size
        harmonic[k] = float(mass[inside].sum()) / size
        explored_sizes[k] = int(explored.sum())
    return MartingalePath(
        h=trace.h,
        frozen=trace.frozen,
        martingale=martingale,
        harmonic=harmonic,
        explored=explored_sizes,
    )


def layer_increments(
    trace: ExplorationTrace,
    path: MartingalePath,
    layers: list[int],
) -> list[tuple[float, float]]:
    """(ΔM̄, ΔH̄) between consecutive stopping layers tau_{j} ∧ n_steps."""
    times = stopping_times(trace, layers)
    return path.increments([times[j] for j in layers])
