"""The experiment suite: per-replica pipelines and their reductions to records.

Every replica of a GFF experiment draws its field from the substream keyed by
(seed, N, replica) and its edge uniforms from a sibling substream, so all
levels h of a cell group are coupled and results do not depend on how replicas
are split across workers.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, ClassVar

import numpy as np
import pandas as pd

from gfflab import __version__
from gfflab.analytics import (
    EnvelopeKind,
    PsiParams,
    default_steps,
    envelope,
    eta,
    exact_connection_oracle,
    psi,
    psi_envelopes,
    survival_flags,
)
from gfflab.errors import DomainError
from gfflab.exploration import Observable, explore, martingale_path, stopping_times
from gfflab.geometry import BoxSpec
from gfflab.metric import build_overlay, draw_edge_uniforms
from gfflab.percolation import (
    arm_radius,
    chemical_distance,
    circuit_direct_search,
    circuit_in_annulus,
    one_arm_boundary,
    one_arm_bulk,
    one_arm_outer,
)
from gfflab.sampling import FieldSample, RngStream, condition_origin, sample_field, spawn_replica_stream
from gfflab.solver import green_value, harmonic_mass, hitting_probability_annulus

from .models import EstimateRecord, ExperimentConfig
from .stats import Z_95, Estimate, finite_or_none, mean_estimate, proportion

FIELD_STREAM = 0
EDGE_STREAM = 1
PSI_BLOCK = 1_000
STRATUM_MIN = 30


@dataclass(frozen=True)
class Cell:
    """One row of the experiment grid."""

    label: str
    N: int | None
    h: float | None
    replicas: int
    x: float | None = None


@dataclass(frozen=True)
class CellGroup:
    """Cells sharing replicas: the same field draws feed every cell of a group."""

    N: int | None
    cells: tuple[Cell, ...]
    lineage: tuple[int, ...]

    @property
    def replicas(self) -> int:
        return max((cell.replicas for cell in self.cells), default=0)

    def only(self, labels: set[str]) -> CellGroup:
        return CellGroup(self.N, tuple(c for c in self.cells if c.label in labels), self.lineage)


def cell_key(config: ExperimentConfig, cell: Cell) -> str:
    return f"{config.id}|{config.experiment}|{cell.label}|mode={config.mode}|replicas=0:{cell.replicas}"


def modes_for(config: ExperimentConfig) -> tuple[str, ...]:
    if config.mode == "coupled":
        return ("discrete", "metric")
    return (config.mode,)


def draw_replica(config: ExperimentConfig, N: int, index: int) -> tuple[FieldSample, np.ndarray | None]:
    """Field sample and, for metric modes, the edge uniforms of one replica."""
    box = BoxSpec(N)
    stream = RngStream(config.seed, index, (N,))
    sample = sample_field(box, spawn_replica_stream(stream, FIELD_STREAM), method=config.sampler)
    uniforms = None
    if config.mode in ("metric", "coupled"):
        uniforms = draw_edge_uniforms(box, spawn_replica_stream(stream, EDGE_STREAM))
    return sample, uniforms


def _level_label(h: float) -> str:
    return f"h={h:g}"


@lru_cache(maxsize=64)
def _oracle(N: int, h: float) -> float:
    return exact_connection_oracle(N, h)


class Experiment(ABC):
    name: ClassVar[str]

    def groups(self, config: ExperimentConfig) -> list[CellGroup]:
        """One group per N with one cell per level."""
        groups = []
        for n in config.N:
            cells = tuple(
                Cell(label=f"N={n}|{_level_label(h)}", N=n, h=h, replicas=config.replica_budget(h))
                for h in config.h
            )
            groups.append(CellGroup(N=n, cells=cells, lineage=(n,)))
        return groups

    def chunks(self, config: ExperimentConfig, group: CellGroup) -> list[tuple[int, int]]:
        step = config.chunk_size
        return [(start, min(start + step, group.replicas)) for start in range(0, group.replicas, step)]

    def run_chunk(self, config: ExperimentConfig, group: CellGroup, start: int, stop: int) -> list[Any]:
        return [self.replica(config, group, index) for index in range(start, stop)]

    @abstractmethod
    def replica(self, config: ExperimentConfig, group: CellGroup, index: int) -> Any: ...

    @abstractmethod
    def reduce(self, config: ExperimentConfig, group: CellGroup, outcomes: list[Any]) -> list[EstimateRecord]: ...

    def record(
        self,
        config: ExperimentConfig,
        cell: Cell,
        event: str,
        estimate: Estimate | None,
        *,
        mode: str | None = None,
        successes: int | None = None,
        replicas: int | None = None,
        oracle: float | None = None,
        details: dict[str, Any] | None = None,
    ) -> EstimateRecord:
        n = cell.replicas if replicas is None else replicas
        return EstimateRecord(
            experiment=config.id,
            command=self.name,
            cell=cell_key(config, cell),
            N=cell.N,
            h=cell.h,
            mode=mode or config.mode,
            event=event,
            replicas=n,
            successes=successes,
            estimate=finite_or_none(estimate.estimate) if estimate else None,
            se=finite_or_none(estimate.se) if estimate else None,
            ci_low=finite_or_none(estimate.ci_low) if estimate else None,
            ci_high=finite_or_none(estimate.ci_high) if estimate else None,
            seed=config.seed,
            kappa=config.kappa,
            replica_start=0,
            replica_stop=cell.replicas,
            artifact_version=__version__,
            oracle=finite_or_none(oracle),
            details={key: _jsonable(value) for key, value in (details or {}).items()},
            config=config.echo(),
        )


def _jsonable(value: Any) -> Any:
    if isinstance(value, (np.floating, float)):
        return finite_or_none(float(value))
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


class OneArmExperiment(Experiment):
    """Origin-to-target events evaluated per (level, mode) on coupled samples."""

    events: ClassVar[tuple[str, ...]]

    @abstractmethod
    def evaluate(self, config: ExperimentConfig, sample: FieldSample, h: float, mode: str, overlay) -> tuple[bool, ...]: ...

    def replica(self, config: ExperimentConfig, group: CellGroup, index: int) -> np.ndarray:
        sample, uniforms = draw_replica(config, group.N, index)
        modes = modes_for(config)
        result = np.zeros((len(group.cells), len(modes), len(self.events)), dtype=bool)
        for i, cell in enumerate(group.cells):
            for j, mode in enumerate(modes):
                overlay = None
                if mode == "metric":
                    overlay = build_overlay(sample, cell.h, config.kappa, uniforms=uniforms)
                result[i, j] = self.evaluate(config, sample, cell.h, mode, overlay)
        return result

    def cell_details(self, config: ExperimentConfig, cell: Cell, p: float) -> dict[str, Any]:
        return {}

    def cell_oracle(self, config: ExperimentConfig, cell: Cell) -> float | None:
        return None

    def reduce(self, config: ExperimentConfig, group: CellGroup, outcomes: list[np.ndarray]) -> list[EstimateRecord]:
        data = np.stack(outcomes)
        modes = modes_for(config)
        records = []
        for i, cell in enumerate(group.cells):
            block = data[: cell.replicas, i]
            oracle = self.cell_oracle(config, cell)
            for k, event in enumerate(self.events):
                violations = None
                if config.mode == "coupled":
                    violations = int(np.sum(block[:, 1, k] & ~block[:, 0, k]))
                for j, mode in enumerate(modes):
                    successes = int(block[:, j, k].sum())
                    estimate = proportion(successes, cell.replicas)
                    details = self.cell_details(config, cell, estimate.estimate)
                    if violations is not None:
                        details["coupled_violations"] = violations
                    records.append(
                        self.record(
                            config,
                            cell,
                            event,
                            estimate,
                            mode=mode,
                            successes=successes,
                            oracle=oracle,
                            details=details,
                        )
                    )
        return records


class OneArmBulk(OneArmExperiment):
    """Origin to ∂B_{rN} at each level."""

    name = "one-arm-bulk"
    events = ("one_arm_bulk",)

    def evaluate(self, config, sample, h, mode, overlay):
        return (one_arm_bulk(sample, h, mode, config.r, overlay),)

    def cell_details(self, config, cell, p):
        details: dict[str, Any] = {"r": config.r, "radius": arm_radius(cell.N, config.r)}
        if cell.N >= 2:
            log_n = math.log(cell.N)
            details["normalized"] = p * math.sqrt(log_n)
            details["eta"] = eta(cell.h, cell.N, config.envelope.rho)
        return details


class OneArmBoundary(OneArmExperiment):
    """Origin to the boundary shell and to the outer ring at each level."""

    name = "one-arm-boundary"
    events = ("one_arm_boundary", "one_arm_outer")

    def evaluate(self, config, sample, h, mode, overlay):
        return (
            one_arm_boundary(sample, h, mode, overlay),
            one_arm_outer(sample, h, mode, overlay),
        )

    def cell_oracle(self, config, cell):
        return _oracle(cell.N, cell.h) if cell.h < 0 else None

    def cell_details(self, config, cell, p):
        details: dict[str, Any] = {}
        if cell.N >= 2:
            details["log_N"] = math.log(cell.N)
        return details


class Gap(Experiment):
    """Discrete minus metric one-arm probability on coupled samples."""

    name = "gap"

    def replica(self, config, group, index):
        sample, uniforms = draw_replica(config, group.N, index)
        result = np.zeros((len(group.cells), 2), dtype=bool)
        for i, cell in enumerate(group.cells):
            overlay = build_overlay(sample, cell.h, config.kappa, uniforms=uniforms)
            result[i, 0] = one_arm_bulk(sample, cell.h, "discrete", config.r)
            result[i, 1] = one_arm_bulk(sample, cell.h, "metric", config.r, overlay)
        return result

    def reduce(self, config, group, outcomes):
        data = np.stack(outcomes)
        records = []
        for i, cell in enumerate(group.cells):
            n = cell.replicas
            discrete, metric = data[:n, i, 0], data[:n, i, 1]
            only_discrete = int(np.sum(discrete & ~metric))
            p_disc, p_metric = discrete.mean(), metric.mean()
            diff = p_disc - p_metric
            paired = (discrete.astype(float) - metric.astype(float)).std(ddof=1) / math.sqrt(n) if n > 1 else math.nan
            pooled = math.sqrt((p_disc * (1 - p_disc) + p_metric * (1 - p_metric)) / n)
            details = {
                "p_disc": p_disc,
                "p_metric": p_metric,
                "diff": diff,
                "se_pooled": pooled,
                "se_paired": paired,
                "z_pooled": diff / pooled if pooled > 0 else None,
                "coupled_violations": int(np.sum(metric & ~discrete)),
            }
            if cell.N >= 2:
                details["normalized_gap"] = diff * math.sqrt(math.log(cell.N))
            records.append(
                self.record(
                    config,
                    cell,
                    "gap",
                    proportion(only_discrete, n),
                    mode="coupled",
                    successes=only_discrete,
                    details=details,
                )
            )
        return records


class Circuit(Experiment):
    """Open circuits around B_{alpha N} in A_{alpha N, beta N}, with a duality audit."""

    name = "circuit"

    def replica(self, config, group, index):
        sample, _ = draw_replica(config, group.N, index)
        result = np.full((len(group.cells), 2), -1, dtype=np.int8)
        for i, cell in enumerate(group.cells):
            result[i, 0] = circuit_in_annulus(sample, cell.h, config.alpha, config.beta)
            if index < config.audit_replicas:
                result[i, 1] = circuit_direct_search(sample, cell.h, config.alpha, config.beta)
        return result

    def reduce(self, config, group, outcomes):
        data = np.stack(outcomes)
        records = []
        for i, cell in enumerate(group.cells):
            block = data[: cell.replicas, i]
            successes = int((block[:, 0] == 1).sum())
            audited = block[:, 1] >= 0
            details = {
                "alpha": config.alpha,
                "beta": config.beta,
                "audited": int(audited.sum()),
                "audit_disagreements": int((block[audited, 0] != block[audited, 1]).sum()),
            }
            records.append(
                self.record(
                    config,
                    cell,
                    "circuit",
                    proportion(successes, cell.replicas),
                    successes=successes,
                    details=details,
                )
            )
        return records


class ChemicalDistance(Experiment):
    """D(B_{alpha N}, ∂B_{beta N}) / (N (log N)^{1/4}) given B_{alpha N} <-> ∂B_{gamma N}."""

    name = "chem-dist"

    def replica(self, config, group, index):
        sample, _ = draw_replica(config, group.N, index)
        box = sample.box
        n = group.N
        inner = box.ball(math.floor(config.alpha * n))
        near = box.outer_boundary(math.floor(config.beta * n))
        far = box.outer_boundary(math.floor(config.gamma * n))
        scale = n * math.log(n) ** 0.25
        result = np.full(len(group.cells), np.nan)
        for i, cell in enumerate(group.cells):
            if chemical_distance(sample, cell.h, inner, far).connected:
                result[i] = chemical_distance(sample, cell.h, inner, near).distance / scale
        return result

    def reduce(self, config, group, outcomes):
        data = np.stack(outcomes)
        records = []
        for i, cell in enumerate(group.cells):
            values = data[: cell.replicas, i]
            conditioned = values[~np.isnan(values)]
            if config.chem_c is not None:
                c = config.chem_c
            elif conditioned.size:
                c = float(np.quantile(conditioned, config.chem_quantile))
            else:
                c = math.nan
            exceed = int(np.sum(conditioned > c)) if conditioned.size else 0
            details = {
                "c": c,
                "c_from_quantile": config.chem_c is None,
                "quantile": config.chem_quantile,
                "attempted": cell.replicas,
                "conditioned": int(conditioned.size),
                "p_condition": conditioned.size / cell.replicas,
                "mean_normalized": float(conditioned.mean()) if conditioned.size else None,
                "min_normalized": float(conditioned.min()) if conditioned.size else None,
            }
            records.append(
                self.record(
                    config,
                    cell,
                    "chem_dist_exceed",
                    proportion(exceed, int(conditioned.size)),
                    successes=exceed,
                    replicas=int(conditioned.size),
                    details=details,
                )
            )
        return records


class ConditionalArm(Experiment):
    """P[0 <-> ∂B_{rN} | phi_0 = h + x sqrt(log N)] against its envelopes."""

    name = "conditional-arm"

    def groups(self, config):
        groups = []
        for n in config.N:
            cells = tuple(
                Cell(
                    label=f"N={n}|{_level_label(h)}|x={x:g}",
                    N=n,
                    h=h,
                    replicas=config.replica_budget(h),
                    x=x,
                )
                for h in config.h
                for x in config.x_values
            )
            groups.append(CellGroup(N=n, cells=cells, lineage=(n,)))
        return groups

    def replica(self, config, group, index):
        draw, uniforms = draw_replica(config, group.N, index)
        root = math.sqrt(math.log(group.N))
        modes = modes_for(config)
        hits = np.zeros((len(group.cells), len(modes)), dtype=bool)
        for i, cell in enumerate(group.cells):
            sample = condition_origin(draw, cell.h + cell.x * root)
            for j, mode in enumerate(modes):
                overlay = None
                if mode == "metric":
                    overlay = build_overlay(sample, cell.h, config.kappa, uniforms=uniforms)
                hits[i, j] = one_arm_bulk(sample, cell.h, mode, config.r, overlay)
        return hits, draw.origin

    def _envelope(self, kind: EnvelopeKind, config: ExperimentConfig, cell: Cell) -> float | None:
        try:
            return envelope(kind, cell.h, cell.N, r=config.r, x=cell.x, constants=config.envelope)
        except DomainError:
            return None

    def reduce(self, config, group, outcomes):
        hits = np.stack([o[0] for o in outcomes])
        origins = np.asarray([o[1] for o in outcomes])
        root = math.sqrt(math.log(group.N))
        records = []
        for i, cell in enumerate(group.cells):
            n = cell.replicas
            xi = (origins[:n] - cell.h) / root
            lower = self._envelope("g_lower", config, cell)
            upper = self._envelope("g_upper", config, cell)
            for j, mode in enumerate(modes_for(config)):
                successes = int(hits[:n, i, j].sum())
                estimate = proportion(successes, n)
                details = {
                    "x": cell.x,
                    "r": config.r,
                    "g_lower": lower,
                    "g_upper": upper,
                    "ratio_upper": estimate.estimate / upper if upper else None,
                    "xi_mean": float(xi.mean()),
                    "xi_sd": float(xi.std(ddof=1)) if n > 1 else None,
                }
                records.append(
                    self.record(config, cell, "conditional_arm", estimate, mode=mode, successes=successes, details=details)
                )
        return records


class MartingaleAudit(Experiment):
    """Exploration martingale statistics from the origin at each level."""

    name = "martingale-audit"

    def replica(self, config, group, index):
        sample, _ = draw_replica(config, group.N, index)
        box = sample.box
        observable = Observable.bulk(box)
        layers = config.layers_for(group.N)
        source = box.mask_of([(0, 0)])
        result = []
        for cell in group.cells:
            trace = explore(sample, cell.h, source)
            times = stopping_times(trace, layers)
            result.append((martingale_path(trace, observable), [times[j] for j in layers]))
        return result

    def reduce(self, config, group, outcomes):
        layers = config.layers_for(group.N)
        records = []
        for i, cell in enumerate(group.cells):
            runs = [outcome[i] for outcome in outcomes[: cell.replicas]]
            records.append(self._increments(config, cell, runs))
            records.append(self._optional_stopping(config, cell, runs, layers))
            records.extend(self._quadratic_variation(config, cell, runs, layers))
            records.append(self._terminal(config, cell, runs))
            if config.trace_export is not None and config.trace_export_replicas:
                self._export(config, cell, runs)
        return records

    def _increments(self, config, cell, runs):
        longest = max(path.n_steps for path, _ in runs)
        strata = []
        for k in range(longest):
            steps = [path.martingale[k + 1] - path.martingale[k] for path, _ in runs if path.n_steps > k]
            if len(steps) < STRATUM_MIN:
                continue
            stratum = mean_estimate(steps)
            z = stratum.estimate / stratum.se if stratum.se > 0 else 0.0
            strata.append({"k": k, "n": len(steps), "mean": stratum.estimate, "se": stratum.se, "z": z})
        max_z = max((abs(s["z"]) for s in strata), default=0.0)
        return self.record(
            config,
            cell,
            "increment_max_z",
            Estimate(max_z, math.nan, math.nan, math.nan),
            details={"strata": strata, "n_strata": len(strata), "stratum_min": STRATUM_MIN},
        )

    def _optional_stopping(self, config, cell, runs, layers):
        differences = [path.at(times[-1])[0] - path.martingale[0] for path, times in runs]
        estimate = mean_estimate(differences)
        return self.record(
            config,
            cell,
            "optional_stopping",
            estimate,
            details={"layer": layers[-1], "z": estimate.estimate / estimate.se if estimate.se > 0 else None},
        )

    def _quadratic_variation(self, config, cell, runs, layers):
        increments = np.array([path.increments(times) for path, times in runs])
        records = []
        for a in range(len(layers) - 1):
            squares_arr = increments[:, a, 0] ** 2
            clocks_arr = increments[:, a, 1]
            clock = clocks_arr.mean()
            if clock > 0:
                ratio = squares_arr.mean() / clock
                residual = squares_arr - ratio * clocks_arr
                se = residual.std(ddof=1) / math.sqrt(len(runs)) / clock if len(runs) > 1 else math.nan
            else:
                ratio, se = math.nan, math.nan
            records.append(
                self.record(
                    config,
                    cell,
                    f"qv_ratio_{layers[a]}_{layers[a + 1]}",
                    Estimate(ratio, se, ratio - Z_95 * se, ratio + Z_95 * se),
                    details={"from_layer": layers[a], "to_layer": layers[a + 1], "mean_clock": clock},
                )
            )
        return records

    def _terminal(self, config, cell, runs):
        frozen = [path for path, _ in runs if path.frozen]
        below = sum(1 for path in frozen if path.terminal_gap < 0)
        return self.record(
            config,
            cell,
            "terminal_below_level",
            proportion(below, len(frozen)),
            successes=below,
            replicas=len(frozen),
            details={"attempted": cell.replicas},
        )

    def _export(self, config, cell, runs):
        frames = [
            path.to_frame().assign(replica=index)[["replica", "step", "explored", "martingale", "harmonic"]]
            for index, (path, _) in enumerate(runs[: config.trace_export_replicas])
        ]
        target = config.trace_export.with_name(f"{config.trace_export.stem}_N{cell.N}_h{cell.h:g}.csv")
        target.parent.mkdir(parents=True, exist_ok=True)
        pd.concat(frames, ignore_index=True).to_csv(target, index=False)


class PsiAudit(Experiment):
    """Bridge-corrected Brownian survival against the closed form psi."""

    name = "psi-audit"

    def groups(self, config):
        groups = []
        for index, point in enumerate(config.psi_grid):
            cell = Cell(
                label=f"m={point.m:g}|b={point.b:g}|T={point.T:g}",
                N=None,
                h=None,
                replicas=config.replica_budget(),
            )
            groups.append(CellGroup(N=None, cells=(cell,), lineage=(index,)))
        return groups

    def chunks(self, config, group):
        return [(start, min(start + PSI_BLOCK, group.replicas)) for start in range(0, group.replicas, PSI_BLOCK)]

    def _params(self, config: ExperimentConfig, group: CellGroup) -> PsiParams:
        return config.psi_grid[group.lineage[0]].params

    def run_chunk(self, config, group, start, stop):
        params = self._params(config, group)
        generator = RngStream(config.seed, start // PSI_BLOCK, group.lineage).generator()
        steps = config.psi_steps or default_steps(params)
        return list(survival_flags(params, steps, stop - start, generator))

    def replica(self, config, group, index):
        raise NotImplementedError("psi-audit simulates whole blocks")

    def reduce(self, config, group, outcomes):
        params = self._params(config, group)
        cell = group.cells[0]
        successes = int(np.sum(outcomes[: cell.replicas]))
        estimate = proportion(successes, cell.replicas)
        exact = psi(params)
        try:
            lower, upper = psi_envelopes(params, config.envelope.c, config.envelope.c_prime)
        except DomainError:
            lower = upper = None
        details = {
            "m": params.m,
            "b": params.b,
            "T": params.T,
            "steps": config.psi_steps or default_steps(params),
            "z": (estimate.estimate - exact) / estimate.se if estimate.se > 0 else None,
            "envelope_lower": lower,
            "envelope_upper": upper,
        }
        return [
            self.record(
                config,
                cell,
                "psi_survival",
                estimate,
                mode="brownian",
                successes=successes,
                oracle=exact,
                details=details,
            )
        ]


class GreenAudit(Experiment):
    """Deterministic checks: G(0,0) against log N, Beurling escape and the hitting estimate."""

    name = "green-audit"

    def groups(self, config):
        return [
            CellGroup(N=n, cells=(Cell(label=f"N={n}", N=n, h=None, replicas=0),), lineage=(n,))
            for n in config.N
        ]

    def chunks(self, config, group):
        return []

    def replica(self, config, group, index):
        raise NotImplementedError("green-audit has no random replicas")

    def reduce(self, config, group, outcomes):
        n = group.N
        cell = group.cells[0]
        box = BoxSpec(n)
        log_n = math.log(n)

        origin = green_value(box, (0, 0), (0, 0))
        segment = box.mask_of([(k, 0) for k in range(0, n + 2)])
        escape = harmonic_mass(box, box.mask_of([(-1, 0)]), segment).escape

        records = [
            self._exact(config, cell, "green_origin", origin, {"log_N": log_n, "ratio_log_N": origin / log_n}),
            self._exact(config, cell, "beurling_escape", escape, {"sqrt_n_scaled": escape * math.sqrt(n)}),
        ]
        if n >= 8:
            diameter = n // 4
            target = box.mask_of([(k, 0) for k in range(0, diameter + 1)])
            hit = hitting_probability_annulus(box, ((3 * n) // 4, 0), target)
            records.append(
                self._exact(
                    config,
                    cell,
                    "hitting_estimate",
                    hit,
                    {"diameter": diameter, "scaled": hit * (log_n - math.log(diameter))},
                )
            )
        return records

    def _exact(self, config, cell, event, value, details):
        return self.record(
            config,
            cell,
            event,
            Estimate(value, 0.0, value, value),
            mode="exact",
            replicas=0,
            details=details,
        )


EXPERIMENTS: dict[str, Experiment] = {
    experiment.name: experiment
    for experiment in (
        OneArmBulk(),
        OneArmBoundary(),
        Gap(),
        Circuit(),
        ChemicalDistance(),
        ConditionalArm(),
        MartingaleAudit(),
        PsiAudit(),
        GreenAudit(),
    )
}
