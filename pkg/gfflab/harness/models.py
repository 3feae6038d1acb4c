"""Experiment configuration and result records."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from gfflab.analytics import EnvelopeConstants, PsiParams
from gfflab.percolation import arm_radius, circuit_annulus
from gfflab.sampling import SamplerMethod

ExperimentName = Literal[
    "one-arm-bulk",
    "one-arm-boundary",
    "gap",
    "circuit",
    "chem-dist",
    "conditional-arm",
    "martingale-audit",
    "psi-audit",
    "green-audit",
]
RunMode = Literal["discrete", "metric", "coupled"]

# Replica budgets per cell when the config gives none.
DEFAULT_REPLICAS: dict[str, int] = {
    "one-arm-bulk": 100_000,
    "one-arm-boundary": 100_000,
    "gap": 100_000,
    "circuit": 50_000,
    "chem-dist": 10_000,
    "conditional-arm": 100_000,
    "martingale-audit": 10_000,
    "psi-audit": 100_000,
    "green-audit": 1,
}
RARE_BOUNDARY_REPLICAS = 1_000_000


class PsiPoint(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    m: float
    b: float = Field(gt=0)
    T: float = Field(gt=0)

    @property
    def params(self) -> PsiParams:
        return PsiParams(self.m, self.b, self.T)


def default_psi_grid() -> list[PsiPoint]:
    """{m in -1, 0, 1} x {b in 0.5, 1} x {T in 1, 4}, dropping b > sqrt(T) for m > 0."""
    grid = []
    for m in (-1.0, 0.0, 1.0):
        for b in (0.5, 1.0):
            for T in (1.0, 4.0):
                if m > 0 and b > math.sqrt(T):
                    continue
                grid.append(PsiPoint(m=m, b=b, T=T))
    return grid


class ExperimentConfig(BaseModel):
    """One simulate run: an experiment over a grid of (N, h) cells."""

    model_config = ConfigDict(extra="forbid")

    id: str = Field(..., min_length=1, description="Experiment id echoed into every record")
    description: str = ""
    experiment: ExperimentName
    N: list[int] = Field(default_factory=lambda: [32], min_length=1)
    h: list[float] = Field(default_factory=lambda: [0.0], min_length=1)
    r: float = 0.5
    alpha: float = 0.25
    beta: float = 0.5
    gamma: float = 0.5
    mode: RunMode = "discrete"
    replicas: int | None = Field(None, ge=1)
    seed: int = Field(0, ge=0)
    workers: int = Field(1, ge=1)
    chunk_size: int = Field(500, ge=1, description="Replicas per work unit")
    kappa: float = Field(4.0, gt=0)
    sampler: SamplerMethod = "spectral"
    out: Path = Path("results.jsonl")

    x_values: list[float] = Field(default_factory=lambda: [0.5, 1.0])
    chem_c: float | None = Field(None, gt=0)
    chem_quantile: float = Field(0.8, gt=0, lt=1)
    audit_replicas: int = Field(0, ge=0)
    layers: list[int] | None = None
    trace_export: Path | None = None
    trace_export_replicas: int = Field(10, ge=0)
    psi_grid: list[PsiPoint] = Field(default_factory=default_psi_grid)
    psi_steps: int | None = Field(None, ge=1)
    record_wall_time: bool = False
    envelope: EnvelopeConstants = Field(default_factory=EnvelopeConstants)

    @field_validator("N")
    @classmethod
    def _positive_sizes(cls, sizes: list[int]) -> list[int]:
        if any(n < 1 for n in sizes):
            raise ValueError(f"Box sizes must be >= 1, got {sizes}")
        return sizes

    @field_validator("x_values")
    @classmethod
    def _positive_x(cls, values: list[float]) -> list[float]:
        if any(x <= 0 for x in values):
            raise ValueError(f"x values must be positive, got {values}")
        return values

    @model_validator(mode="after")
    def _check_geometry(self) -> ExperimentConfig:
        name = self.experiment
        if name in ("one-arm-bulk", "gap", "conditional-arm"):
            for n in self.N:
                arm_radius(n, self.r)
        if name == "gap":
            self.mode = "coupled"
        if name in ("circuit", "chem-dist") and self.mode != "discrete":
            raise ValueError(f"{name} runs on the discrete level set, got mode={self.mode}")
        if name == "circuit":
            for n in self.N:
                circuit_annulus(n, self.alpha, self.beta)
        if name == "chem-dist":
            if not 0 < self.alpha < self.beta <= self.gamma < 1:
                raise ValueError(
                    f"chem-dist needs 0 < alpha < beta <= gamma < 1, "
                    f"got ({self.alpha}, {self.beta}, {self.gamma})"
                )
            for n in self.N:
                circuit_annulus(n, self.alpha, self.beta)
        if name in ("conditional-arm", "chem-dist", "green-audit") and any(n < 2 for n in self.N):
            raise ValueError(f"{name} needs N >= 2 for log N normalisation, got {self.N}")
        if name == "martingale-audit":
            for n in self.N:
                layers = self.layers_for(n)
                if layers != sorted(set(layers)) or layers[0] < 0 or layers[-1] > n:
                    raise ValueError(f"Layers must be increasing within [0, {n}], got {layers}")
                if (3 * n) // 4 < 1:
                    raise ValueError(f"martingale-audit needs N >= 2, got N={n}")
        return self

    def layers_for(self, N: int) -> list[int]:
        if self.layers is not None:
            return list(self.layers)
        return sorted({N // 8, N // 4, N // 2})

    def replica_budget(self, h: float | None = None) -> int:
        if self.replicas is not None:
            return self.replicas
        if self.experiment == "one-arm-boundary" and h is not None and h > 0:
            return RARE_BOUNDARY_REPLICAS
        return DEFAULT_REPLICAS[self.experiment]

    def echo(self) -> dict[str, Any]:
        """Config as embedded in records; execution-only fields are left out."""
        return self.model_dump(
            mode="json",
            exclude={"workers", "out", "trace_export", "chunk_size"},
        )


class EstimateRecord(BaseModel):
    """One estimate for one cell; serialised as a single JSON line with fixed key order."""

    model_config = ConfigDict(extra="forbid")

    experiment: str
    command: str
    cell: str
    N: int | None
    h: float | None
    mode: str
    event: str
    replicas: int = Field(ge=0)
    successes: int | None = Field(None, ge=0)
    estimate: float | None
    se: float | None
    ci_low: float | None
    ci_high: float | None
    seed: int
    kappa: float
    replica_start: int = 0
    replica_stop: int = 0
    artifact_version: str
    oracle: float | None = None
    details: dict[str, Any] = Field(default_factory=dict)
    config: dict[str, Any] = Field(default_factory=dict)
    wall_time: float | None = None

    @field_validator("details")
    @classmethod
    def _sorted_details(cls, details: dict[str, Any]) -> dict[str, Any]:
        return {key: details[key] for key in sorted(details)}

    @model_validator(mode="after")
    def _check_counts(self) -> EstimateRecord:
        if self.successes is not None:
            if self.successes > self.replicas:
                raise ValueError(f"successes={self.successes} exceeds replicas={self.replicas}")
            for bound in (self.ci_low, self.ci_high):
                if bound is not None and not 0.0 <= bound <= 1.0:
                    raise ValueError(f"Proportion interval bound {bound} outside [0, 1]")
        return self

    def to_json_line(self) -> str:
        exclude = {"wall_time"} if self.wall_time is None else set()
        return self.model_dump_json(exclude=exclude)
