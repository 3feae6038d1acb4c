"""Exact samplers for the discrete GFF on B_{N+1} with zero boundary."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal

import numpy as np

from gfflab.geometry import BoxSpec, Site
from gfflab.solver import green_column, green_table, kernel_eigenvalues, sine_transform
from gfflab.solver.spectral import TransformMethod

from .rng import RngStream

SamplerMethod = Literal["spectral", "cholesky"]


@dataclass(frozen=True, eq=False)
class FieldSample:
    """One realisation of phi_N on the interior B_N; the ring ∂_i B_{N+1} is implicitly 0."""

    box: BoxSpec
    values: np.ndarray = field(repr=False)
    tag: str = ""

    def full(self) -> np.ndarray:
        return self.box.pad(self.values)

    @property
    def origin(self) -> float:
        return float(self.values[self.box.N, self.box.N])

    def at(self, site: Site) -> float:
        if max(abs(site[0]), abs(site[1])) > self.box.N:
            return 0.0
        return float(self.values[site[0] + self.box.N, site[1] + self.box.N])

    def open_mask(self, h: float) -> np.ndarray:
        """Sites of B_{N+1} with phi >= h (ring sites carry 0)."""
        return self.full() >= h


def _generator(rng: RngStream | np.random.Generator) -> tuple[np.random.Generator, str]:
    if isinstance(rng, RngStream):
        return rng.generator(), f"seed={rng.seed};key={'/'.join(map(str, rng.spawn_key))}"
    return rng, ""


def whiten(sample: FieldSample, transform: TransformMethod = "fft") -> np.ndarray:
    """Inverse of the spectral synthesis: recovers the i.i.d. normals behind a sample."""
    eig = kernel_eigenvalues(sample.box.interior_side)
    return sine_transform(sample.values, transform) * np.sqrt(eig)


def sample_field(
    box: BoxSpec,
    rng: RngStream | np.random.Generator,
    method: SamplerMethod = "spectral",
    transform: TransformMethod = "fft",
) -> FieldSample:
    """One exact draw of phi_N with covariance G.

    The spectral method scales i.i.d. normals by eig^{-1/2} in the sine basis of
    I - P; the Cholesky method multiplies by the factor of the dense Green table.
    """
    generator, tag = _generator(rng)
    normals = generator.standard_normal(box.interior_shape)
    if method == "spectral":
        eig = kernel_eigenvalues(box.interior_side)
        values = sine_transform(normals / np.sqrt(eig), transform)
    elif method == "cholesky":
        factor = green_table(box).cholesky_factor()
        values = (factor @ normals.ravel()).reshape(box.interior_shape)
    else:
        raise ValueError(f"Unknown sampler method: {method}")
    return FieldSample(box=box, values=values, tag=tag)


@lru_cache(maxsize=16)
def _origin_regression(box: BoxSpec) -> np.ndarray:
    column = green_column(box, (0, 0))
    regression = column / column[box.N, box.N]
    regression.flags.writeable = False
    return regression


def condition_origin(draw: FieldSample, v: float) -> FieldSample:
    """Shift an unconditioned draw so that phi_0 = v.

    phi' - phi'_0 G(., 0)/G(0, 0) is independent of phi'_0 and carries the
    conditional covariance, so one draw serves every conditioning value.
    """
    box = draw.box
    values = draw.values + (v - draw.origin) * _origin_regression(box)
    values[box.N, box.N] = v
    return FieldSample(box=box, values=values, tag=draw.tag)


def sample_field_conditioned_origin(
    box: BoxSpec,
    v: float,
    rng: RngStream | np.random.Generator,
    method: SamplerMethod = "spectral",
) -> FieldSample:
    """A draw of phi_N given phi_0 = v."""
    return condition_origin(sample_field(box, rng, method=method), v)
