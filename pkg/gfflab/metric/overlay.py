"""Metric-graph connectivity at level h on top of a discrete sample.

Given the vertex values, the field on an edge is a Brownian bridge between its
endpoint values, independent across edges. With bridge variance-duration kappa
the bridge from a to b stays above h with probability

    1 - exp(-2 (a - h)(b - h) / kappa)      (a, b >= h),

and is certainly broken if either endpoint is below h. Any continuous path in
the metric level set between two vertices runs over whole edges, so vertex
connectivity through open edges is exact for vertex-to-vertex events.

With the step-kernel Green's function of ``gfflab.solver`` the vertex law has
density proportional to exp(-sum_edges (phi_x - phi_y)^2 / 8), so the bridges
have variance-duration 4 on the length-2 edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.sparse.csgraph import connected_components

from gfflab.errors import DomainError
from gfflab.geometry import BoxSpec, enumerate_edges, lattice_graph
from gfflab.sampling import FieldSample, RngStream

DEFAULT_KAPPA = 4.0
CLOSED = -1


def draw_edge_uniforms(box: BoxSpec, rng: RngStream | np.random.Generator) -> np.ndarray:
    """One uniform per edge, in ``enumerate_edges`` order."""
    generator = rng.generator() if isinstance(rng, RngStream) else rng
    return generator.random(len(enumerate_edges(box)))


def crossing_probability(a: np.ndarray, b: np.ndarray, h: float, kappa: float) -> np.ndarray:
    """Probability that the bridge between endpoint values a and b stays >= h."""
    gap = np.clip(a - h, 0.0, None) * np.clip(b - h, 0.0, None)
    return np.where((a >= h) & (b >= h), -np.expm1(-2.0 * gap / kappa), 0.0)


@dataclass(frozen=True, eq=False)
class EdgeOverlay:
    """Open/closed state of every edge of B_{N+1} at level h."""

    box: BoxSpec
    h: float
    kappa: float
    open_vertices: np.ndarray = field(repr=False)
    open_edges: np.ndarray = field(repr=False)

    @cached_property
    def component_labels(self) -> np.ndarray:
        """Component id per open vertex over open edges, ``CLOSED`` elsewhere."""
        graph = lattice_graph(self.box, self.open_edges)
        _, labels = connected_components(graph, directed=False)
        labels = labels.reshape(self.box.shape)
        _, compact = np.unique(labels[self.open_vertices], return_inverse=True)
        result = np.full(self.box.shape, CLOSED, dtype=np.int64)
        result[self.open_vertices] = compact
        return result


def build_overlay(
    sample: FieldSample,
    h: float,
    kappa: float = DEFAULT_KAPPA,
    rng: RngStream | np.random.Generator | None = None,
    uniforms: np.ndarray | None = None,
) -> EdgeOverlay:
    """Realise metric-graph edge states at level h.

    Pass the same ``uniforms`` for several levels to couple them pathwise: the
    open edges at a higher level are then a subset of those at a lower one.
    Segments joining two ring vertices are pinned to 0 and open iff h <= 0.
    """
    if kappa <= 0:
        raise DomainError(f"Bridge constant kappa must be positive, got {kappa}")
    box = sample.box
    if uniforms is None:
        if rng is None:
            raise ValueError("build_overlay needs either rng or uniforms")
        uniforms = draw_edge_uniforms(box, rng)
    edges = enumerate_edges(box)
    if uniforms.shape != (len(edges),):
        raise ValueError(f"Expected {len(edges)} edge uniforms, got shape {uniforms.shape}")

    values = sample.full().ravel()
    a, b = values[edges[:, 0]], values[edges[:, 1]]
    dip = 1.0 - crossing_probability(a, b, h, kappa)
    open_edges = (a >= h) & (b >= h) & (uniforms >= dip)

    ring = ~box.interior_mask.ravel()
    pinned = ring[edges[:, 0]] & ring[edges[:, 1]]
    open_edges = np.where(pinned, h <= 0, open_edges)
    return EdgeOverlay(
        box=box,
        h=h,
        kappa=kappa,
        open_vertices=sample.open_mask(h),
        open_edges=open_edges,
    )


def metric_connects(overlay: EdgeOverlay, source: np.ndarray, target: np.ndarray) -> bool:
    """Whether some open vertex of ``source`` reaches an open vertex of ``target``."""
    labels = overlay.component_labels
    source_ids = labels[source & overlay.open_vertices]
    target_ids = labels[target & overlay.open_vertices]
    if source_ids.size == 0 or target_ids.size == 0:
        return False
    return bool(np.intersect1d(source_ids, target_ids).size)
