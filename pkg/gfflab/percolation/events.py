"""One-arm events, annulus circuits and chemical distances on a realised level set."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse
from scipy.ndimage import label
from scipy.sparse.csgraph import connected_components, dijkstra

from gfflab.errors import DomainError
from gfflab.geometry import STAR_STRUCTURE, Annulus, BoxSpec, SiteIndex, enumerate_edges, lattice_graph
from gfflab.metric import EdgeOverlay
from gfflab.sampling import FieldSample

from .clusters import Mode, label_clusters


def _origin_mask(box: BoxSpec) -> np.ndarray:
    return box.mask_of([(0, 0)])


def arm_radius(N: int, r: float) -> int:
    if not 0 < r <= 0.5:
        raise DomainError(f"One-arm radius fraction must lie in (0, 1/2], got {r}")
    return math.floor(r * N)


def one_arm_bulk(
    sample: FieldSample,
    h: float,
    mode: Mode = "discrete",
    r: float = 0.5,
    overlay: EdgeOverlay | None = None,
) -> bool:
    """0 <-> ∂B_{floor(rN)} in {phi >= h}."""
    box = sample.box
    target = box.outer_boundary(arm_radius(box.N, r))
    return label_clusters(sample, h, mode, overlay).connects(_origin_mask(box), target)


def one_arm_boundary(
    sample: FieldSample,
    h: float,
    mode: Mode = "discrete",
    overlay: EdgeOverlay | None = None,
) -> bool:
    """0 <-> ∂_i B_N in {phi >= h}."""
    box = sample.box
    return label_clusters(sample, h, mode, overlay).connects(_origin_mask(box), box.shell(box.N))


def one_arm_outer(
    sample: FieldSample,
    h: float,
    mode: Mode = "metric",
    overlay: EdgeOverlay | None = None,
) -> bool:
    """0 <-> ∂B_N, the zero ring itself; the event of the exact connection formula."""
    box = sample.box
    return label_clusters(sample, h, mode, overlay).connects(_origin_mask(box), box.outer_boundary(box.N))


def circuit_annulus(N: int, alpha: float, beta: float) -> Annulus:
    if not 0 < alpha < beta < 1:
        raise DomainError(f"Circuit annulus needs 0 < alpha < beta < 1, got alpha={alpha}, beta={beta}")
    inner, outer = math.floor(alpha * N), math.floor(beta * N)
    if outer <= inner:
        raise DomainError(f"A_{{{inner},{outer}}} is empty at N={N}")
    return Annulus(inner, outer)


def circuit_in_annulus(sample: FieldSample, h: float, alpha: float, beta: float) -> bool:
    """An open circuit in A_{floor(alpha N), floor(beta N)} surrounding the inner box.

    By site duality on Z^2 such a circuit exists iff no *-connected path of
    closed sites (phi < h) in the annulus joins its innermost layer to its
    outermost one.
    """
    box = sample.box
    annulus = circuit_annulus(box.N, alpha, beta)
    ring = annulus.mask(box)
    closed = ring & (sample.full() < h)
    labels, _ = label(closed, structure=STAR_STRUCTURE)
    inner = np.unique(labels[box.shell(annulus.inner + 1) & closed])
    outer = np.unique(labels[box.shell(annulus.outer) & closed])
    return not np.intersect1d(inner, outer).size


def circuit_direct_search(sample: FieldSample, h: float, alpha: float, beta: float) -> bool:
    """Direct search for an open circuit winding around the inner box.

    Works on the two-sheeted cover of the open annulus graph whose sheets swap
    across the ray {y = 1/2, x > 1/2}. A closed walk crosses that ray an odd
    number of times iff it winds around B_k, so a circuit exists iff some site
    is connected to its own copy on the other sheet.
    """
    box = sample.box
    annulus = circuit_annulus(box.N, alpha, beta)
    open_sites = (annulus.mask(box) & (sample.full() >= h)).ravel()

    edges = enumerate_edges(box)
    edges = edges[open_sites[edges[:, 0]] & open_sites[edges[:, 1]]]
    index = SiteIndex(box)
    u, v = index.site(edges[:, 0]), index.site(edges[:, 1])
    flip = (u[:, 0] == v[:, 0]) & (u[:, 0] >= 1) & (np.minimum(u[:, 1], v[:, 1]) == 0) & (u[:, 1] != v[:, 1])

    n = box.n_sites
    a = edges[:, 0]
    b = edges[:, 1]
    rows = np.concatenate([a, a + n])
    cols = np.concatenate([np.where(flip, b + n, b), np.where(flip, b, b + n)])
    ones = np.ones(len(rows), dtype=np.int8)
    cover = sparse.coo_matrix((ones, (rows, cols)), shape=(2 * n, 2 * n)).tocsr()
    _, components = connected_components(cover, directed=False)

    sites = np.flatnonzero(open_sites)
    return bool(np.any(components[sites] == components[sites + n]))


@dataclass(frozen=True, eq=False)
class ChemicalDistanceResult:
    """Graph distance between two site sets inside {phi >= h} ∩ B_N."""

    distance: float
    source: np.ndarray = field(repr=False)
    target: np.ndarray = field(repr=False)

    @property
    def connected(self) -> bool:
        return math.isfinite(self.distance)


def chemical_distance(
    sample: FieldSample,
    h: float,
    source: np.ndarray,
    target: np.ndarray,
) -> ChemicalDistanceResult:
    """Multi-source shortest path length over open sites of B_N; ``inf`` when disconnected."""
    box = sample.box
    open_sites = box.interior_mask & (sample.full() >= h)
    sources = source & open_sites
    targets = target & open_sites

    if (sources & targets).any():
        distance = 0.0
    elif not sources.any() or not targets.any():
        distance = math.inf
    else:
        flat = open_sites.ravel()
        edges = enumerate_edges(box)
        graph = lattice_graph(box, flat[edges[:, 0]] & flat[edges[:, 1]])
        lengths = dijkstra(
            graph,
            directed=False,
            indices=np.flatnonzero(sources.ravel()),
            unweighted=True,
            min_only=True,
        )
        distance = float(lengths[targets.ravel()].min())
    return ChemicalDistanceResult(distance=distance, source=source, target=target)
