"""Boxes, annuli, boundaries and index maps on the square lattice.

Every site set in gfflab is a boolean mask over the full box B_{N+1}, stored as a
row-major ``(2N+3, 2N+3)`` array whose entry ``[i, j]`` is the site
``(i - N - 1, j - N - 1)``. Field values live on the interior B_N, a
``(2N+1, 2N+1)`` array; the ring ∂_i B_{N+1} carries the Dirichlet value 0 and is
never stored separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np
from scipy import sparse
from scipy.ndimage import generate_binary_structure

from gfflab.errors import DomainError

Site = tuple[int, int]

# Nearest-neighbour and *-adjacency structuring elements for scipy.ndimage.
NEAREST_STRUCTURE = generate_binary_structure(2, 1)
STAR_STRUCTURE = generate_binary_structure(2, 2)

_NEAREST_STEPS: tuple[Site, ...] = ((-1, 0), (1, 0), (0, -1), (0, 1))
_STAR_STEPS: tuple[Site, ...] = tuple(
    (dx, dy) for dy in (-1, 0, 1) for dx in (-1, 0, 1) if (dx, dy) != (0, 0)
)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


@dataclass(frozen=True)
class BoxSpec:
    """The box B_{N+1} = {x : |x|_inf <= N+1} with Dirichlet ring at |x|_inf = N+1."""

    N: int

    def __post_init__(self) -> None:
        if self.N < 0:
            raise DomainError(f"Box size must be non-negative, got N={self.N}")

    @property
    def radius(self) -> int:
        return self.N + 1

    @property
    def side(self) -> int:
        return 2 * self.N + 3

    @property
    def interior_side(self) -> int:
        return 2 * self.N + 1

    @property
    def shape(self) -> tuple[int, int]:
        return (self.side, self.side)

    @property
    def interior_shape(self) -> tuple[int, int]:
        return (self.interior_side, self.interior_side)

    @property
    def n_sites(self) -> int:
        return self.side * self.side

    @property
    def n_interior(self) -> int:
        return self.interior_side * self.interior_side

    @cached_property
    def linf(self) -> np.ndarray:
        """|x|_inf for every site of the full box."""
        r = np.abs(np.arange(-self.radius, self.radius + 1))
        return _frozen(np.maximum.outer(r, r))

    @cached_property
    def interior_mask(self) -> np.ndarray:
        return _frozen(self.linf <= self.N)

    def ball(self, k: int) -> np.ndarray:
        """Mask of B_k (empty for k < 0)."""
        return self.linf <= k

    def shell(self, k: int) -> np.ndarray:
        """Mask of the l_inf sphere |x|_inf = k, which is ∂_i B_k."""
        return self.linf == k

    def outer_boundary(self, k: int) -> np.ndarray:
        """Mask of ∂B_k: the ring at distance k+1 minus its four corners."""
        if k + 1 > self.radius:
            raise DomainError(f"∂B_{k} lies outside B_{self.radius}")
        r = np.arange(-self.radius, self.radius + 1)
        corner = np.logical_and.outer(np.abs(r) == k + 1, np.abs(r) == k + 1)
        return (self.linf == k + 1) & ~corner

    def contains(self, site: Site) -> bool:
        x, y = site
        return max(abs(x), abs(y)) <= self.radius

    def mask_of(self, sites: Iterable[Site]) -> np.ndarray:
        """Boolean mask of a collection of coordinates (all must lie in the box)."""
        mask = np.zeros(self.shape, dtype=bool)
        coords = np.asarray(list(sites), dtype=np.int64).reshape(-1, 2)
        if coords.size:
            if np.abs(coords).max() > self.radius:
                raise DomainError(f"Sites outside B_{self.radius}: {coords.tolist()}")
            mask[coords[:, 0] + self.radius, coords[:, 1] + self.radius] = True
        return mask

    def sites_of(self, mask: np.ndarray) -> np.ndarray:
        """Coordinates ``(m, 2)`` of a mask, in row-major order."""
        i, j = np.nonzero(mask)
        return np.stack([i - self.radius, j - self.radius], axis=1)

    def pad(self, interior: np.ndarray) -> np.ndarray:
        """Embed interior values into the full box with zeros on the ring."""
        full = np.zeros(self.shape, dtype=interior.dtype)
        full[1:-1, 1:-1] = interior
        return full

    @staticmethod
    def crop(full: np.ndarray) -> np.ndarray:
        """Restrict a full-box array to the interior B_N."""
        return full[1:-1, 1:-1]


@dataclass(frozen=True)
class Annulus:
    """A_{k,l} = B_l \\ B_k."""

    inner: int
    outer: int

    def __post_init__(self) -> None:
        if self.inner < 0 or self.outer <= self.inner:
            raise DomainError(f"Annulus needs 0 <= inner < outer, got ({self.inner}, {self.outer})")

    def mask(self, box: BoxSpec) -> np.ndarray:
        if self.outer > box.radius:
            raise DomainError(f"A_{{{self.inner},{self.outer}}} does not fit in B_{box.radius}")
        return (box.linf > self.inner) & (box.linf <= self.outer)


@dataclass(frozen=True)
class SiteIndex:
    """Bijection between coordinates in B_{N+1} and dense row-major offsets."""

    box: BoxSpec

    def offset(self, sites: np.ndarray | Site) -> np.ndarray:
        coords = np.asarray(sites, dtype=np.int64)
        i = coords[..., 0] + self.box.radius
        j = coords[..., 1] + self.box.radius
        return i * self.box.side + j

    def site(self, offsets: np.ndarray | int) -> np.ndarray:
        i, j = np.divmod(np.asarray(offsets, dtype=np.int64), self.box.side)
        return np.stack([i - self.box.radius, j - self.box.radius], axis=-1)

    def interior_offset(self, sites: np.ndarray | Site) -> np.ndarray:
        coords = np.asarray(sites, dtype=np.int64)
        return (coords[..., 0] + self.box.N) * self.box.interior_side + coords[..., 1] + self.box.N


class BoundarySets(NamedTuple):
    inner: np.ndarray
    outer: np.ndarray


def enumerate_edges(box: BoxSpec) -> np.ndarray:
    """All nearest-neighbour pairs of B_{N+1} as flat offsets, shape ``(E, 2)``.

    Order is fixed: edges along axis 1 row by row, then edges along axis 0.
    """
    ids = np.arange(box.n_sites, dtype=np.int64).reshape(box.shape)
    along_rows = np.stack([ids[:, :-1].ravel(), ids[:, 1:].ravel()], axis=1)
    along_cols = np.stack([ids[:-1, :].ravel(), ids[1:, :].ravel()], axis=1)
    return np.concatenate([along_rows, along_cols])


def boundary_sets(box: BoxSpec, k: int) -> BoundarySets:
    """Coordinates of (∂_i B_k, ∂B_k).

    ∂B_{N+1} is returned as coordinates even though it lies outside the stored box.
    """
    if not 0 <= k <= box.radius:
        raise DomainError(f"k must lie in [0, {box.radius}], got {k}")
    if k == 0:
        inner = np.zeros((1, 2), dtype=np.int64)
    else:
        inner = box.sites_of(box.shell(k))
    r = np.arange(-(k + 1), k + 2)
    ring = [(x, y) for x in r for y in r if max(abs(x), abs(y)) == k + 1 and not (abs(x) == abs(y) == k + 1)]
    outer = np.asarray(ring, dtype=np.int64)
    return BoundarySets(inner=inner, outer=outer)


def _neighbors(site: Site, steps: tuple[Site, ...], box: BoxSpec | None) -> list[Site]:
    x, y = site
    found = [(x + dx, y + dy) for dx, dy in steps]
    if box is not None:
        found = [s for s in found if box.contains(s)]
    return found


def nearest_neighbors(site: Site, box: BoxSpec | None = None) -> list[Site]:
    return _neighbors(site, _NEAREST_STEPS, box)


def star_neighbors(site: Site, box: BoxSpec | None = None) -> list[Site]:
    """The 8 sites at l_inf distance 1, optionally filtered to ``box``."""
    return _neighbors(site, _STAR_STEPS, box)


def lattice_graph(box: BoxSpec, edge_mask: np.ndarray | None = None) -> sparse.csr_matrix:
    """Symmetric adjacency over all sites of the box, restricted to ``edge_mask``."""
    edges = enumerate_edges(box)
    if edge_mask is not None:
        edges = edges[edge_mask]
    ones = np.ones(len(edges), dtype=np.int8)
    graph = sparse.coo_matrix((ones, (edges[:, 0], edges[:, 1])), shape=(box.n_sites, box.n_sites))
    return (graph + graph.T).tocsr()
