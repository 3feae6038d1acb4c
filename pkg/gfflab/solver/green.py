"""Green's function of the simple random walk on B_{N+1} killed on ∂_i B_{N+1}.

Convention: discrete-time walk with step kernel P (1/4 to each neighbour), so
``G = (I - P)^{-1}`` counts expected visits including time 0 and ``G(x, x) >= 1``.
This is the vertex restriction of the metric-graph Green's function on edges of
length 2.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np
from scipy import linalg, sparse

from gfflab.config import settings
from gfflab.errors import CapacityError
from gfflab.geometry import BoxSpec, Site, SiteIndex

from .spectral import apply_green

_CACHE_MAGIC = b"GFFGREEN"
_CACHE_VERSION = 1
_HEADER = struct.Struct("<8sII")


@lru_cache(maxsize=16)
def step_operator(box: BoxSpec) -> sparse.csr_matrix:
    """Sparse I - P over the interior sites in interior row-major order."""
    n = box.interior_side
    line = sparse.diags([-1.0, 2.0, -1.0], [-1, 0, 1], shape=(n, n))
    eye = sparse.identity(n)
    laplacian = sparse.kron(eye, line) + sparse.kron(line, eye)
    return (laplacian / 4.0).tocsr()


@dataclass(frozen=True, eq=False)
class GreenTable:
    """Dense G(x, y) over interior sites; entries touching the ring are 0."""

    box: BoxSpec
    values: np.ndarray = field(repr=False)

    def _offset(self, site: Site) -> int | None:
        if max(abs(site[0]), abs(site[1])) > self.box.N:
            return None
        return int(SiteIndex(self.box).interior_offset(site))

    def __call__(self, x: Site, y: Site) -> float:
        ox, oy = self._offset(x), self._offset(y)
        if ox is None or oy is None:
            return 0.0
        return float(self.values[ox, oy])

    def column(self, y: Site) -> np.ndarray:
        """G(., y) as an interior array."""
        oy = self._offset(y)
        if oy is None:
            return np.zeros(self.box.interior_shape)
        return self.values[:, oy].reshape(self.box.interior_shape)

    @property
    def origin_variance(self) -> float:
        return self((0, 0), (0, 0))

    def submatrix(self, rows: np.ndarray, cols: np.ndarray | None = None) -> np.ndarray:
        """G restricted to rows x cols, given as (n, 2) site arrays in B_N."""
        index = SiteIndex(self.box)
        row_offsets = index.interior_offset(rows)
        col_offsets = row_offsets if cols is None else index.interior_offset(cols)
        return self.values[np.ix_(row_offsets, col_offsets)]

    def cholesky_factor(self) -> np.ndarray:
        return _cholesky(self)


@lru_cache(maxsize=4)
def _cholesky(table: GreenTable) -> np.ndarray:
    return linalg.cholesky(table.values, lower=True)


def check_dense_capacity(box: BoxSpec) -> None:
    if box.n_interior > settings.dense_site_cap:
        raise CapacityError(
            f"Dense Green table for N={box.N} needs {box.n_interior} interior sites, "
            f"cap is {settings.dense_site_cap} (GFFLAB_DENSE_SITE_CAP)"
        )


def _build(box: BoxSpec) -> np.ndarray:
    operator = step_operator(box).toarray()
    factor = linalg.cho_factor(operator, lower=True)
    values = linalg.cho_solve(factor, np.eye(box.n_interior))
    return 0.5 * (values + values.T)


def _cache_path(cache_dir: Path, box: BoxSpec) -> Path:
    return cache_dir / f"green_N{box.N}.bin"


def save_green_table(table: GreenTable, path: Path) -> None:
    """Write a versioned binary cache: header then row-major little-endian float64."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as handle:
        handle.write(_HEADER.pack(_CACHE_MAGIC, _CACHE_VERSION, table.box.N))
        handle.write(np.ascontiguousarray(table.values, dtype="<f8").tobytes())


def load_green_table(path: Path) -> GreenTable:
    with open(path, "rb") as handle:
        header = handle.read(_HEADER.size)
        payload = handle.read()
    if len(header) < _HEADER.size:
        raise ValueError(f"Truncated Green cache header: {path}")
    magic, version, n = _HEADER.unpack(header)
    if magic != _CACHE_MAGIC or version != _CACHE_VERSION:
        raise ValueError(f"Unrecognised Green cache {path} (magic={magic!r}, version={version})")
    box = BoxSpec(n)
    values = np.frombuffer(payload, dtype="<f8")
    if values.size != box.n_interior**2:
        raise ValueError(f"Green cache {path} holds {values.size} values, expected {box.n_interior**2}")
    return GreenTable(box=box, values=values.reshape(box.n_interior, box.n_interior).copy())


@lru_cache(maxsize=4)
def _green_table_memo(box: BoxSpec, cache_dir: Path | None) -> GreenTable:
    if cache_dir is not None:
        path = _cache_path(cache_dir, box)
        if path.exists():
            return load_green_table(path)
    table = GreenTable(box=box, values=_build(box))
    if cache_dir is not None:
        save_green_table(table, _cache_path(cache_dir, box))
    return table


def green_table(box: BoxSpec, cache_dir: Path | None = None) -> GreenTable:
    """Dense Green's function by Cholesky factorization of I - P.

    Raises:
        CapacityError: if the interior exceeds ``settings.dense_site_cap`` sites.
    """
    check_dense_capacity(box)
    return _green_table_memo(box, cache_dir if cache_dir is not None else settings.green_cache_dir)


def green_column(box: BoxSpec, y: Site) -> np.ndarray:
    """G(., y) as an interior array by spectral solve; works beyond the dense cap."""
    if max(abs(y[0]), abs(y[1])) > box.N:
        return np.zeros(box.interior_shape)
    rhs = np.zeros(box.interior_shape)
    rhs[y[0] + box.N, y[1] + box.N] = 1.0
    return apply_green(rhs)


def green_value(box: BoxSpec, x: Site, y: Site) -> float:
    if max(abs(x[0]), abs(x[1])) > box.N:
        return 0.0
    return float(green_column(box, y)[x[0] + box.N, x[1] + box.N])
