"""Dirichlet problems and harmonic measure for the killed simple random walk.

All site sets are full-box masks. A site set ``A`` together with the ring
∂_i B_{N+1} is absorbing; the remaining interior sites are free.

Harmonic measure from a set ``U`` is obtained from a single adjoint solve: with
F the free sites and ``w = G_F 1_{U ∩ F}``,

    H_N(U, x; A) = 1_U(x) + (1/4) * sum_{y in F, y ~ x} w(y),   x in A,

which is the last-step decomposition of the walk before absorption.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy import sparse
from scipy.ndimage import label
from scipy.sparse.linalg import LinearOperator, cg, spsolve

from gfflab.config import settings
from gfflab.errors import DomainError
from gfflab.geometry import NEAREST_STRUCTURE, BoxSpec, Site

from .green import step_operator


def solve_spd(matrix: sparse.csr_matrix, rhs: np.ndarray) -> np.ndarray:
    """Solve a restricted I - P system: sparse LU when small, Jacobi-preconditioned CG otherwise."""
    size = matrix.shape[0]
    if size == 0:
        return np.zeros(rhs.shape)
    if size <= settings.direct_solve_cap:
        return np.asarray(spsolve(matrix.tocsc(), rhs)).reshape(rhs.shape)
    inverse_diag = 1.0 / matrix.diagonal()
    preconditioner = LinearOperator((size, size), matvec=lambda v: inverse_diag * v)
    solution, info = cg(matrix, rhs, rtol=settings.solver_rtol, atol=0.0, M=preconditioner, maxiter=20 * size)
    if info != 0:
        raise RuntimeError(f"CG failed to converge on a {size}-site Dirichlet problem (info={info})")
    return solution


def _free_system(box: BoxSpec, absorbing: np.ndarray) -> tuple[np.ndarray, sparse.csr_matrix]:
    free = box.crop(~absorbing).ravel()
    operator = step_operator(box)
    return free, operator[free][:, free]


def _neighbor_sum(full: np.ndarray) -> np.ndarray:
    padded = np.pad(full, 1)
    return padded[:-2, 1:-1] + padded[2:, 1:-1] + padded[1:-1, :-2] + padded[1:-1, 2:]


@dataclass(frozen=True, eq=False)
class HarmonicSolve:
    """Solution of a Dirichlet problem with data on ``absorbing`` and 0 on the ring."""

    box: BoxSpec
    absorbing: np.ndarray = field(repr=False)
    data: np.ndarray = field(repr=False)
    u: np.ndarray = field(repr=False)

    def full(self) -> np.ndarray:
        return self.box.pad(self.u)

    def at(self, site: Site) -> float:
        return float(self.full()[site[0] + self.box.radius, site[1] + self.box.radius])


class HarmonicMass(NamedTuple):
    """H_N(U, x; A) on the sites of A (zero elsewhere) plus the mass killed on the ring."""

    mass: np.ndarray
    escape: float

    @property
    def total(self) -> float:
        return float(self.mass.sum())


def harmonic_extension(box: BoxSpec, conditioning: np.ndarray, data: np.ndarray) -> HarmonicSolve:
    """Extend ``data`` from ``conditioning`` harmonically, with 0 on ∂_i B_{N+1}.

    ``data`` is a full-box array; only its values on interior conditioning sites
    are used. The result equals E[phi_u | phi on conditioning] for the GFF.
    """
    absorbing = conditioning & box.interior_mask
    fixed = box.crop(absorbing).ravel()
    free, system = _free_system(box, absorbing)
    operator = step_operator(box)
    boundary_values = np.where(absorbing, data, 0.0)
    fixed_values = box.crop(boundary_values).ravel()[fixed]
    rhs = -(operator[free][:, fixed] @ fixed_values)

    u = np.zeros(box.n_interior)
    u[fixed] = fixed_values
    u[free] = solve_spd(system, rhs)
    return HarmonicSolve(box=box, absorbing=absorbing, data=boundary_values, u=u.reshape(box.interior_shape))


def harmonic_mass(box: BoxSpec, sources: np.ndarray, absorbing: np.ndarray) -> HarmonicMass:
    """Total harmonic measure H_N(U, x; A) = sum_{u in U} H_N(u, x; A) for every x in A."""
    absorbing_interior = absorbing & box.interior_mask
    free, system = _free_system(box, absorbing_interior)
    rhs = box.crop(sources).ravel()[free].astype(float)

    w = np.zeros(box.n_interior)
    w[free] = solve_spd(system, rhs)
    flux = sources.astype(float) + 0.25 * _neighbor_sum(box.pad(w.reshape(box.interior_shape)))

    ring = ~box.interior_mask
    mass = np.where(absorbing, flux, 0.0)
    escape = float(flux[ring & ~absorbing].sum())
    return HarmonicMass(mass=mass, escape=escape)


def harmonic_measure(box: BoxSpec, absorbing: np.ndarray, source: Site) -> HarmonicMass:
    """Law of the first hit of A ∪ ∂_i B_{N+1} by the walk started at ``source``."""
    if not absorbing.any():
        raise DomainError("Harmonic measure needs a non-empty absorbing set")
    return harmonic_mass(box, box.mask_of([source]), absorbing)


def hitting_probability_annulus(box: BoxSpec, x: Site, target: np.ndarray) -> float:
    """H_N(x, S) for connected S with 0 in S ⊂ B_{N/2} and x in A_{5N/8, 7N/8}."""
    n = box.N
    if not target[box.radius, box.radius]:
        raise DomainError("Target set must contain the origin")
    if (target & (box.linf > n // 2)).any():
        raise DomainError(f"Target set must lie inside B_{n // 2}")
    _, components = label(target, structure=NEAREST_STRUCTURE)
    if components != 1:
        raise DomainError(f"Target set must be connected, found {components} components")
    distance = max(abs(x[0]), abs(x[1]))
    if not (5 * n) // 8 < distance <= (7 * n) // 8:
        raise DomainError(f"Source {x} is not in A_{{{(5 * n) // 8},{(7 * n) // 8}}}")
    return harmonic_measure(box, target, x).total
