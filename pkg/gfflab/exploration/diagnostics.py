"""Harmonic support D(I) and the hidden-mass ratio xi(U, I)."""

from __future__ import annotations

import numpy as np
from scipy.ndimage import binary_dilation, label

from gfflab.errors import DomainError
from gfflab.geometry import NEAREST_STRUCTURE, BoxSpec
from gfflab.solver import harmonic_mass


def harmonic_support(box: BoxSpec, explored: np.ndarray) -> np.ndarray:
    """D(I): sites of I hit with positive probability by a walk from ∂_i B_N before I.

    A site of I qualifies when it lies on ∂_i B_N or touches a component of
    B_N \\ I that reaches ∂_i B_N.
    """
    if (explored & ~box.interior_mask).any():
        raise DomainError(f"Explored set must lie in B_{box.N}")
    shell = box.shell(box.N)
    labels, _ = label(box.interior_mask & ~explored, structure=NEAREST_STRUCTURE)
    reaching = np.setdiff1d(np.unique(labels[shell]), [0])
    outside = np.isin(labels, reaching)
    touched = binary_dilation(outside, structure=NEAREST_STRUCTURE)
    return explored & (shell | touched)


def xi_diagnostic(box: BoxSpec, sources: np.ndarray, explored: np.ndarray) -> float:
    """max_{x in I \\ D(I)} H_N(U, x; I \\ D(I)) / H_N(U, I); 0 when I = D(I)."""
    hidden = explored & ~harmonic_support(box, explored)
    if not hidden.any():
        return 0.0
    reach = harmonic_mass(box, sources, explored).total
    if reach <= 0.0:
        return 0.0
    inner = harmonic_mass(box, sources, hidden).mass
    return float(inner[hidden].max() / reach)
