"""Sine eigenbasis of the killed step kernel on the interior grid.

The interior B_N is an n x n grid (n = 2N+1) with zero data one step outside.
Its Dirichlet eigenvectors are products of sin(pi j i / (n+1)), and the step
kernel I - P of the simple random walk has eigenvalues

    (4 - 2 cos(pi j / (n+1)) - 2 cos(pi k / (n+1))) / 4,   1 <= j, k <= n.

The orthonormal type-I sine transform is its own inverse, so
``G = S diag(1 / eig) S`` with ``S = sine_transform``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Literal

import numpy as np
from scipy import fft

TransformMethod = Literal["fft", "matrix"]


@lru_cache(maxsize=32)
def kernel_eigenvalues(n: int) -> np.ndarray:
    """Eigenvalues of I - P on an n x n Dirichlet grid, shape ``(n, n)``."""
    theta = np.pi * np.arange(1, n + 1) / (n + 1)
    mu = 2.0 - 2.0 * np.cos(theta)
    eig = np.add.outer(mu, mu) / 4.0
    eig.flags.writeable = False
    return eig


@lru_cache(maxsize=32)
def sine_matrix(n: int) -> np.ndarray:
    """Orthonormal, symmetric DST-I matrix of size n."""
    idx = np.arange(1, n + 1)
    matrix = np.sqrt(2.0 / (n + 1)) * np.sin(np.pi * np.outer(idx, idx) / (n + 1))
    matrix.flags.writeable = False
    return matrix


def sine_transform(values: np.ndarray, method: TransformMethod = "fft") -> np.ndarray:
    """2D orthonormal DST-I over the last two axes (self-inverse)."""
    if method == "fft":
        return fft.dstn(values, type=1, norm="ortho", axes=(-2, -1))
    if method == "matrix":
        matrix = sine_matrix(values.shape[-1])
        if values.shape[-2] != values.shape[-1]:
            raise ValueError(f"Matrix transform expects square grids, got {values.shape[-2:]}")
        return matrix @ values @ matrix
    raise ValueError(f"Unknown transform method: {method}")


def apply_green(values: np.ndarray, method: TransformMethod = "fft") -> np.ndarray:
    """Multiply interior data by G = (I - P)^{-1}."""
    eig = kernel_eigenvalues(values.shape[-1])
    return sine_transform(sine_transform(values, method) / eig, method)
