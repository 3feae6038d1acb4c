"""Gaussian tails, the line-crossing function psi and the exact connection oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc, log_ndtr

from gfflab.errors import DomainError
from gfflab.geometry import BoxSpec
from gfflab.solver import green_value


def gaussian_upper_tail(s: float | np.ndarray) -> float | np.ndarray:
    """Φ̄(s) = P[Z > s] for a standard normal Z."""
    value = 0.5 * erfc(np.asarray(s, dtype=float) / math.sqrt(2.0))
    return float(value) if np.ndim(value) == 0 else value


def _log_upper_tail(s: float) -> float:
    return float(log_ndtr(-s))


@dataclass(frozen=True)
class PsiParams:
    """Line t -> m t - b over the horizon [0, T]."""

    m: float
    b: float
    T: float

    def __post_init__(self) -> None:
        if not self.b > 0:
            raise DomainError(f"psi needs b > 0, got b={self.b}")
        if not self.T > 0:
            raise DomainError(f"psi needs T > 0, got T={self.T}")


def psi(params: PsiParams) -> float:
    """P[B_t > m t - b for all t <= T].

    psi = Φ̄(m√T - b/√T) - e^{2bm} Φ̄(m√T + b/√T), with the second term
    evaluated as exp(2bm + log Φ̄(.)) so large bm does not overflow.
    """
    m, b, T = params.m, params.b, params.T
    root = math.sqrt(T)
    first = gaussian_upper_tail(m * root - b / root)
    second = math.exp(2.0 * b * m + _log_upper_tail(m * root + b / root))
    return min(max(first - second, 0.0), 1.0)


def nabla(a: float, b: float) -> float:
    """a ∇ b = (a ∨ b) ∧ 1."""
    return min(max(a, b), 1.0)


def psi_envelopes(params: PsiParams, c: float = 1.0, c_prime: float = 0.5) -> tuple[float, float]:
    """Order-of-magnitude (lower, upper) envelopes of psi.

    For m > 0 and 0 < b <= √T: b e^{-c m²T}/√T and b e^{-c' m²T}/√T.
    For m <= 0 both sides are |mb| ∇ b/√T.
    """
    m, b, T = params.m, params.b, params.T
    root = math.sqrt(T)
    if m <= 0:
        value = nabla(abs(m * b), b / root)
        return value, value
    if b > root:
        raise DomainError(f"The m > 0 envelopes need b <= sqrt(T), got b={b}, T={T}")
    scale = b / root
    return scale * math.exp(-c * m * m * T), scale * math.exp(-c_prime * m * m * T)


def exact_connection_oracle(N: int, h: float, origin_variance: float | None = None) -> float:
    """P[0 <-> ∂B_N in the metric level set at h < 0] = 1 - 2 Φ̄(|h| / √G(0,0)).

    Pass ``origin_variance`` from a dense table when one is at hand; otherwise
    G(0,0) comes from a single spectral column.
    """
    if h >= 0:
        raise DomainError(f"The exact connection formula needs h < 0, got h={h}")
    if origin_variance is None:
        origin_variance = green_value(BoxSpec(N), (0, 0), (0, 0))
    return 1.0 - 2.0 * gaussian_upper_tail(abs(h) / math.sqrt(origin_variance))
