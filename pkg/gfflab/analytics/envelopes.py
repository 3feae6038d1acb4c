"""Predicted envelopes for conditional and unconditional one-arm probabilities.

All envelopes are order-of-magnitude predictions; their constants are free
calibration parameters carried by ``EnvelopeConstants``.
"""

from __future__ import annotations

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from gfflab.errors import DomainError

from .tails import nabla

EnvelopeKind = Literal["g_lower", "g_upper", "eta", "eta_tilde"]
ENVELOPE_KINDS: tuple[EnvelopeKind, ...] = ("g_lower", "g_upper", "eta", "eta_tilde")


class EnvelopeConstants(BaseModel):
    """Decay constants c (lower g), c' (upper g), c'' (domain of x) and rho (eta rates)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    c: float = Field(default=1.0, gt=0)
    c_prime: float = Field(default=0.25, gt=0)
    c_double_prime: float = Field(default=1.0, gt=0)
    rho: float = Field(default=0.25, gt=0)


def _log_n(N: int) -> float:
    if N < 2:
        raise DomainError(f"Envelopes need N >= 2, got N={N}")
    return math.log(N)


def g_envelope(
    kind: Literal["g_lower", "g_upper"],
    h: float,
    N: int,
    r: float,
    x: float,
    constants: EnvelopeConstants = EnvelopeConstants(),
) -> float:
    """Envelope of P[0 <-> ∂B_{rN} | phi_0 = h + x √log N]."""
    if not 0 < r <= 0.5:
        raise DomainError(f"g envelopes need r in (0, 1/2], got r={r}")
    if x <= 0:
        raise DomainError(f"g envelopes need x > 0, got x={x}")
    log_n = _log_n(N)
    log_r = abs(math.log(r))
    if h <= 0:
        return nabla(x * abs(h) / math.sqrt(log_n), x * math.sqrt(log_r) / math.sqrt(log_n))
    if x > constants.c_double_prime * math.sqrt(log_n / log_r):
        raise DomainError(f"x={x} exceeds c''·sqrt(log N)·|log r|^(-1/2) for h > 0")
    K = h / math.sqrt(log_r)
    rate = constants.c if kind == "g_lower" else constants.c_prime
    return x * math.exp(-rate * K * K) * math.sqrt(log_r / log_n)


def eta(h: float, N: int, rho: float) -> float:
    log_n = _log_n(N)
    if h <= 0:
        return min(max(abs(h), 1.0) / math.sqrt(log_n), 1.0)
    return min(math.exp(-rho * h * h) / math.sqrt(log_n), 1.0)


def eta_tilde(h: float, N: int, k: int, rho: float) -> float:
    """Envelope of P[0 <-> ∂B_k] for 1 <= k < N."""
    if not 1 <= k < N:
        raise DomainError(f"eta_tilde needs 1 <= k < N, got k={k}, N={N}")
    log_n = _log_n(N)
    gap = log_n - math.log(k)
    if h <= 0:
        return min(max(abs(h), math.sqrt(gap)) / math.sqrt(log_n), 1.0)
    return min(math.sqrt(gap / log_n) * math.exp(-rho * h * h / gap), 1.0)


def envelope(
    kind: EnvelopeKind,
    h: float,
    N: int,
    r: float = 0.5,
    k: int | None = None,
    x: float = 1.0,
    constants: EnvelopeConstants = EnvelopeConstants(),
) -> float:
    """Evaluate one envelope kind at (h, N) with its extra parameters."""
    if kind in ("g_lower", "g_upper"):
        return g_envelope(kind, h, N, r, x, constants)
    if kind == "eta":
        return eta(h, N, constants.rho)
    if kind == "eta_tilde":
        return eta_tilde(h, N, k if k is not None else N // 2, constants.rho)
    raise DomainError(f"Unknown envelope kind: {kind}")
