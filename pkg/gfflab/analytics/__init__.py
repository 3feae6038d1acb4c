"""Closed-form tails, envelopes and the Brownian reference simulator."""

from .brownian import (
    STEPS_PER_UNIT_TIME,
    SurvivalEstimate,
    brownian_line_hitting_mc,
    default_steps,
    survival_flags,
)
from .envelopes import (
    ENVELOPE_KINDS,
    EnvelopeConstants,
    EnvelopeKind,
    envelope,
    eta,
    eta_tilde,
    g_envelope,
)
from .tails import (
    PsiParams,
    exact_connection_oracle,
    gaussian_upper_tail,
    nabla,
    psi,
    psi_envelopes,
)

__all__ = [
    "ENVELOPE_KINDS",
    "STEPS_PER_UNIT_TIME",
    "EnvelopeConstants",
    "EnvelopeKind",
    "PsiParams",
    "SurvivalEstimate",
    "brownian_line_hitting_mc",
    "default_steps",
    "envelope",
    "eta",
    "eta_tilde",
    "exact_connection_oracle",
    "g_envelope",
    "gaussian_upper_tail",
    "nabla",
    "psi",
    "psi_envelopes",
    "survival_flags",
]
