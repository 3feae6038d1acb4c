"""Exact GFF sampling and reproducible random substreams."""

from .field import (
    FieldSample,
    SamplerMethod,
    condition_origin,
    sample_field,
    sample_field_conditioned_origin,
    whiten,
)
from .rng import RngStream, spawn_replica_stream

__all__ = [
    "FieldSample",
    "RngStream",
    "SamplerMethod",
    "condition_origin",
    "sample_field",
    "sample_field_conditioned_origin",
    "spawn_replica_stream",
    "whiten",
]
