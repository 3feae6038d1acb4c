"""Metric-graph level-set connectivity via per-edge bridge crossings."""

from .overlay import (
    CLOSED,
    DEFAULT_KAPPA,
    EdgeOverlay,
    build_overlay,
    crossing_probability,
    draw_edge_uniforms,
    metric_connects,
)

__all__ = [
    "CLOSED",
    "DEFAULT_KAPPA",
    "EdgeOverlay",
    "build_overlay",
    "crossing_probability",
    "draw_edge_uniforms",
    "metric_connects",
]
