"""Connectivity queries on realised level sets."""

from .clusters import MODES, ClusterLabels, Mode, label_clusters
from .events import (
    ChemicalDistanceResult,
    arm_radius,
    chemical_distance,
    circuit_annulus,
    circuit_direct_search,
    circuit_in_annulus,
    one_arm_boundary,
    one_arm_bulk,
    one_arm_outer,
)

__all__ = [
    "MODES",
    "ChemicalDistanceResult",
    "ClusterLabels",
    "Mode",
    "arm_radius",
    "chemical_distance",
    "circuit_annulus",
    "circuit_direct_search",
    "circuit_in_annulus",
    "label_clusters",
    "one_arm_boundary",
    "one_arm_bulk",
    "one_arm_outer",
]
