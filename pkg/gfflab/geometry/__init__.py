"""Lattice boxes, annuli, boundaries and adjacency."""

from .lattice import (
    NEAREST_STRUCTURE,
    STAR_STRUCTURE,
    Annulus,
    BoundarySets,
    BoxSpec,
    Site,
    SiteIndex,
    boundary_sets,
    enumerate_edges,
    lattice_graph,
    nearest_neighbors,
    star_neighbors,
)

__all__ = [
    "NEAREST_STRUCTURE",
    "STAR_STRUCTURE",
    "Annulus",
    "BoundarySets",
    "BoxSpec",
    "Site",
    "SiteIndex",
    "boundary_sets",
    "enumerate_edges",
    "lattice_graph",
    "nearest_neighbors",
    "star_neighbors",
]
