"""Green's functions, harmonic measure and Dirichlet solves for the killed walk."""

from .dirichlet import (
    HarmonicMass,
    HarmonicSolve,
    harmonic_extension,
    harmonic_mass,
    harmonic_measure,
    hitting_probability_annulus,
    solve_spd,
)
from .green import (
    GreenTable,
    check_dense_capacity,
    green_column,
    green_table,
    green_value,
    load_green_table,
    save_green_table,
    step_operator,
)
from .spectral import apply_green, kernel_eigenvalues, sine_matrix, sine_transform

__all__ = [
    "GreenTable",
    "HarmonicMass",
    "HarmonicSolve",
    "apply_green",
    "check_dense_capacity",
    "green_column",
    "green_table",
    "green_value",
    "harmonic_extension",
    "harmonic_mass",
    "harmonic_measure",
    "hitting_probability_annulus",
    "kernel_eigenvalues",
    "load_green_table",
    "save_green_table",
    "sine_matrix",
    "sine_transform",
    "solve_spd",
    "step_operator",
]
