"""Level-set percolation of the two-dimensional Gaussian free field."""

__version__ = "0.1.0"
