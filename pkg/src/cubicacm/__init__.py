"""Exact lattice computations for rank-two aCM bundles on a smooth cubic surface."""

__version__ = "0.1.0"
