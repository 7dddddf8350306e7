"""Rescaled compound Poisson walks, stable limits and fractional operators."""

__version__ = "0.1.0"
