"""Exact invariants of cone-like surface singularities from plane-curve data."""

__version__ = "0.1.0"
