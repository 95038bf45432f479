"""Polynomial invariants of hypergraphs and related Hopf monoids, in exact arithmetic."""
__version__ = "0.1.0"
