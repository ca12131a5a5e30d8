"""Exact computations with Hopf monoids in species and Boolean transforms of sequences."""

__version__ = "0.1.0"
