"""Finite-precision p-adic engine for overconvergent modular symbols."""

__version__ = "0.1.0"
