"""Exact computations in the cohomology rings of regular nilpotent Hessenberg varieties."""

__version__ = "0.1.0"
