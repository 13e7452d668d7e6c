"""Exact calculus of triangulation polynomials of near-edges."""

__version__ = "1.0.0"
