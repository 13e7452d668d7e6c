"""Exact polynomial arithmetic and the basis transforms between triangulation polynomials."""
