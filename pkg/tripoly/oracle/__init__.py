"""Exhaustive reference counts of triangulations and joint triangulation polynomials."""
