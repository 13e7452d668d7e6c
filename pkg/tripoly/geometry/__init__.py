"""Exact planar geometry: orientation, order types, hulls, near-edges and their realization."""
