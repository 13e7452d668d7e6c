"""Finite field counterparts of the polynomial calculus for large degrees."""
