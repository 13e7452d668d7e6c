"""Near-edge expressions and their joint triangulation polynomials."""
