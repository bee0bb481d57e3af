"""Exact chromatic polynomials, Beraha numbers and transfer matrices for recursive graph families."""

__version__ = "0.1.0"
