"""Combinatorics and exact linear algebra for GSp(2g) and its dual GSpin(2g+1)."""

__version__ = "0.1.0"
