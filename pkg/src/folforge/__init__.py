"""Exact construction and verification of codimension-one foliations on
projective space and the three-dimensional quadric."""

__version__ = "0.1.0"
