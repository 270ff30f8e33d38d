"""Exact certification of S_n Galois groups and Clifford-cover lifting data."""

__version__ = "0.1.0"
