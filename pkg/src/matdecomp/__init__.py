"""Matroid decompositions, boundary equivalences and their efficient refinements."""
__version__ = "0.1.0"
