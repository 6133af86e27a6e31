"""Generalized Markoff graphs mod p and their K_{3,3}-subdivision certificates."""

__version__ = "0.1.0"
