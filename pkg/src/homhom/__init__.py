"""Homomorphism and polymorphism homogeneity for finite oriented graphs."""

__version__ = "0.1.0"
