"""Exact linear and Hopf-theoretic machinery for supergroup pairs."""

__version__ = "0.1.0"
