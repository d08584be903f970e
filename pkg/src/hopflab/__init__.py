"""Exact computations with finite-dimensional coalgebras and Hopf algebras."""

__version__ = "0.1.0"
