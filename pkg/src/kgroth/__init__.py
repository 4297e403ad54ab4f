"""Stable and dual stable Grothendieck polynomials, their Pieri rules, and
the Möbius-function description of the Pieri coefficients."""

__version__ = "0.1.0"
