"""Exact GF(2) toolkit for a rank-2 bundle on P2 x P2 and the Enriques
surfaces cut out by its sections."""

__version__ = "0.1.0"
