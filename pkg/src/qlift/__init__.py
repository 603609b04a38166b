"""Exact computations for liftings of rank-two Nichols algebras of Cartan type A2 and B2."""

__version__ = "0.1.0"
