"""Exceptional-prime sieve for the mod-ell Galois images of genus-2 Jacobians."""
__version__ = "0.1.0"
