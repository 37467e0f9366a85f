"""Spectra of Kepler-Coulomb rigid-body models on the sphere and pseudosphere."""
__version__ = "0.1.0"
