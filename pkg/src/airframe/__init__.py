"""Rearrangement groups of colored edge-replacement systems,
specialized to the Airplane."""

__version__ = "0.1.0"
