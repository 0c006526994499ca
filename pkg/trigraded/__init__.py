"""Exact computations in tri-graded Artin-Tate R-motivic homotopy."""

__version__ = "0.1.0"
