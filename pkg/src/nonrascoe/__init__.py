"""Exact q-series toolkit for non-Rascoe partitions and the rank parity function sigma_2."""

__version__ = "0.1.0"
