"""Exact combinatorial models of cut-and-paste invariants, SKK classes,
and invertible two-dimensional TQFTs."""

__version__ = "0.1.0"
