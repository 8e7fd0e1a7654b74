"""Exact computations for the restricted quantum supergroup of sl(2|1) at an odd
root of unity: PBW arithmetic, Hopf structure, the quantum double and its
universal R-matrix, the four-dimensional typical modules and the centralizer
algebras of their tensor powers."""

__version__ = "0.1.0"
