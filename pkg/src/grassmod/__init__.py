"""Exact workbench for permutation modules K[Gr(r, F_q^n)] under GL_n(F_q)."""

__version__ = "0.1.0"
