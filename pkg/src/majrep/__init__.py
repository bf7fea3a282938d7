"""Exact-arithmetic workbench for Majorana representations of large
alternating groups: permutation machinery, invariant pair sets and pairing
tables, Specht-module projections, the nine 2-generated dihedral axial
algebras, first eigenmatrices for the relevant symmetric-group actions, and
the decomposition/intersection/dimension reports built on top of them.
"""

__all__ = [
    "perms", "exactlin", "invsets", "spechtmod", "nsalgebra", "spectral",
    "decomp", "data", "cli",
]

__version__ = "0.1.0"
