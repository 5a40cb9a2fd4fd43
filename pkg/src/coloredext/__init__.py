"""Exact computations for colored exterior algebras, weighted boolean algebras
and their symmetric-function generating series."""

from .combinatorics import ColoredPermutation, WeakComposition, wc

__version__ = "0.1.0"
__all__ = ["ColoredPermutation", "WeakComposition", "wc", "__version__"]
