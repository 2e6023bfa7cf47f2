"""Finite multiplicative hyperrings: hyperideal lattices, radicals and ideal classification."""
from .core import FiniteHyperring, from_tables, validate_axioms, zn_coset, zn_scaled
from .ideals import Hyperideal, enumerate_hyperideals, generated_ideal, jacobson, prime_radical
from .classify import find_violation, holds

__version__ = "0.1.0"

__all__ = ["FiniteHyperring", "Hyperideal", "enumerate_hyperideals", "find_violation",
           "from_tables", "generated_ideal", "holds", "jacobson", "prime_radical",
           "validate_axioms", "zn_coset", "zn_scaled"]
