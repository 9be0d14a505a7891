"""
flagslice: Schubert varieties of complementary dimension meeting base cycles
in flag manifolds, for the three real forms of SL(n,C), with exact-arithmetic
geometric cross-checks.
"""

from . import geometry, homology, permutations, slmh, slnr, supq
from .gaussian import GQ, GaussianRational
from .geometry import FlagMatrix, FormSpec
from .permutations import (classify_symmetry, flag_manifold_dimension,
                           format_word, inversion_length,
                           minimal_coset_representative, parse_dims,
                           parse_word)

__all__ = [
    "GQ",
    "GaussianRational",
    "FlagMatrix",
    "FormSpec",
    "classify_symmetry",
    "flag_manifold_dimension",
    "format_word",
    "inversion_length",
    "minimal_coset_representative",
    "parse_dims",
    "parse_word",
    "geometry",
    "homology",
    "permutations",
    "slmh",
    "slnr",
    "supq",
]

__version__ = "0.1.0"
