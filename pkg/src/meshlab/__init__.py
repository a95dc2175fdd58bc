"""Mesh patterns over permutations, the antirecord involutions Phi and Psi,
and exact series checks for the statistics they transport."""

from .perm import (Permutation, PermutationError, EnumerationCapError, parse_perm, from_word,
                   inverse, reverse, complement, word_complement, all_statistics, statistic,
                   arec_positions, iter_all, unrank, rank)
from .mesh import (MeshPattern, PatternParseError, parse_pattern, occurrences, count_occurrences,
                   count_many, is_occurrence, transform_pattern, catalog, CATALOG)
from .involutions import Phi, Psi, InvolutionTrace, phi1, phi2, psi1, psi2, phi_step, psi_step
from .poly import MultiPoly, TruncatedSeries
from .equidist import joint_distribution, equidistributed, verify_bijection, table_suite

__version__ = "0.1.0"

__all__ = [
    "Permutation", "PermutationError", "EnumerationCapError", "parse_perm", "from_word",
    "inverse", "reverse", "complement", "word_complement", "all_statistics", "statistic",
    "arec_positions", "iter_all", "unrank", "rank",
    "MeshPattern", "PatternParseError", "parse_pattern", "occurrences", "count_occurrences",
    "count_many", "is_occurrence", "transform_pattern", "catalog", "CATALOG",
    "Phi", "Psi", "InvolutionTrace", "phi1", "phi2", "psi1", "psi2", "phi_step", "psi_step",
    "MultiPoly", "TruncatedSeries",
    "joint_distribution", "equidistributed", "verify_bijection", "table_suite",
]
