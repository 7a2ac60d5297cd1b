"""Conjugate-linear systems ``M z + N conj(z) = p``: reduction to complex
systems ``A z = b``, and complex solution of real SPD systems."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .conjsys import AffineSolutionSet, ConjugateSystem, SpanField, realify, residual, solve_via_realification
from .embedding import RealSystem, embed_solve, interlacing_report, solve_real_via_complex
from .invertible import analytic_reduction, block_matrix, has_unique_solution, spectra_match
from .numkernel import Tolerance
from .reduction import is_reducible, reduce, reduction_matrices, solve

__all__ = [
    "BACKEND",
    "AffineSolutionSet",
    "ConjugateSystem",
    "RealSystem",
    "SpanField",
    "Tolerance",
    "analytic_reduction",
    "block_matrix",
    "embed_solve",
    "has_unique_solution",
    "interlacing_report",
    "is_reducible",
    "realify",
    "reduce",
    "reduction_matrices",
    "residual",
    "solve",
    "solve_real_via_complex",
    "solve_via_realification",
    "spectra_match",
]
