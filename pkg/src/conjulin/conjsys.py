"""Conjugate-linear systems ``M z + N conj(z) = p`` and their real form.

Writing ``z = x + i y`` turns the system into a real ``2n x 2n`` system in
``(x, y)``. That realification is the independent oracle the reduction
machinery is checked against.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import DimensionMismatch
from .numkernel import DEFAULT_TOL, affine_solve, as_complex_matrix, as_complex_vector


class SpanField(str, Enum):
    REAL = "REAL"
    COMPLEX = "COMPLEX"


@dataclass(frozen=True)
class ConjugateSystem:
    M: np.ndarray
    N: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        M = as_complex_matrix(self.M, "M")
        N = as_complex_matrix(self.N, "N")
        p = as_complex_vector(self.p, "p")
        if M.shape[0] != M.shape[1] or N.shape != M.shape:
            raise DimensionMismatch(f"M and N must be square of equal size, got {M.shape} and {N.shape}")
        if p.shape[0] != M.shape[0]:
            raise DimensionMismatch(f"p has length {p.shape[0]}, expected {M.shape[0]}")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "p", p)

    @property
    def n(self):
        return self.M.shape[0]


@dataclass
class AffineSolutionSet:
    """``particular + span(kernel columns)`` over ``span_field``.

    ``particular`` is ``None`` when the system is infeasible.
    """

    feasible: bool
    particular: np.ndarray | None
    kernel_basis: np.ndarray
    span_field: SpanField
    residual: float = field(default=0.0)

    @property
    def kernel_dim(self):
        return self.kernel_basis.shape[1]

    @property
    def real_dim(self):
        """Dimension of the solution set as a real affine space."""
        k = self.kernel_dim
        return 2 * k if self.span_field is SpanField.COMPLEX else k

    def real_span_basis(self):
        """Kernel directions as realified ``(Re; Im)`` columns spanning over R."""
        V = self.kernel_basis
        if self.span_field is SpanField.COMPLEX:
            V = np.hstack([V, 1j * V])
        return np.vstack([V.real, V.imag])


def realify(sys):
    """Real matrix ``F`` and vector ``g`` with ``F (x; y) = g`` iff ``x + i y`` solves ``sys``."""
    M, N, p = sys.M, sys.N, sys.p
    F = np.block([
        [M.real + N.real, N.imag - M.imag],
        [M.imag + N.imag, M.real - N.real],
    ])
    g = np.concatenate([p.real, p.imag])
    return F, g


def residual(sys, z):
    """``||M z + N conj(z) - p||_2``."""
    z = as_complex_vector(z, "z")
    if z.shape[0] != sys.n:
        raise DimensionMismatch(f"z has length {z.shape[0]}, expected {sys.n}")
    return float(np.linalg.norm(sys.M @ z + sys.N @ z.conj() - sys.p))


def _complexify(v, n):
    return v[:n] + 1j * v[n:]


def solve_via_realification(sys, tol=DEFAULT_TOL):
    """Solve the realified system by row reduction.

    The span field is always reported as REAL; this path does not try to
    classify the solution set.
    """
    n = sys.n
    F, g = realify(sys)
    feasible, x, kernel, _ = affine_solve(F, g, tol)
    z = _complexify(x, n)
    res = residual(sys, z)
    feasible = bool(feasible and res <= tol.residual_tol * (1.0 + np.linalg.norm(sys.p)))
    return AffineSolutionSet(
        feasible=feasible,
        particular=z if feasible else None,
        kernel_basis=_complexify(kernel, n).reshape(n, -1),
        span_field=SpanField.REAL,
        residual=res,
    )


def range_membership(sys, tol=DEFAULT_TOL):
    """True iff ``p`` lies in the range of ``z -> M z + N conj(z)``.

    Decided from the least-squares residual of the realified system.
    """
    F, g = realify(sys)
    x = np.linalg.lstsq(F, g, rcond=None)[0]
    return bool(np.linalg.norm(F @ x - g) <= tol.residual_tol * (1.0 + np.linalg.norm(sys.p)))
