"""Reduce ``M z + N conj(z) = p`` to a purely complex system ``A z = b``.

With ``P`` the orthogonal projector onto the complement of
``range([N; conj(M)])``, the system reduces exactly when
``z -> P (z; conj(z))`` is injective. The reduced equations are rows of
``P [M; conj(N)] z = P [p; conj(p)]`` chosen to span its row space.
"""

from dataclasses import dataclass

import numpy as np

from .conjsys import AffineSolutionSet, ConjugateSystem, SpanField, residual, solve_via_realification
from .errors import DimensionMismatch, NotReducible
from .numkernel import (
    DEFAULT_TOL,
    affine_solve,
    as_complex_matrix,
    as_complex_vector,
    orthogonal_complement_projector,
    real_kernel_basis,
    row_space_generators,
)


@dataclass(frozen=True)
class ReductionCertificate:
    U: np.ndarray
    V: np.ndarray
    row_set: tuple
    projector: np.ndarray


@dataclass(frozen=True)
class ReducedSystem:
    A: np.ndarray
    b: np.ndarray


@dataclass
class SolutionReport:
    reducible: bool
    solutions: AffineSolutionSet
    verification_residual: float
    reduced: ReducedSystem | None = None
    certificate: ReductionCertificate | None = None


def _square_pair(M, N):
    M = as_complex_matrix(M, "M")
    N = as_complex_matrix(N, "N")
    if M.shape[0] != M.shape[1] or N.shape != M.shape:
        raise DimensionMismatch(f"M and N must be square of equal size, got {M.shape} and {N.shape}")
    return M, N


def stacked_range_matrix(M, N):
    """The ``2n x n`` stack ``[N; conj(M)]``."""
    M, N = _square_pair(M, N)
    return np.vstack([N, M.conj()])


def injectivity_matrix(P):
    """Real ``4n x 2n`` matrix of ``(x, y) -> P (x + iy; x - iy)``, split into Re/Im rows."""
    n = P.shape[0] // 2
    P11, P12 = P[:n, :n], P[:n, n:]
    P21, P22 = P[n:, :n], P[n:, n:]
    return np.block([
        [P11.real + P12.real, P12.imag - P11.imag],
        [P21.real + P22.real, P22.imag - P21.imag],
        [P11.imag + P12.imag, P11.real - P12.real],
        [P21.imag + P22.imag, P21.real - P22.real],
    ])


def is_reducible(M, N, tol=DEFAULT_TOL):
    """Whether the homogeneous solution set is a complex vector space."""
    P = orthogonal_complement_projector(stacked_range_matrix(M, N), tol)
    return real_kernel_basis(injectivity_matrix(P), tol).shape[1] == 0


def reduction_matrices(M, N, tol=DEFAULT_TOL):
    """Build ``(U, V)`` such that ``(U M + V conj(N)) z = U p + V conj(p)`` is equivalent
    to the original system for every ``p`` in its range.

    Raises NotReducible when no such pair exists.
    """
    M, N = _square_pair(M, N)
    n = M.shape[0]
    P = orthogonal_complement_projector(np.vstack([N, M.conj()]), tol)
    if real_kernel_basis(injectivity_matrix(P), tol).shape[1] != 0:
        raise NotReducible("z -> P(z; conj z) is not injective")
    U_hat, V_hat = P[:, :n], P[:, n:]
    G = U_hat @ M + V_hat @ N.conj()
    rows = row_space_generators(G, n, tol)
    return ReductionCertificate(
        U=U_hat[rows].copy(), V=V_hat[rows].copy(), row_set=tuple(rows), projector=P
    )


def reduce(sys, cert):
    return ReducedSystem(
        A=cert.U @ sys.M + cert.V @ sys.N.conj(),
        b=cert.U @ sys.p + cert.V @ sys.p.conj(),
    )


def solve_complex(A, b, tol=DEFAULT_TOL):
    """Solve ``A z = b`` over C; the kernel is a complex basis."""
    A = as_complex_matrix(A, "A")
    b = as_complex_vector(b, "b")
    feasible, z, kernel, res = affine_solve(A, b, tol)
    return AffineSolutionSet(
        feasible=bool(feasible),
        particular=z if feasible else None,
        kernel_basis=kernel,
        span_field=SpanField.COMPLEX,
        residual=res,
    )


def solve(sys, tol=DEFAULT_TOL):
    """Solve a conjugate-linear system, through the complex reduction when possible.

    A reducible system is reduced, one solution of the reduced system is
    checked against the original, and the verdict (feasible with a complex
    affine solution set, or infeasible) follows from that single check.
    Irreducible systems are solved on the realified form and reported with
    a real span.
    """
    if not isinstance(sys, ConjugateSystem):
        sys = ConjugateSystem(*sys)
    if not is_reducible(sys.M, sys.N, tol):
        sol = solve_via_realification(sys, tol)
        return SolutionReport(
            reducible=False,
            solutions=sol,
            verification_residual=sol.residual if sol.feasible else 0.0,
        )
    cert = reduction_matrices(sys.M, sys.N, tol)
    reduced = reduce(sys, cert)
    sol = solve_complex(reduced.A, reduced.b, tol)
    verification = 0.0
    if sol.feasible:
        verification = residual(sys, sol.particular)
        if verification > tol.residual_tol * (1.0 + np.linalg.norm(sys.p)):
            sol = AffineSolutionSet(False, None, sol.kernel_basis[:, :0], SpanField.COMPLEX, sol.residual)
    else:
        sol = AffineSolutionSet(False, None, sol.kernel_basis[:, :0], SpanField.COMPLEX, sol.residual)
    return SolutionReport(
        reducible=True,
        solutions=sol,
        verification_residual=verification,
        reduced=reduced,
        certificate=cert,
    )
