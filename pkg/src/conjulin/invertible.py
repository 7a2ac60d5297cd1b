"""Uniquely solvable conjugate-linear systems.

``M z + N conj(z) = p`` has exactly one solution for every ``p`` iff the
block matrix ``[[M, N], [conj(N), conj(M)]]`` is invertible. In that case
closed-form reduction matrices exist when ``M`` (or both ``M`` and ``N``)
is invertible.
"""

import numpy as np

from .conjsys import ConjugateSystem, realify
from .errors import DimensionMismatch, NotHermitian, SingularM
from .numkernel import DEFAULT_TOL, as_complex_matrix, hermitian_eigenvalues, inverse, numerical_rank

STANDARD = "standard"
INVERSE_N = "inverse-n"


def _square_pair(M, N):
    M = as_complex_matrix(M, "M")
    N = as_complex_matrix(N, "N")
    if M.shape[0] != M.shape[1] or N.shape != M.shape:
        raise DimensionMismatch(f"M and N must be square of equal size, got {M.shape} and {N.shape}")
    return M, N


def block_matrix(M, N):
    """``[[M, N], [conj(N), conj(M)]]``."""
    M, N = _square_pair(M, N)
    return np.block([[M, N], [N.conj(), M.conj()]])


def has_unique_solution(M, N, tol=DEFAULT_TOL):
    """True iff the realified ``2n x 2n`` matrix has full rank."""
    M, N = _square_pair(M, N)
    n = M.shape[0]
    F, _ = realify(ConjugateSystem(M, N, np.zeros(n)))
    return numerical_rank(F, tol) == 2 * n


def analytic_reduction(M, N, tol=DEFAULT_TOL, variant=STANDARD):
    """Closed-form ``(U, V)`` with ``U N + V conj(M) = 0``.

    ``variant="standard"`` gives ``U = I, V = -N conj(M)^-1`` and needs only
    ``M`` invertible; ``variant="inverse-n"`` gives
    ``U = N^-1, V = -conj(M)^-1`` and needs ``N`` invertible too.
    """
    M, N = _square_pair(M, N)
    n = M.shape[0]
    Mbar_inv = inverse(M.conj(), tol)
    if Mbar_inv is None:
        raise SingularM("M is numerically singular; use the projector reduction instead")
    if variant == STANDARD:
        return np.eye(n, dtype=np.complex128), -N @ Mbar_inv
    if variant == INVERSE_N:
        N_inv = inverse(N, tol)
        if N_inv is None:
            raise SingularM("variant 'inverse-n' needs N invertible")
        return N_inv, -Mbar_inv
    raise ValueError(f"unknown variant {variant!r}")


def solve_unique(sys, tol=DEFAULT_TOL, variant=STANDARD):
    """The unique solution through the closed-form reduction."""
    U, V = analytic_reduction(sys.M, sys.N, tol, variant)
    A = U @ sys.M + V @ sys.N.conj()
    b = U @ sys.p + V @ sys.p.conj()
    A_inv = inverse(A, tol)
    if A_inv is None:
        raise SingularM("reduced matrix is singular; the system is not uniquely solvable")
    return A_inv @ b


def spectra_match(M, N, tol=DEFAULT_TOL):
    """Whether the Hermitian block matrix and its real form ``[[B, C], [C^T, D]]``
    share the same spectrum.

    Requires ``M`` Hermitian and ``N`` symmetric.
    """
    M, N = _square_pair(M, N)
    n = M.shape[0]
    H = block_matrix(M, N)
    scale = np.linalg.norm(H)
    if np.linalg.norm(H - H.conj().T) > tol.residual_tol * max(scale, 1.0):
        raise NotHermitian("block matrix is not Hermitian (need M Hermitian, N symmetric)")
    F, _ = realify(ConjugateSystem(M, N, np.zeros(n)))
    eig_block = hermitian_eigenvalues(H, tol)
    eig_real = hermitian_eigenvalues(F, tol)
    return bool(np.max(np.abs(eig_block - eig_real), initial=0.0) <= 1e-8 * max(scale, 1.0))
