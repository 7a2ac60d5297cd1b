"""Solve a real symmetric positive-definite system through a complex one.

A ``2n x 2n`` real system ``A x = b`` with ``A = [[B, C], [C^T, D]]`` is the
conjugate-linear system ``M z + N conj(z) = p`` with

    M = (B + D - i (C - C^T)) / 2     (Hermitian positive definite)
    N = (B - D + i (C + C^T)) / 2     (complex symmetric)
    z = x[:n] + i x[n:],  p = b[:n] + i b[n:]

which in turn is the Hermitian positive-definite complex system
``S z = q`` with ``S = M - N conj(M)^-1 conj(N)`` and
``q = p - N conj(M)^-1 conj(p)``. Both ``conj(M)`` and ``S`` are Cholesky
factored; their spectra interlace the spectrum of ``A``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotPositiveDefinite, OddDimension
from .numkernel import (
    DEFAULT_TOL,
    as_real_matrix,
    cholesky,
    cholesky_solve,
    hermitian_eigenvalues,
)


@dataclass(frozen=True)
class RealSystem:
    A: np.ndarray
    b: np.ndarray
    padded: bool = False

    def __post_init__(self):
        A = as_real_matrix(self.A, "A")
        b = np.asarray(self.b, dtype=np.float64).reshape(-1)
        if A.shape[0] != A.shape[1]:
            raise DimensionMismatch(f"A must be square, got {A.shape}")
        if b.shape[0] != A.shape[0]:
            raise DimensionMismatch(f"b has length {b.shape[0]}, expected {A.shape[0]}")
        if not np.all(np.isfinite(b)):
            raise ValueError("b has non-finite entries")
        if np.linalg.norm(A - A.T) > 1e-12 * np.linalg.norm(A):
            raise ValueError("A is not symmetric")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def m(self):
        return self.A.shape[0]


@dataclass(frozen=True)
class EmbeddedSystem:
    M: np.ndarray
    N: np.ndarray
    p: np.ndarray
    padded: bool = False

    @property
    def n(self):
        return self.M.shape[0]


@dataclass
class SpectralReport:
    eig_A: np.ndarray
    eig_M: np.ndarray
    eig_S: np.ndarray
    cauchy_ok: bool
    schur_ok: bool
    cond_A: float
    cond_M: float
    cond_S: float
    padded: bool = False

    @property
    def cond_M_le_A(self):
        return self.cond_M <= self.cond_A * (1 + 1e-8)

    @property
    def cond_S_le_A(self):
        return self.cond_S <= self.cond_A * (1 + 1e-8)


@dataclass
class EmbeddingSolution:
    x: np.ndarray
    z: np.ndarray
    S: np.ndarray
    q: np.ndarray
    residual: float


def pad_to_even(sys):
    """Append a unit diagonal entry when ``m`` is odd; the extra unknown solves to 0."""
    if sys.m % 2 == 0:
        return sys
    m = sys.m
    A = np.zeros((m + 1, m + 1))
    A[:m, :m] = sys.A
    A[m, m] = 1.0
    return RealSystem(A, np.append(sys.b, 0.0), padded=True)


def complexify(sys):
    if sys.m % 2:
        raise OddDimension(f"m = {sys.m} is odd; pad_to_even first")
    n = sys.m // 2
    B, C = sys.A[:n, :n], sys.A[:n, n:]
    D = sys.A[n:, n:]
    M = (B + D - 1j * (C - C.T)) / 2
    N = (B - D + 1j * (C + C.T)) / 2
    p = sys.b[:n] + 1j * sys.b[n:]
    return EmbeddedSystem(M=M, N=N, p=p, padded=sys.padded)


def _schur(emb, tol):
    L = cholesky(emb.M.conj(), tol)
    # conj(M)^-1 [conj(N) | conj(p)] in one pass of triangular solves
    X = cholesky_solve(L, np.column_stack([emb.N.conj(), emb.p.conj()]), tol)
    S = emb.M - emb.N @ X[:, :-1]
    q = emb.p - emb.N @ X[:, -1]
    return 0.5 * (S + S.conj().T), q


def schur_system(emb, tol=DEFAULT_TOL):
    """``(S, q)`` of the Hermitian complex system equivalent to ``emb``."""
    return _schur(emb, tol)


def embed_solve(sys, tol=DEFAULT_TOL):
    """Full pipeline, keeping the intermediate complex system."""
    m = sys.m
    padded = pad_to_even(sys)
    emb = complexify(padded)
    S, q = _schur(emb, tol)
    z = cholesky_solve(cholesky(S, tol), q, tol)
    x = np.concatenate([z.real, z.imag])[:m]
    res = float(np.linalg.norm(sys.A @ x - sys.b))
    return EmbeddingSolution(x=x, z=z, S=S, q=q, residual=res)


def solve_real_via_complex(sys, tol=DEFAULT_TOL):
    """Solve ``A x = b`` (``A`` SPD) through the Schur-complement complex system."""
    return embed_solve(sys, tol).x


def _interlaces(inner, outer, slack):
    n = len(inner)
    return bool(np.all(outer[:n] - slack <= inner) and np.all(inner <= outer[n:] + slack))


def interlacing_report(sys, tol=DEFAULT_TOL):
    """Spectra of ``A``, ``M`` and ``S``, both interlacing checks and condition numbers.

    For odd ``m`` everything refers to the padded matrix, whose spectrum is
    that of ``A`` plus an extra eigenvalue 1.
    """
    padded = pad_to_even(sys)
    eig_A = hermitian_eigenvalues(padded.A, tol)
    if eig_A[0] <= 0:
        raise NotPositiveDefinite(f"smallest eigenvalue of A is {eig_A[0]:.3e}")
    emb = complexify(padded)
    S, _ = _schur(emb, tol)
    eig_M = hermitian_eigenvalues(emb.M, tol)
    eig_S = hermitian_eigenvalues(S, tol)
    slack = 1e-8 * eig_A[-1]
    return SpectralReport(
        eig_A=eig_A,
        eig_M=eig_M,
        eig_S=eig_S,
        cauchy_ok=_interlaces(eig_M, eig_A, slack),
        schur_ok=_interlaces(eig_S, eig_A, slack),
        cond_A=float(eig_A[-1] / eig_A[0]),
        cond_M=float(eig_M[-1] / eig_M[0]),
        cond_S=float(eig_S[-1] / eig_S[0]),
        padded=padded.padded,
    )
