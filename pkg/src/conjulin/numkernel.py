"""Dense complex/real matrix kernels.

Matrices are plain numpy arrays: ``complex128`` for complex matrices,
``float64`` for real ones. Hot loops run in the compiled core when it is
available (see :mod:`conjulin._backend`).
"""

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import (
    ConvergenceError,
    DimensionMismatch,
    NotHermitian,
    NotPositiveDefinite,
    RankExceedsK,
    SingularTriangular,
)

MAX_JACOBI_SWEEPS = 100


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds shared by every operation.

    rank_tol drives rank decisions, residual_tol feasibility and
    verification checks, eig_tol the Jacobi stopping rule (relative to
    the Frobenius norm).
    """

    rank_tol: float = 1e-10
    residual_tol: float = 1e-8
    eig_tol: float = 1e-12

    def __post_init__(self):
        for name in ("rank_tol", "residual_tol", "eig_tol"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")


DEFAULT_TOL = Tolerance()


def as_complex_matrix(a, name="matrix"):
    a = np.asarray(a)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got shape {a.shape}")
    a = np.ascontiguousarray(a, dtype=np.complex128)
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} has non-finite entries")
    return a


def as_complex_vector(v, name="vector"):
    v = np.asarray(v, dtype=np.complex128)
    if v.ndim == 2 and 1 in v.shape:
        v = v.reshape(-1)
    if v.ndim != 1:
        raise DimensionMismatch(f"{name} must be 1-D, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} has non-finite entries")
    return np.ascontiguousarray(v)


def as_real_matrix(a, name="matrix"):
    a = np.asarray(a)
    if np.iscomplexobj(a):
        if np.any(a.imag != 0):
            raise ValueError(f"{name} must be real")
        a = a.real
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got shape {a.shape}")
    a = np.ascontiguousarray(a, dtype=np.float64)
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} has non-finite entries")
    return a


def _require_square(a, name):
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {a.shape}")


def orthonormal_range_basis(B, tol=DEFAULT_TOL):
    """Orthonormal basis of the column space of ``B``.

    Modified Gram-Schmidt with one re-orthogonalization pass. A column is
    dropped when its norm after projection is at most
    ``rank_tol * (1 + ||b_j||)``, so the number of returned columns is the
    numerical rank of ``B``.
    """
    B = as_complex_matrix(B, "B")
    if B.shape[0] == 0:
        raise DimensionMismatch("B must have at least one row")
    thresholds = tol.rank_tol * (1.0 + np.linalg.norm(B, axis=0))
    Q, _ = kernels.mgs(B, np.ascontiguousarray(thresholds))
    return Q


def orthogonal_complement_projector(B, tol=DEFAULT_TOL):
    """``I - Q Q^*`` with ``Q`` an orthonormal basis of ``range(B)``."""
    Q = orthonormal_range_basis(B, tol)
    P = np.eye(Q.shape[0], dtype=np.complex128) - Q @ Q.conj().T
    return 0.5 * (P + P.conj().T)


def _pivot_tol(a, tol):
    return tol.rank_tol * max(np.linalg.norm(a), np.finfo(float).tiny)


def _null_vectors(R, pivots, ncols, dtype):
    free = [c for c in range(ncols) if c not in set(pivots.tolist())]
    V = np.zeros((ncols, len(free)), dtype=dtype)
    for j, f in enumerate(free):
        V[f, j] = 1.0
        V[pivots, j] = -R[: len(pivots), f]
    return V


def _orthonormalize(V, tol):
    if V.shape[1] == 0:
        return V
    Q, _ = kernels.mgs(np.ascontiguousarray(V, dtype=np.complex128),
                       np.full(V.shape[1], tol.rank_tol))
    return Q


def numerical_rank(A, tol=DEFAULT_TOL):
    """Rank by row reduction with partial pivoting."""
    A = np.asarray(A)
    if A.size == 0:
        return 0
    A = np.ascontiguousarray(A, dtype=np.complex128 if np.iscomplexobj(A) else np.float64)
    _, pivots = kernels.row_reduce(A, _pivot_tol(A, tol))
    return len(pivots)


def real_kernel_basis(F, tol=DEFAULT_TOL):
    """Orthonormal basis of the null space of a real matrix.

    Returned as the columns of a ``(cols, k)`` array; ``k == 0`` when
    ``F`` has full column rank.
    """
    F = as_real_matrix(F, "F")
    ncols = F.shape[1]
    if F.shape[0] == 0:
        return np.eye(ncols)
    R, pivots = kernels.row_reduce(F, _pivot_tol(F, tol))
    V = _null_vectors(R, pivots, ncols, np.float64)
    return np.ascontiguousarray(_orthonormalize(V, tol).real)


def complex_kernel_basis(A, tol=DEFAULT_TOL):
    """Orthonormal basis (over C) of the null space of a complex matrix."""
    A = as_complex_matrix(A, "A")
    R, pivots = kernels.row_reduce(A, _pivot_tol(A, tol))
    return _orthonormalize(_null_vectors(R, pivots, A.shape[1], np.complex128), tol)


def _pivot_solution(F, g, tol_abs):
    n = F.shape[1]
    aug = np.ascontiguousarray(np.column_stack([F, g]))
    R, pivots = kernels.row_reduce(aug, tol_abs, n)
    x = np.zeros(n, dtype=F.dtype)
    x[pivots] = R[: len(pivots), n]
    return x, R, pivots


def affine_solve(F, g, tol=DEFAULT_TOL):
    """Solve ``F x = g`` by row reduction with partial pivoting.

    Works over R or C depending on the dtype of ``F``. The particular
    solution has its free variables at zero and receives one refinement
    step. Returns ``(feasible, x, kernel, residual)``; ``kernel`` holds an
    orthonormal null-space basis in its columns.
    """
    dtype = np.complex128 if (np.iscomplexobj(F) or np.iscomplexobj(g)) else np.float64
    F = np.ascontiguousarray(F, dtype=dtype)
    g = np.asarray(g, dtype=dtype).reshape(-1)
    if F.shape[0] != g.shape[0]:
        raise DimensionMismatch(f"matrix has {F.shape[0]} rows, right-hand side {g.shape[0]}")
    tol_abs = _pivot_tol(F, tol)
    x, R, pivots = _pivot_solution(F, g, tol_abs)
    correction, _, _ = _pivot_solution(F, F @ x - g, tol_abs)
    x = x - correction
    residual = float(np.linalg.norm(F @ x - g))
    feasible = bool(residual <= tol.residual_tol * (1.0 + np.linalg.norm(g)))
    kernel = _orthonormalize(_null_vectors(R, pivots, F.shape[1], dtype), tol)
    if dtype == np.float64:
        kernel = np.ascontiguousarray(kernel.real)
    return feasible, x, kernel, residual


def inverse(A, tol=DEFAULT_TOL):
    """Inverse by Gauss-Jordan elimination; ``None`` when numerically singular."""
    A = as_complex_matrix(A, "A")
    _require_square(A, "A")
    n = A.shape[0]
    aug = np.ascontiguousarray(np.hstack([A, np.eye(n, dtype=np.complex128)]))
    R, pivots = kernels.row_reduce(aug, _pivot_tol(A, tol), n)
    if len(pivots) < n:
        return None
    return R[:, n:].copy()


def _hermitian_part(H, tol):
    H = as_complex_matrix(H, "H")
    _require_square(H, "H")
    scale = np.linalg.norm(H)
    skew = np.linalg.norm(H - H.conj().T)
    if skew > tol.residual_tol * scale:
        raise NotHermitian(f"||H - H*||_F = {skew:.3e} exceeds {tol.residual_tol:.1e} * ||H||_F")
    return np.ascontiguousarray(0.5 * (H + H.conj().T)), scale


def hermitian_eigenvalues(H, tol=DEFAULT_TOL):
    """Eigenvalues of a Hermitian matrix in ascending order (cyclic Jacobi)."""
    H, scale = _hermitian_part(H, tol)
    if H.shape[0] == 0:
        return np.zeros(0)
    w, sweeps = kernels.jacobi_eigvalsh(H, tol.eig_tol * scale, MAX_JACOBI_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi did not converge in {MAX_JACOBI_SWEEPS} sweeps")
    return np.sort(w)


def cholesky(H, tol=DEFAULT_TOL):
    """Lower-triangular ``L`` with positive real diagonal and ``L L^* = H``."""
    H, scale = _hermitian_part(H, tol)
    L, fail = kernels.cholesky(H, tol.rank_tol * scale)
    if fail >= 0:
        raise NotPositiveDefinite(f"non-positive pivot at index {fail}")
    return L


def cholesky_solve(L, rhs, tol=DEFAULT_TOL):
    """Solve ``L L^* x = rhs`` by forward then back substitution.

    ``rhs`` may be a vector or a matrix of right-hand sides (columns).
    """
    L = as_complex_matrix(L, "L")
    _require_square(L, "L")
    if np.any(np.abs(np.diag(L)) <= tol.rank_tol):
        raise SingularTriangular("triangular factor has a (numerically) zero diagonal entry")
    rhs = np.asarray(rhs, dtype=np.complex128)
    vector = rhs.ndim == 1
    R = rhs.reshape(-1, 1) if vector else rhs
    if R.shape[0] != L.shape[0]:
        raise DimensionMismatch(f"factor is {L.shape[0]}x{L.shape[0]}, right-hand side has {R.shape[0]} rows")
    X = kernels.tri_solve(L, np.ascontiguousarray(R))
    return X[:, 0] if vector else X


def condition_number(H, tol=DEFAULT_TOL):
    """Ratio of the largest to the smallest eigenvalue of a Hermitian PD matrix."""
    w = hermitian_eigenvalues(H, tol)
    if w[0] <= 0:
        raise NotPositiveDefinite(f"smallest eigenvalue {w[0]:.3e} is not positive")
    return float(w[-1] / w[0])


def row_space_generators(G, k, tol=DEFAULT_TOL):
    """Indices (0-based, ascending) of at most ``k`` rows spanning the row space.

    Rows are scanned in order and kept when their component orthogonal to
    the rows already kept is larger than ``rank_tol * ||G||_F``. The set is
    then padded with the smallest unused indices up to ``k`` rows.
    """
    G = as_complex_matrix(G, "G")
    thresholds = np.full(G.shape[0], tol.rank_tol * np.linalg.norm(G))
    _, kept = kernels.mgs(np.ascontiguousarray(G.T), thresholds)
    if len(kept) > k:
        raise RankExceedsK(f"row space has dimension {len(kept)} > {k}")
    chosen = set(kept.tolist())
    for i in range(G.shape[0]):
        if len(chosen) >= k:
            break
        chosen.add(i)
    return sorted(chosen)
