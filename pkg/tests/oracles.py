"""Independent reference computations for the tests.

Nothing here calls into conjulin: exact rational elimination, textbook
loops, or numpy/LAPACK routines.
"""
from fractions import Fraction

import numpy as np


def exact_rank(rows):
    """Rank of a matrix with rational (or integer) entries, by exact elimination."""
    A = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(len(A)):
            if r != rank and A[r][c] != 0:
                f = A[r][c] / A[rank][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[rank])]
        rank += 1
    return rank


def gaussian_integer_realification(Z):
    """Real ``[[Re, -Im], [Im, Re]]`` form of a complex matrix with integer parts."""
    R = np.rint(Z.real).astype(int)
    I = np.rint(Z.imag).astype(int)
    return np.block([[R, -I], [I, R]]).tolist()


def svd_rank(A, rtol=1e-9):
    s = np.linalg.svd(A, compute_uv=False)
    return int(np.sum(s > rtol * max(s[0], 1e-300))) if s.size else 0


def real_cholesky_solve(A, b):
    """Textbook real Cholesky ``A = L L^T`` then two substitutions."""
    n = len(b)
    L = np.zeros((n, n))
    for i in range(n):
        for k in range(i + 1):
            s = sum(L[i, t] * L[k, t] for t in range(k))
            if i == k:
                L[i, i] = np.sqrt(A[i, i] - s)
            else:
                L[i, k] = (A[i, k] - s) / L[k, k]
    y = np.zeros(n)
    for i in range(n):
        y[i] = (b[i] - L[i, :i] @ y[:i]) / L[i, i]
    x = np.zeros(n)
    for i in reversed(range(n)):
        x[i] = (y[i] - L[i + 1:, i] @ x[i + 1:]) / L[i, i]
    return x


def inverse_2x2(H):
    (a, b), (c, d) = H
    det = a * d - b * c
    return np.array([[d, -b], [-c, a]]) / det


def realified(M, N):
    """Real matrix of ``(x, y) -> Re/Im of M(x+iy) + N(x-iy)``, built column by column."""
    n = M.shape[0]
    F = np.zeros((2 * n, 2 * n))
    for k in range(2 * n):
        z = np.zeros(n, dtype=complex)
        z[k % n] = 1 if k < n else 1j
        w = M @ z + N @ z.conj()
        F[:, k] = np.concatenate([w.real, w.imag])
    return F


def in_real_span(v, basis, tol):
    """Distance of a real vector from the real column span of ``basis``."""
    if basis.shape[1] == 0:
        return np.linalg.norm(v) <= tol
    coef = np.linalg.lstsq(basis, v, rcond=None)[0]
    return np.linalg.norm(basis @ coef - v) <= tol


def as_real(z):
    return np.concatenate([z.real, z.imag])


def same_affine_set(a, b, tol):
    """Whether two AffineSolutionSets describe the same real affine set.

    Same real dimension, each realified direction of one lies in the real
    span of the other, and the particular solutions differ by a direction.
    """
    Ka, Kb = a.real_span_basis(), b.real_span_basis()
    if a.real_dim != b.real_dim:
        return False
    if not all(in_real_span(Ka[:, i], Kb, tol) for i in range(Ka.shape[1])):
        return False
    if not all(in_real_span(Kb[:, i], Ka, tol) for i in range(Kb.shape[1])):
        return False
    return in_real_span(as_real(a.particular - b.particular), Ka, tol * (1 + np.linalg.norm(a.particular)))


def i_closed(kernel, tol):
    """Whether the real span of complex kernel vectors is closed under multiplication by i."""
    K = as_real(kernel) if kernel.shape[1] else np.zeros((2 * kernel.shape[0], 0))
    return all(in_real_span(as_real(1j * kernel[:, i]), K, tol) for i in range(kernel.shape[1]))
