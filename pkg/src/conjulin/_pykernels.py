"""Pure-Python (numpy-vectorized) fallback for the hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same
signature and semantics. Inputs are assumed already validated and
converted to contiguous ``complex128`` (or ``float64`` for
``row_reduce``) by the callers in :mod:`conjulin.numkernel`.
"""

import numpy as np


def mgs(B, thresholds):
    """Modified Gram-Schmidt over the columns of ``B``, two passes per column.

    Column ``j`` is kept when its norm after orthogonalization against the
    previously kept columns exceeds ``thresholds[j]``.

    Returns ``(Q, kept)`` where ``Q`` has one orthonormal column per kept
    index.
    """
    rows, cols = B.shape
    Q = np.zeros((rows, cols), dtype=np.complex128)
    kept = []
    k = 0
    for j in range(cols):
        v = B[:, j].copy()
        for _ in range(2):
            for i in range(k):
                v -= Q[:, i] * np.vdot(Q[:, i], v)
        nrm = np.linalg.norm(v)
        if nrm > thresholds[j]:
            Q[:, k] = v / nrm
            kept.append(j)
            k += 1
    return Q[:, :k].copy(), np.asarray(kept, dtype=np.int64)


def jacobi_eigvalsh(H, tol_abs, max_sweeps):
    """Cyclic complex Jacobi on a Hermitian matrix (a private copy is rotated).

    Iterates sweeps until the off-diagonal Frobenius norm is ``<= tol_abs``.
    Returns ``(diag, sweeps)``; ``sweeps`` is -1 when ``max_sweeps`` ran out.
    """
    A = np.array(H, dtype=np.complex128, copy=True)
    n = A.shape[0]
    for sweep in range(max_sweeps + 1):
        # summed directly: ||A||^2 - ||diag A||^2 cancels and stalls near 1e-8
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off <= tol_abs:
            return np.real(np.diag(A)).copy(), sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = A[p, q]
                mag = abs(b)
                if mag == 0.0:
                    continue
                app = A[p, p].real
                aqq = A[q, q].real
                phase = np.conj(b) / mag
                tau = (aqq - app) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # W = [[c, s], [-s*phase, c*phase]] on (p, q); A <- W^H A W
                colp = A[:, p].copy()
                colq = A[:, q]
                A[:, p] = c * colp - s * phase * colq
                A[:, q] = s * colp + c * phase * colq
                rowp = A[p, :].copy()
                rowq = A[q, :]
                A[p, :] = c * rowp - s * np.conj(phase) * rowq
                A[q, :] = s * rowp + c * np.conj(phase) * rowq
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
    return np.real(np.diag(A)).copy(), -1


def cholesky(H, pivot_tol):
    """Hermitian LL* factorization, column by column.

    Returns ``(L, fail)``; ``fail`` is the index of the first pivot
    ``<= pivot_tol`` or -1 on success.
    """
    n = H.shape[0]
    L = np.zeros((n, n), dtype=np.complex128)
    for j in range(n):
        row = L[j, :j]
        piv = H[j, j].real - np.vdot(row, row).real
        if not piv > pivot_tol:
            return L, j
        d = np.sqrt(piv)
        L[j, j] = d
        if j + 1 < n:
            L[j + 1:, j] = (H[j + 1:, j] - L[j + 1:, :j] @ np.conj(row)) / d
    return L, -1


def tri_solve(L, R):
    """Solve ``L L^* X = R`` for a lower-triangular ``L`` and 2-D ``R``."""
    n = L.shape[0]
    Y = np.array(R, dtype=np.complex128, copy=True)
    for i in range(n):
        if i:
            Y[i] -= L[i, :i] @ Y[:i]
        Y[i] /= L[i, i]
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            Y[i] -= np.conj(L[i + 1:, i]) @ Y[i + 1:]
        Y[i] /= np.conj(L[i, i])
    return Y


def row_reduce(A, tol_abs, pivot_cols=-1):
    """Reduced row echelon form with partial pivoting (works on a copy).

    Only the first ``pivot_cols`` columns (all when negative) may hold
    pivots; trailing columns are carried along as right-hand sides. A
    column whose largest remaining candidate pivot has magnitude
    ``<= tol_abs`` is treated as free. Returns ``(R, pivots)``.
    """
    R = np.array(A, copy=True)
    m, ncols = R.shape
    if pivot_cols < 0 or pivot_cols > ncols:
        pivot_cols = ncols
    pivots = []
    r = 0
    for c in range(pivot_cols):
        if r == m:
            break
        i = r + int(np.argmax(np.abs(R[r:, c])))
        if abs(R[i, c]) <= tol_abs:
            R[r:, c] = 0.0
            continue
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] /= R[r, c]
        f = R[:, c].copy()
        f[r] = 0.0
        R -= np.outer(f, R[r])
        R[:, c] = 0.0
        R[r, c] = 1.0
        pivots.append(c)
        r += 1
    return R, np.asarray(pivots, dtype=np.int64)
