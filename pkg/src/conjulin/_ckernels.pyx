# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Mirrors ``_pykernels`` function for function."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs, hypot

cnp.import_array()

ctypedef fused scalar:
    double
    double complex


cdef inline double _abs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


cdef inline double complex _conj(double complex z) nogil:
    return z.real - 1j * z.imag


cdef inline double _mag(scalar x) nogil:
    if scalar is double:
        return fabs(x)
    else:
        return sqrt(x.real * x.real + x.imag * x.imag)


def mgs(double complex[:, ::1] B, double[::1] thresholds):
    cdef Py_ssize_t rows = B.shape[0], cols = B.shape[1]
    cdef Py_ssize_t i, j, r, k = 0, sweep
    cdef double complex dot
    cdef double nrm
    Qt_arr = np.zeros((cols, rows), dtype=np.complex128)
    cdef double complex[:, ::1] Qt = Qt_arr
    v_arr = np.empty(rows, dtype=np.complex128)
    cdef double complex[::1] v = v_arr
    kept = []
    for j in range(cols):
        for r in range(rows):
            v[r] = B[r, j]
        for sweep in range(2):
            for i in range(k):
                dot = 0
                for r in range(rows):
                    dot = dot + _conj(Qt[i, r]) * v[r]
                for r in range(rows):
                    v[r] = v[r] - Qt[i, r] * dot
        nrm = 0.0
        for r in range(rows):
            nrm += _abs2(v[r])
        nrm = sqrt(nrm)
        if nrm > thresholds[j]:
            for r in range(rows):
                Qt[k, r] = v[r] / nrm
            kept.append(j)
            k += 1
    return np.ascontiguousarray(Qt_arr[:k].T), np.asarray(kept, dtype=np.int64)


def jacobi_eigvalsh(H, double tol_abs, int max_sweeps):
    A_arr = np.array(H, dtype=np.complex128, order="C", copy=True)
    cdef double complex[:, ::1] A = A_arr
    cdef Py_ssize_t n = A.shape[0]
    cdef Py_ssize_t p, q, k, i, j
    cdef int sweep
    cdef double off, mag, app, aqq, tau, t, c, s
    cdef double complex b, phase, cphase, xp, xq
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += _abs2(A[i, j])
        if sqrt(off) <= tol_abs:
            return np.real(np.diag(A_arr)).copy(), sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = A[p, q]
                mag = sqrt(_abs2(b))
                if mag == 0.0:
                    continue
                app = A[p, p].real
                aqq = A[q, q].real
                phase = _conj(b) / mag
                cphase = _conj(phase)
                tau = (aqq - app) / (2.0 * mag)
                if tau >= 0:
                    t = 1.0 / (tau + hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + hypot(1.0, tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    xp = A[k, p]
                    xq = A[k, q]
                    A[k, p] = c * xp - s * phase * xq
                    A[k, q] = s * xp + c * phase * xq
                for k in range(n):
                    xp = A[p, k]
                    xq = A[q, k]
                    A[p, k] = c * xp - s * cphase * xq
                    A[q, k] = s * xp + c * cphase * xq
                A[p, q] = 0
                A[q, p] = 0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
    return np.real(np.diag(A_arr)).copy(), -1


def cholesky(double complex[:, ::1] H, double pivot_tol):
    cdef Py_ssize_t n = H.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double piv, d
    cdef double complex acc
    L_arr = np.zeros((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] L = L_arr
    for j in range(n):
        piv = H[j, j].real
        for k in range(j):
            piv -= _abs2(L[j, k])
        if not piv > pivot_tol:
            return L_arr, j
        d = sqrt(piv)
        L[j, j] = d
        for i in range(j + 1, n):
            acc = H[i, j]
            for k in range(j):
                acc = acc - L[i, k] * _conj(L[j, k])
            L[i, j] = acc / d
    return L_arr, -1


def tri_solve(double complex[:, ::1] L, R):
    Y_arr = np.array(R, dtype=np.complex128, order="C", copy=True)
    cdef double complex[:, ::1] Y = Y_arr
    cdef Py_ssize_t n = L.shape[0], nrhs = Y.shape[1]
    cdef Py_ssize_t i, k, c
    cdef double complex acc
    for c in range(nrhs):
        for i in range(n):
            acc = Y[i, c]
            for k in range(i):
                acc = acc - L[i, k] * Y[k, c]
            Y[i, c] = acc / L[i, i]
        for i in range(n - 1, -1, -1):
            acc = Y[i, c]
            for k in range(i + 1, n):
                acc = acc - _conj(L[k, i]) * Y[k, c]
            Y[i, c] = acc / _conj(L[i, i])
    return Y_arr


def row_reduce(scalar[:, ::1] A, double tol_abs, Py_ssize_t pivot_cols=-1):
    if scalar is double:
        R_arr = np.array(A, dtype=np.float64, copy=True)
    else:
        R_arr = np.array(A, dtype=np.complex128, copy=True)
    cdef scalar[:, ::1] R = R_arr
    cdef Py_ssize_t m = R.shape[0], ncols = R.shape[1]
    cdef Py_ssize_t r = 0, c, i, best, k
    cdef double bmag, mg
    cdef scalar tmp, piv, f
    if pivot_cols < 0 or pivot_cols > ncols:
        pivot_cols = ncols
    pivots = []
    for c in range(pivot_cols):
        if r == m:
            break
        best = r
        bmag = _mag(R[r, c])
        for i in range(r + 1, m):
            mg = _mag(R[i, c])
            if mg > bmag:
                bmag = mg
                best = i
        if bmag <= tol_abs:
            for i in range(r, m):
                R[i, c] = 0
            continue
        if best != r:
            for k in range(ncols):
                tmp = R[r, k]
                R[r, k] = R[best, k]
                R[best, k] = tmp
        piv = R[r, c]
        for k in range(c, ncols):
            R[r, k] = R[r, k] / piv
        for i in range(m):
            if i == r:
                continue
            f = R[i, c]
            if f == 0:
                continue
            for k in range(c, ncols):
                R[i, k] = R[i, k] - f * R[r, k]
            R[i, c] = 0
        R[r, c] = 1
        pivots.append(c)
        r += 1
    return R_arr, np.asarray(pivots, dtype=np.int64)
