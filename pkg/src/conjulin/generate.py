"""Deterministic random instances for the CLI ``gen`` command and the tests."""

import numpy as np

from .invertible import has_unique_solution
from .numkernel import DEFAULT_TOL
from .reduction import is_reducible

KINDS = ("reducible", "irreducible", "spd", "unique")
MAX_TRIES = 1000


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _forward_rhs(rng, M, N):
    z = random_complex(rng, M.shape[0])
    return M @ z + N @ z.conj()


def spd(m, rng):
    """``(A, b)`` with ``A = (G^T G + I) / m``."""
    G = rng.standard_normal((m, m))
    A = (G.T @ G + np.eye(m)) / m
    return 0.5 * (A + A.T), rng.standard_normal(m)


def reducible_pair(n, rng, kernel_dim=None):
    """``(M, N)`` whose homogeneous solution set is a complex subspace of dimension
    ``kernel_dim`` (random in ``0..n-1`` when omitted).

    Built so that ``M W = 0`` and ``N conj(W) = 0`` for a random ``n x k`` ``W``.
    """
    k = int(rng.integers(0, n)) if kernel_dim is None else kernel_dim
    M, N = random_complex(rng, (n, n)), random_complex(rng, (n, n))
    if k:
        W = random_complex(rng, (n, k))
        Q, _ = np.linalg.qr(W)
        M = M - (M @ Q) @ Q.conj().T
        Qb = Q.conj()
        N = N - (N @ Qb) @ Qb.conj().T
    return M, N


def irreducible_pair(n, rng):
    """``(M, N)`` whose homogeneous solution set contains the real line ``R w`` but not ``i w``."""
    M, N = random_complex(rng, (n, n)), random_complex(rng, (n, n))
    w = random_complex(rng, n)
    wb = w.conj()
    N = N + np.outer(-M @ w - N @ wb, wb.conj()) / np.vdot(wb, wb)
    return M, N


def generate(kind, n, seed, tol=DEFAULT_TOL):
    """Instance of the given kind as a dict of arrays keyed by file stem."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    if kind == "spd":
        A, b = spd(n, rng)
        return {"A": A, "b": b}
    for _ in range(MAX_TRIES):
        if kind == "unique":
            M, N = random_complex(rng, (n, n)), random_complex(rng, (n, n))
            ok = has_unique_solution(M, N, tol)
        elif kind == "reducible":
            M, N = reducible_pair(n, rng)
            ok = is_reducible(M, N, tol)
        else:
            M, N = irreducible_pair(n, rng)
            ok = not is_reducible(M, N, tol)
        if ok:
            return {"M": M, "N": N, "p": _forward_rhs(rng, M, N)}
    raise RuntimeError(f"no {kind} instance found after {MAX_TRIES} draws")
