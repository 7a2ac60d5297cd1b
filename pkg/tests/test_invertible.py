import numpy as np
import pytest

from conjulin.conjsys import ConjugateSystem, residual, solve_via_realification
from conjulin.errors import NotHermitian, SingularM
from conjulin.generate import random_complex, reducible_pair
from conjulin.invertible import (
    analytic_reduction,
    block_matrix,
    has_unique_solution,
    solve_unique,
    spectra_match,
)
from conjulin.reduction import reduction_matrices, solve

from oracles import realified, svd_rank
from worked_examples import A6


def embedded_pair(A):
    n = A.shape[0] // 2
    B, C, D = A[:n, :n], A[:n, n:], A[n:, n:]
    return (B + D - 1j * (C - C.T)) / 2, (B - D + 1j * (C + C.T)) / 2


def test_block_matrix_scalar():
    np.testing.assert_array_equal(block_matrix([[1 + 1j]], [[2]]), [[1 + 1j, 2], [2, 1 - 1j]])


@pytest.mark.parametrize("m, n, unique", [
    (1, 0, True),
    (1, 1, False),
    (2, 1, True),
    (1, 1j, False),
    (0, 0, False),
])
def test_has_unique_solution_scalar(m, n, unique):
    assert has_unique_solution([[m]], [[n]]) is unique


def test_has_unique_solution_matches_svd(rng):
    for _ in range(50):
        n = int(rng.integers(1, 6))
        M, N = reducible_pair(n, rng) if rng.random() < 0.5 else (random_complex(rng, (n, n)), random_complex(rng, (n, n)))
        assert has_unique_solution(M, N) == (svd_rank(realified(M, N)) == 2 * n)


class TestAnalyticReduction:
    def test_scalar_no_conjugate(self):
        U, V = analytic_reduction([[2]], [[0]])
        np.testing.assert_allclose(U, [[1]])
        np.testing.assert_allclose(V, [[0]])

    def test_scalar_degenerate(self):
        M, N = np.array([[1]]), np.array([[1j]])
        U, V = analytic_reduction(M, N)
        np.testing.assert_allclose(U, [[1]])
        np.testing.assert_allclose(V, [[-1j]])
        np.testing.assert_allclose(U @ M + V @ N.conj(), [[0]], atol=1e-15)
        assert not has_unique_solution(M, N)

    def test_identity_holds(self, rng):
        for variant in ("standard", "inverse-n"):
            for _ in range(20):
                n = int(rng.integers(1, 7))
                M, N = random_complex(rng, (n, n)), random_complex(rng, (n, n))
                U, V = analytic_reduction(M, N, variant=variant)
                assert np.linalg.norm(U @ N + V @ M.conj()) <= 1e-9 * np.linalg.norm(N) * np.linalg.cond(M)

    def test_singular_m(self):
        with pytest.raises(SingularM):
            analytic_reduction([[1, 1], [1, 1]], np.eye(2))

    def test_inverse_n_needs_invertible_n(self):
        with pytest.raises(SingularM):
            analytic_reduction(np.eye(2), [[1, 1], [1, 1]], variant="inverse-n")

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            analytic_reduction([[1]], [[0]], variant="other")


def test_three_routes_agree(rng):
    for _ in range(40):
        n = int(rng.integers(1, 7))
        M, N = random_complex(rng, (n, n)), random_complex(rng, (n, n))
        if not has_unique_solution(M, N):
            continue
        sys = ConjugateSystem(M, N, random_complex(rng, n))
        z_std = solve_unique(sys)
        z_invn = solve_unique(sys, variant="inverse-n")
        z_proj = solve(sys).solutions.particular
        z_real = solve_via_realification(sys).particular
        scale = 1e-8 * (1 + np.linalg.norm(z_real)) * np.linalg.cond(realified(M, N))
        for z in (z_std, z_invn, z_proj):
            assert np.linalg.norm(z - z_real) <= scale
        assert residual(sys, z_std) <= 1e-8 * np.linalg.cond(realified(M, N)) * (1 + np.linalg.norm(sys.p))


def test_projector_route_when_m_singular(rng):
    M = np.diag([1.0, 0.0]).astype(complex)
    N = np.array([[0, 0], [0, 2]], dtype=complex)
    assert has_unique_solution(M, N)
    with pytest.raises(SingularM):
        analytic_reduction(M, N)
    sys = ConjugateSystem(M, N, [3, 4j])
    report = solve(sys)
    np.testing.assert_allclose(report.solutions.particular, [3, -2j], atol=1e-14)
    reduction_matrices(M, N)


def test_spectra_match_embedded_example():
    M, N = embedded_pair(A6)
    assert spectra_match(M, N)


def test_spectra_match_random_symmetric(rng):
    for _ in range(20):
        m = 2 * int(rng.integers(1, 7))
        X = rng.standard_normal((m, m))
        assert spectra_match(*embedded_pair(X + X.T))


def test_spectra_match_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        spectra_match([[1j]], [[0]])
