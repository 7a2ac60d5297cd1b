import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjulin.conjsys import ConjugateSystem, realify
from conjulin.embedding import (
    RealSystem,
    complexify,
    embed_solve,
    interlacing_report,
    pad_to_even,
    schur_system,
    solve_real_via_complex,
)
from conjulin.errors import NotPositiveDefinite, OddDimension
from conjulin.generate import spd

from oracles import real_cholesky_solve
from worked_examples import A6, B6, EIG_A6, EIG_S6, SCHUR6


class TestRealSystem:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            RealSystem([[1, 2], [0, 1]], [0, 0])

    def test_rejects_bad_rhs(self):
        with pytest.raises(ValueError):
            RealSystem(np.eye(2), [1, 2, 3])


class TestPad:
    def test_even_untouched(self):
        sys = RealSystem(np.eye(2), [1, 2])
        assert pad_to_even(sys) is sys

    def test_scalar(self):
        padded = pad_to_even(RealSystem([[2.0]], [4.0]))
        assert padded.padded and padded.m == 2
        np.testing.assert_array_equal(padded.A, [[2, 0], [0, 1]])
        np.testing.assert_allclose(solve_real_via_complex(RealSystem([[2.0]], [4.0])), [2.0])

    def test_three_by_three(self, rng):
        A, b = spd(3, rng)
        np.testing.assert_allclose(solve_real_via_complex(RealSystem(A, b)),
                                   real_cholesky_solve(A, b), atol=1e-10)


class TestComplexify:
    def test_identity(self):
        emb = complexify(RealSystem(np.eye(2), [1, 1]))
        np.testing.assert_allclose(emb.M, [[1]])
        np.testing.assert_allclose(emb.N, [[0]])
        np.testing.assert_allclose(emb.p, [1 + 1j])

    def test_diagonal(self):
        emb = complexify(RealSystem(np.diag([1.0, 3.0]), [1, 0]))
        np.testing.assert_allclose(emb.M, [[2]])
        np.testing.assert_allclose(emb.N, [[-1]])
        np.testing.assert_allclose(emb.p, [1])

    def test_odd_raises(self):
        with pytest.raises(OddDimension):
            complexify(RealSystem(np.eye(3), [0, 0, 0]))

    def test_structure(self, rng):
        for _ in range(20):
            m = 2 * int(rng.integers(1, 8))
            A, b = spd(m, rng)
            emb = complexify(RealSystem(A, b))
            np.testing.assert_allclose(emb.M, emb.M.conj().T, atol=1e-15)
            np.testing.assert_allclose(emb.N, emb.N.T, atol=1e-15)
            F, g = realify(ConjugateSystem(emb.M, emb.N, emb.p))
            np.testing.assert_allclose(F, A, atol=1e-14)
            np.testing.assert_allclose(g, b, atol=1e-15)


def test_schur_of_pure_complex_system():
    emb = complexify(RealSystem(2 * np.eye(4), [1, 2, 3, 4]))
    S, q = schur_system(emb)
    np.testing.assert_allclose(S, 2 * np.eye(2))
    np.testing.assert_allclose(q, [1 + 3j, 2 + 4j])


def test_worked_example_schur_matrix():
    S, _ = schur_system(complexify(RealSystem(A6, B6)))
    np.testing.assert_allclose(S, SCHUR6, atol=1e-4)


def test_worked_example_solution_matches_direct_solve():
    x = solve_real_via_complex(RealSystem(A6, B6))
    np.testing.assert_allclose(x, np.linalg.solve(A6, B6), rtol=1e-8)


def test_three_systems_share_the_solution(rng):
    for _ in range(20):
        m = 2 * int(rng.integers(1, 9))
        A, b = spd(m, rng)
        sol = embed_solve(RealSystem(A, b))
        emb = complexify(RealSystem(A, b))
        n = m // 2
        z = sol.z
        assert np.linalg.norm(A @ sol.x - b) <= 1e-9 * (1 + np.linalg.norm(b))
        assert np.linalg.norm(emb.M @ z + emb.N @ z.conj() - emb.p) <= 1e-9 * (1 + np.linalg.norm(b))
        assert np.linalg.norm(sol.S @ z - sol.q) <= 1e-9 * (1 + np.linalg.norm(sol.q))
        np.testing.assert_allclose(np.concatenate([z.real, z.imag]), sol.x[:2 * n])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 20), st.integers(0, 2**32 - 1))
def test_solution_matches_textbook_cholesky(m, seed):
    rng = np.random.default_rng(seed)
    A, b = spd(m, rng)
    x = solve_real_via_complex(RealSystem(A, b))
    ref = real_cholesky_solve(A, b)
    assert np.linalg.norm(x - ref) <= 1e-8 * np.linalg.cond(A) * (1 + np.linalg.norm(ref))


class TestInterlacing:
    def test_identity(self):
        rep = interlacing_report(RealSystem(np.eye(4), np.zeros(4)))
        np.testing.assert_allclose(rep.eig_A, [1] * 4)
        np.testing.assert_allclose(rep.eig_S, [1] * 2)
        assert rep.cauchy_ok and rep.schur_ok
        assert rep.cond_A == pytest.approx(1.0)

    def test_worked_example(self):
        rep = interlacing_report(RealSystem(A6, B6))
        np.testing.assert_allclose(rep.eig_A, EIG_A6, atol=1e-3)
        np.testing.assert_allclose(rep.eig_S, EIG_S6, atol=1e-3)
        assert rep.cauchy_ok and rep.schur_ok and rep.cond_S_le_A

    def test_random(self, rng):
        for _ in range(30):
            m = 2 * int(rng.integers(1, 11))
            A, b = spd(m, rng)
            rep = interlacing_report(RealSystem(A, b))
            assert rep.cauchy_ok and rep.schur_ok
            assert rep.cond_M_le_A and rep.cond_S_le_A
            np.testing.assert_allclose(rep.eig_A, np.linalg.eigvalsh(A), atol=1e-10)

    def test_odd_dimension_reports_padded_matrix(self):
        rep = interlacing_report(RealSystem(np.diag([2.0, 3.0, 4.0]), np.zeros(3)))
        assert rep.padded
        np.testing.assert_allclose(rep.eig_A, [1, 2, 3, 4])

    def test_indefinite(self):
        with pytest.raises(NotPositiveDefinite):
            interlacing_report(RealSystem(np.diag([1.0, -1.0]), [0, 0]))

    def test_indefinite_solve(self):
        with pytest.raises(NotPositiveDefinite):
            solve_real_via_complex(RealSystem(np.diag([1.0, 1.0, -1.0, 1.0]), np.zeros(4)))
