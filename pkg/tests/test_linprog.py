import numpy as np
import pytest
from scipy.optimize import linprog

from gaugekit.linprog import LinearProgram, LpStatus, maximize, solve


def test_simple_program():
    sol = maximize([1.0, 1.0], [[1, 0], [0, 1], [-1, 0], [0, -1]], [1, 2, 0, 0])
    assert sol.status is LpStatus.OPTIMAL
    assert sol.value == pytest.approx(3.0)
    np.testing.assert_allclose(sol.x, [1.0, 2.0], atol=1e-12)


def test_infeasible_program():
    sol = maximize([1.0], [[1.0], [-1.0]], [-1.0, -1.0])
    assert sol.status is LpStatus.INFEASIBLE
    assert sol.x is None


def test_unbounded_program():
    sol = maximize([1.0, 0.0], [[-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]], [0.0, 1.0, 1.0])
    assert sol.status is LpStatus.UNBOUNDED


def test_from_constraints():
    lp = LinearProgram.from_constraints([1.0], [([1.0], 3.0), ([-1.0], 0.0)])
    assert lp.n_vars == 1
    assert lp.n_constraints == 2
    sol = solve(lp)
    np.testing.assert_allclose(sol.x, [3.0])


def test_rejects_non_finite_coefficients():
    with pytest.raises(ValueError):
        LinearProgram(np.array([1.0]), np.array([[np.inf]]), np.array([1.0]))


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_matches_scipy(seed: int):
    rng = np.random.default_rng(seed)
    n = 3
    A = np.vstack([rng.normal(size=(12, n)), np.eye(n), -np.eye(n)])
    b = np.concatenate([rng.uniform(0.5, 2.0, size=12), 5.0 * np.ones(2 * n)])
    c = rng.normal(size=n)

    sol = maximize(c, A, b)
    reference = linprog(-c, A_ub=A, b_ub=b, bounds=[(None, None)] * n, method="highs")

    assert sol.status is LpStatus.OPTIMAL
    assert sol.value == pytest.approx(-reference.fun, abs=1e-7)
    assert np.all(A @ sol.x <= b + 1e-8)


def test_dual_certificate():
    rng = np.random.default_rng(11)
    A = np.vstack([rng.normal(size=(8, 2)), np.eye(2), -np.eye(2)])
    b = np.concatenate([rng.uniform(0.5, 2.0, size=8), np.ones(4)])
    c = np.array([0.3, -1.2])

    sol = maximize(c, A, b)

    assert sol.dual is not None
    assert np.all(sol.dual >= -1e-12)
    np.testing.assert_allclose(A.T @ sol.dual, c, atol=1e-8)
    assert float(b @ sol.dual) == pytest.approx(sol.value, abs=1e-8)


def test_deterministic():
    rng = np.random.default_rng(5)
    A = np.vstack([rng.normal(size=(20, 3)), np.eye(3), -np.eye(3)])
    b = np.ones(26)
    c = rng.normal(size=3)

    first, second = maximize(c, A, b), maximize(c, A, b)

    assert first.iterations == second.iterations
    np.testing.assert_array_equal(first.x, second.x)


def test_rank_deficient_program():
    # x0 and x1 only appear as x0 + x1, so the dual has a redundant equation
    A = np.array([[1.0, 1.0, 0.0], [-1.0, -1.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, -1.0]])
    b = np.array([1.0, 0.0, 1.0, 1.0])

    sol = maximize([1.0, 1.0, 0.0], A, b)

    assert sol.status is LpStatus.OPTIMAL
    assert sol.value == pytest.approx(1.0, abs=1e-9)
    assert np.all(A @ sol.x <= b + 1e-9)
    np.testing.assert_allclose(A.T @ sol.dual, [1.0, 1.0, 0.0], atol=1e-9)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_degenerate_programs_match_scipy(seed: int):
    # duplicated and parallel rows leave zero-level artificials in the dual basis
    rng = np.random.default_rng(seed)
    base = rng.normal(size=(6, 3))
    A = np.vstack([base, base, 2.0 * base[:2], np.eye(3), -np.eye(3)])
    b = np.concatenate([np.ones(6), np.ones(6), 2.0 * np.ones(2), 3.0 * np.ones(6)])
    c = base[0] + base[1]

    sol = maximize(c, A, b)
    reference = linprog(-c, A_ub=A, b_ub=b, bounds=[(None, None)] * 3, method="highs")

    assert sol.status is LpStatus.OPTIMAL
    assert sol.value == pytest.approx(-reference.fun, abs=1e-7)
    assert np.all(A @ sol.x <= b + 1e-8)
