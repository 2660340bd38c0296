"""
Dense two-phase simplex solver for the small linear programs behind every
containment computation.

Programs have the form

    maximize  c.x   subject to  A x <= b,   x free.

Since the programs we meet have few variables and many constraints, the solver
runs the simplex method on the dual standard-form program

    minimize  b.y   subject to  A^T y = c,  y >= 0

whose tableau has one row per variable. The primal optimum is read back from the
simplex multipliers of the final basis, or, when that basis is degenerate, from
the constraints its multipliers make tight. Pivoting follows Bland's rule, so the
pivot sequence is a deterministic function of the input order.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import numpy.typing as npt
from scipy.linalg import null_space

from gaugekit.config import TOLERANCES
from gaugekit.errors import NumericalFailureError
from gaugekit.types import ArrayLikeVector, MatrixArray, Vector

logger = logging.getLogger(__name__)


class LpStatus(Enum):
    """Outcome of `solve`."""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """
    `maximize objective.x subject to A x <= b` over free variables `x`.
    """

    objective: Vector
    """Objective vector, shape `(n_vars,)`. The program maximizes."""

    A: MatrixArray
    """Constraint matrix, shape `(n_constraints, n_vars)`."""

    b: Vector
    """Constraint offsets, shape `(n_constraints,)`."""

    def __post_init__(self):
        objective = np.asarray(self.objective, dtype=np.float64).reshape(-1)
        n = objective.shape[0]
        A = np.asarray(self.A, dtype=np.float64).reshape(-1, n)
        b = np.asarray(self.b, dtype=np.float64).reshape(-1)
        if n < 1:
            raise ValueError("A linear program needs at least one variable.")
        if A.shape[0] != b.shape[0]:
            raise ValueError(
                f"A has {A.shape[0]} rows but b has {b.shape[0]} entries."
            )
        if not (
            np.all(np.isfinite(objective))
            and np.all(np.isfinite(A))
            and np.all(np.isfinite(b))
        ):
            raise ValueError("All coefficients of a linear program must be finite.")
        object.__setattr__(self, "objective", objective)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_constraints(
        cls,
        objective: ArrayLikeVector,
        constraints: Iterable[tuple[ArrayLikeVector, float]],
    ) -> "LinearProgram":
        """
        Builds a program from `(a, b)` pairs meaning `a.x <= b`.

        Args:
            objective (`ArrayLikeVector`): vector to maximize.
            constraints (`Iterable[tuple[ArrayLikeVector, float]]`): the constraints.

        Returns:
            `LinearProgram`: the program.
        """
        c = np.asarray(objective, dtype=np.float64).reshape(-1)
        rows = [(np.asarray(a, dtype=np.float64).reshape(-1), float(b)) for a, b in constraints]
        A = np.array([a for a, _ in rows]).reshape(-1, c.shape[0])
        b = np.array([b for _, b in rows], dtype=np.float64)
        return cls(c, A, b)

    @property
    def n_vars(self) -> int:
        return self.objective.shape[0]

    @property
    def n_constraints(self) -> int:
        return self.A.shape[0]


@dataclass(frozen=True)
class LpSolution:
    """Result of `solve`."""

    status: LpStatus
    """Whether the program is optimal, infeasible or unbounded."""

    x: Vector | None = None
    """An optimal point when `status` is `LpStatus.OPTIMAL`."""

    value: float | None = None
    """The optimal objective value when `status` is `LpStatus.OPTIMAL`."""

    dual: Vector | None = field(default=None, repr=False)
    """
    Optimal multipliers `y >= 0` of the constraints with `A^T y = objective`.
    `b.y` is an upper bound of the objective over the feasible set.
    """

    iterations: int = 0
    """Total number of simplex pivots."""

    @property
    def is_optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


class _SimplexTableau:
    """
    Dense tableau of `M y = rhs, y >= 0` (`rhs >= 0`) with one artificial column
    per row. The last row holds the reduced costs of the current phase and, in
    its last entry, minus the objective value.
    """

    def __init__(self, M: MatrixArray, rhs: Vector, iteration_cap: int) -> None:
        self.n_rows, self.n_cols = M.shape
        self.table = np.zeros((self.n_rows + 1, self.n_cols + self.n_rows + 1))
        self.table[: self.n_rows, : self.n_cols] = M
        self.table[: self.n_rows, self.n_cols : -1] = np.eye(self.n_rows)
        self.table[: self.n_rows, -1] = rhs
        self.basis = np.arange(self.n_cols, self.n_cols + self.n_rows)
        self.iterations = 0
        self.iteration_cap = iteration_cap
        self.eps = TOLERANCES.lp_pivot
        self.cost = np.zeros(self.n_cols + self.n_rows)
        self.artificials_locked = False

    @property
    def objective_value(self) -> float:
        return float(-self.table[-1, -1])

    def set_cost(self, cost: Vector) -> None:
        rows = self.table[: self.n_rows]
        self.cost = cost
        self.table[-1, :-1] = cost - cost[self.basis] @ rows[:, :-1]
        self.table[-1, -1] = -(cost[self.basis] @ rows[:, -1])

    def pivot(self, i: int, j: int) -> None:
        self.iterations += 1
        if self.iterations > self.iteration_cap:
            raise NumericalFailureError(
                f"simplex exceeded its iteration cap ({self.iteration_cap} pivots)"
            )
        self.table[i] /= self.table[i, j]
        column = self.table[:, j].copy()
        column[i] = 0.0
        self.table -= np.outer(column, self.table[i])
        self.basis[i] = j

    def bland_step(self, n_allowed: int) -> str:
        reduced = self.table[-1, :n_allowed]
        entering = np.flatnonzero(reduced < -self.eps)
        if entering.size == 0:
            return "optimal"
        j = int(entering[0])
        column = self.table[: self.n_rows, j]
        if self.artificials_locked:
            # a zero-level artificial must leave before any pivot could lift it
            stuck = np.flatnonzero((self.basis >= self.n_cols) & (np.abs(column) > 1e3 * self.eps))
            if stuck.size:
                self.pivot(int(stuck[np.argmax(np.abs(column[stuck]))]), j)
                return "go_on"
        rows = np.flatnonzero(column > self.eps)
        if rows.size == 0:
            return "unbounded"
        ratios = self.table[rows, -1] / column[rows]
        best = ratios.min()
        ties = rows[ratios <= best + self.eps * (1.0 + abs(best))]
        i = int(ties[np.argmin(self.basis[ties])])
        self.pivot(i, j)
        return "go_on"

    def optimize(self, n_allowed: int) -> str:
        while True:
            status = self.bland_step(n_allowed)
            if status != "go_on":
                return status

    def pivot_out_artificials(self) -> None:
        for i in range(self.n_rows):
            if self.basis[i] < self.n_cols:
                continue
            row = np.abs(self.table[i, : self.n_cols])
            j = int(np.argmax(row))
            if row[j] > 1e3 * self.eps:
                self.pivot(i, j)
        self.artificials_locked = True


def _dual_simplex_phases(
    A: MatrixArray, b: Vector, c: Vector, iteration_cap: int
) -> tuple[str, _SimplexTableau]:
    signs = np.where(c < 0, -1.0, 1.0)
    tableau = _SimplexTableau(A.T * signs[:, None], np.abs(c), iteration_cap)
    m, n = A.shape
    tableau.set_cost(np.concatenate([np.zeros(m), np.ones(n)]))
    tableau.optimize(m + n)
    scale = 1.0 + float(np.max(np.abs(c), initial=0.0))
    if tableau.objective_value > TOLERANCES.lp_feasibility * scale:
        return "dual_infeasible", tableau
    tableau.pivot_out_artificials()
    tableau.set_cost(np.concatenate([b, np.zeros(n)]))
    if tableau.optimize(m) == "unbounded":
        return "dual_unbounded", tableau
    return "optimal", tableau


def _primal_from_basis(
    tableau: _SimplexTableau, A: MatrixArray, c: Vector
) -> Vector:
    m, n = A.shape
    signs = np.where(c < 0, -1.0, 1.0)
    full = np.hstack([A.T * signs[:, None], np.eye(n)])
    cost_basis = tableau.cost[tableau.basis]
    try:
        multipliers = np.linalg.solve(full[:, tableau.basis].T, cost_basis)
    except np.linalg.LinAlgError:
        multipliers = cost_basis @ tableau.table[:n, m : m + n]
    return signs * multipliers


def _primal_from_support(
    tableau: _SimplexTableau, A: MatrixArray, b: Vector
) -> Vector | None:
    """
    An optimal primal point from complementary slackness: tight on every
    constraint with a positive multiplier, feasible on the others.

    The objective is constant on `{A_S x = b_S}`, so the point closest to
    feasibility on that affine set is found by a small program over its null
    space. Returns `None` when no feasible point is found.
    """
    m, n = A.shape
    tol = TOLERANCES.lp_feasibility
    in_basis = tableau.basis < m
    rows = tableau.basis[in_basis]
    support = rows[tableau.table[: tableau.n_rows, -1][in_basis] > tol]
    if support.size:
        A_S = A[support]
        x0 = np.linalg.lstsq(A_S, b[support], rcond=None)[0]
        kernel = null_space(A_S, rcond=1e-10)
    else:
        x0 = np.zeros(n)
        kernel = np.eye(n)
    slack = b - A @ x0
    if kernel.shape[1] == 0:
        return x0 if np.all(slack >= -tol * (1.0 + np.abs(b))) else None
    # minimize the worst violation t of x0 + kernel z, with t >= -1
    k = kernel.shape[1]
    system = np.vstack([
        np.hstack([A @ kernel, -np.ones((m, 1))]),
        np.concatenate([np.zeros(k), [-1.0]]),
    ])
    objective = np.concatenate([np.zeros(k), [-1.0]])
    try:
        inner = _solve(LinearProgram(objective, system, np.concatenate([slack, [1.0]])), recover=False)
    except NumericalFailureError:
        return None
    if not inner.is_optimal or inner.x is None:
        return None
    x = x0 + kernel @ inner.x[:k]
    if np.any(A @ x - b > tol * (1.0 + np.abs(b))):
        return None
    return x


def solve(lp: LinearProgram) -> LpSolution:
    """
    Solves `lp` with the two-phase simplex method and Bland's rule.

    Args:
        lp (`LinearProgram`): the program to solve.

    Returns:
        `LpSolution`: status, an optimal point and value when optimal, and the
        optimal dual multipliers.

    Raises:
        NumericalFailureError: after `10 * (n_vars + n_constraints)` pivots, or
            when the recovered optimum violates the feasibility tolerance.

    Example:
        >>> sol = solve(LinearProgram.from_constraints([1.0], [([1.0], 3.0), ([-1.0], 0.0)]))
        >>> sol.status, sol.x
        (<LpStatus.OPTIMAL: 'optimal'>, array([3.]))
    """
    return _solve(lp, recover=True)


def _solve(lp: LinearProgram, recover: bool) -> LpSolution:
    tol = TOLERANCES.lp_feasibility
    norms = np.linalg.norm(lp.A, axis=1)
    trivial = norms == 0.0
    if np.any(lp.b[trivial] < -tol * (1.0 + np.abs(lp.b[trivial]))):
        return LpSolution(LpStatus.INFEASIBLE)
    kept = np.flatnonzero(~trivial)
    A = lp.A[kept] / norms[kept, None]
    b = lp.b[kept] / norms[kept]
    c = lp.objective
    cap = 10 * (lp.n_vars + lp.n_constraints)

    status, tableau = _dual_simplex_phases(A, b, c, cap)
    iterations = tableau.iterations
    if status == "dual_unbounded":
        logger.debug("LP infeasible after %d pivots", iterations)
        return LpSolution(LpStatus.INFEASIBLE, iterations=iterations)
    if status == "dual_infeasible":
        outcome = _feasibility_status(lp)
        logger.debug("LP %s after %d pivots", outcome.value, iterations)
        return LpSolution(outcome, iterations=iterations)

    x = _primal_from_basis(tableau, A, c)
    violation = A @ x - b
    if violation.size and np.any(violation > tol * (1.0 + np.abs(b))):
        recovered = _primal_from_support(tableau, A, b) if recover else None
        if recovered is None:
            raise NumericalFailureError(
                f"optimal basis violates a constraint by {float(violation.max()):.3e}"
            )
        logger.debug(
            "basis primal violated a constraint by %.3e, recovered from the dual support",
            float(violation.max()),
        )
        x = recovered
    dual = np.zeros(lp.n_constraints)
    in_basis = tableau.basis < A.shape[0]
    dual[kept[tableau.basis[in_basis]]] = (
        tableau.table[: tableau.n_rows, -1][in_basis] / norms[kept[tableau.basis[in_basis]]]
    )
    value = float(c @ x)
    logger.debug("LP optimal value=%.12g after %d pivots", value, iterations)
    return LpSolution(LpStatus.OPTIMAL, x, value, dual, iterations)


def _feasibility_status(lp: LinearProgram) -> LpStatus:
    """Decides between infeasible and unbounded when the dual has no solution."""
    n, m = lp.n_vars, lp.n_constraints
    A = np.hstack([lp.A, -np.ones((m, 1))])
    A = np.vstack([A, np.concatenate([np.zeros(n), [-1.0]])])
    b = np.concatenate([lp.b, [0.0]])
    objective = np.concatenate([np.zeros(n), [-1.0]])
    phase_one = solve(LinearProgram(objective, A, b))
    scale = 1.0 + float(np.max(np.abs(lp.b), initial=0.0))
    if phase_one.value is not None and phase_one.value >= -TOLERANCES.lp_feasibility * scale:
        return LpStatus.UNBOUNDED
    return LpStatus.INFEASIBLE


def maximize(
    objective: ArrayLikeVector, A: npt.ArrayLike, b: ArrayLikeVector
) -> LpSolution:
    """
    Shortcut for `solve(LinearProgram(objective, A, b))`.
    """
    return solve(LinearProgram(np.asarray(objective), np.asarray(A), np.asarray(b)))
