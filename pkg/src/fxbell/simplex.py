"""Dense two-phase simplex solver for small equality-form linear programs.

Solves ``minimize c.x subject to A x = b, x >= 0`` on dense numpy arrays.
The LPs in this package have at most a few dozen unknowns, so a tableau
method with Bland's pivoting rule (anti-cycling) is simple, exact enough,
and far below a millisecond per solve; an external solver dependency is not
justified at this size.

Phase 1 minimizes the sum of one artificial variable per row and doubles as
a feasibility test. Redundant equality rows (artificials stuck in the basis
at level zero with no admissible pivot) are dropped before phase 2, so
callers may pass linearly dependent constraint systems.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

DEFAULT_TOLERANCE = 1e-9
DEFAULT_MAX_ITERATIONS = 10_000


@dataclass(frozen=True)
class SimplexResult:
    status: str
    x: np.ndarray | None
    objective: float | None
    iterations: int

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


def _pivot(tableau: np.ndarray, basis: list[int], row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    pivot_row = tableau[row].copy()
    factors = tableau[:, col].copy()
    factors[row] = 0.0
    tableau -= np.outer(factors, pivot_row)
    # force the pivot column to an exact unit vector to stop FP dust piling up
    tableau[:, col] = 0.0
    tableau[row, col] = 1.0
    basis[row] = col


def _iterate(
    tableau: np.ndarray,
    basis: list[int],
    n_cols: int,
    tol: float,
    max_iterations: int,
) -> tuple[str, int]:
    """Run simplex pivots until optimal or unbounded. Last row is the cost row."""
    iterations = 0
    while True:
        reduced = tableau[-1, :n_cols]
        negative = np.nonzero(reduced < -tol)[0]
        if negative.size == 0:
            return OPTIMAL, iterations
        col = int(negative[0])  # Bland: lowest eligible index enters
        column = tableau[:-1, col]
        rows = np.nonzero(column > tol)[0]
        if rows.size == 0:
            return UNBOUNDED, iterations
        ratios = tableau[rows, -1] / column[rows]
        tied = rows[ratios <= ratios.min() + 1e-12]
        # Bland tie-break: among minimal ratios, the lowest basic index leaves
        leave = int(min(tied, key=lambda i: basis[i]))
        _pivot(tableau, basis, leave, col)
        iterations += 1
        if iterations > max_iterations:
            raise ConvergenceError(
                f"simplex exceeded {max_iterations} iterations"
            )


def solve_standard_form(
    c: np.ndarray,
    a_eq: np.ndarray,
    b_eq: np.ndarray,
    *,
    tol: float = DEFAULT_TOLERANCE,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> SimplexResult:
    """Minimize ``c.x`` subject to ``a_eq x = b_eq`` and ``x >= 0``."""
    c = np.asarray(c, dtype=np.float64).ravel()
    a = np.array(a_eq, dtype=np.float64, copy=True)
    if a.ndim != 2:
        raise ValueError("a_eq must be a 2-D matrix")
    b = np.array(b_eq, dtype=np.float64, copy=True).ravel()
    m, n = a.shape
    if c.shape[0] != n or b.shape[0] != m:
        raise ValueError("inconsistent LP dimensions")

    negative_rhs = b < 0
    a[negative_rhs] *= -1.0
    b[negative_rhs] *= -1.0

    # phase 1: artificial basis, cost = sum of artificials
    tableau = np.zeros((m + 1, n + m + 1))
    tableau[:m, :n] = a
    tableau[:m, n : n + m] = np.eye(m)
    tableau[:m, -1] = b
    tableau[-1, :n] = -a.sum(axis=0)
    tableau[-1, -1] = -b.sum()
    basis = list(range(n, n + m))

    status, iters1 = _iterate(tableau, basis, n + m, tol, max_iterations)
    if status != OPTIMAL:  # pragma: no cover - phase 1 is always bounded below
        raise ConvergenceError("phase 1 terminated without an optimum")
    if -tableau[-1, -1] > tol:
        return SimplexResult(INFEASIBLE, None, None, iters1)

    # drive artificials out of the basis; rows with no admissible pivot are
    # redundant equalities and get dropped
    redundant: list[int] = []
    for row in range(m):
        if basis[row] < n:
            continue
        candidates = np.nonzero(np.abs(tableau[row, :n]) > tol)[0]
        if candidates.size:
            _pivot(tableau, basis, row, int(candidates[0]))
        else:
            redundant.append(row)
    if redundant:
        keep = [i for i in range(m) if i not in redundant]
        tableau = tableau[keep + [m]]
        basis = [basis[i] for i in keep]

    # phase 2: rebuild the cost row from the real objective
    tableau = np.hstack([tableau[:, :n], tableau[:, -1:]])
    tableau[-1].fill(0.0)
    tableau[-1, :n] = c
    for row, var in enumerate(basis):
        if c[var] != 0.0:
            tableau[-1] -= c[var] * tableau[row]

    status, iters2 = _iterate(tableau, basis, n, tol, max_iterations)
    iterations = iters1 + iters2
    if status == UNBOUNDED:
        return SimplexResult(UNBOUNDED, None, None, iterations)

    x = np.zeros(n)
    x[basis] = tableau[: len(basis), -1]
    # basic values are >= 0 up to roundoff; clip the dust
    np.clip(x, 0.0, None, out=x)
    return SimplexResult(OPTIMAL, x, float(c @ x), iterations)


def feasible(
    a_eq: np.ndarray,
    b_eq: np.ndarray,
    *,
    tol: float = DEFAULT_TOLERANCE,
) -> bool:
    """True iff ``a_eq x = b_eq`` admits a solution with ``x >= 0``."""
    n = np.asarray(a_eq).shape[1]
    result = solve_standard_form(np.zeros(n), a_eq, b_eq, tol=tol)
    return result.is_optimal
