"""Dense convex quadratic programming for the reduction pipeline.

Problems are tiny (at most ~10 variables, ~20 inequality rows), so a primal
active-set method with direct KKT solves is used: it terminates in finitely
many steps on strictly convex problems and every answer ships with a
verifiable KKT certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SYMMETRY_TOL = 1e-12
CONDITION_LIMIT = 1e12


class QpInfeasibleError(RuntimeError):
    """No point satisfies the inequality rows."""

    def __init__(self, row: int, violation: float):
        super().__init__(
            f"constraints are infeasible; most violated row {row} "
            f"(short by {violation:.3e})"
        )
        self.row = row
        self.violation = violation


class SingularMatrixError(RuntimeError):
    """Linear system is singular or too ill-conditioned to trust."""

    def __init__(self, condition: float):
        super().__init__(f"matrix is singular or ill-conditioned "
                         f"(condition estimate {condition:.3e})")
        self.condition = condition


@dataclass(frozen=True, eq=False)
class QpProblem:
    """min x'Hx - 2c'x  subject to  Ax >= b, with H symmetric positive definite.

    ``A`` may have zero rows (unconstrained problem).
    """

    H: np.ndarray
    c: np.ndarray
    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        H = np.atleast_2d(np.asarray(self.H, dtype=np.float64))
        c = np.atleast_1d(np.asarray(self.c, dtype=np.float64))
        A = np.asarray(self.A, dtype=np.float64).reshape(-1, H.shape[0])
        b = np.atleast_1d(np.asarray(self.b, dtype=np.float64))
        p = H.shape[0]
        if H.shape != (p, p):
            raise ValueError(f"H must be square, got shape {H.shape}")
        if c.shape != (p,):
            raise ValueError(f"c must have length {p}, got {c.shape}")
        if b.shape != (A.shape[0],):
            raise ValueError(
                f"b must have one entry per constraint row, got {b.shape}"
            )
        scale = max(1.0, np.abs(H).max())
        if np.abs(H - H.T).max() > SYMMETRY_TOL * scale:
            raise ValueError("H must be symmetric")
        try:
            np.linalg.cholesky(H)
        except np.linalg.LinAlgError:
            raise ValueError("H must be positive definite") from None
        for a in (H, c, A, b):
            a.flags.writeable = False
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def num_variables(self) -> int:
        return self.H.shape[0]

    @property
    def num_constraints(self) -> int:
        return self.A.shape[0]

    def objective(self, x: np.ndarray) -> float:
        x = np.asarray(x, dtype=np.float64)
        return float(x @ self.H @ x - 2.0 * self.c @ x)


@dataclass(frozen=True, eq=False)
class QpSolution:
    """Minimizer plus the KKT data that certifies it."""

    x: np.ndarray
    multipliers: np.ndarray
    active_set: tuple[int, ...]
    kkt_residual: float
    objective: float = field(default=float("nan"))


def solve_linear(M: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """LU solve with partial pivoting; rejects ill-conditioned systems."""
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"matrix must be square, got shape {M.shape}")
    condition = np.linalg.cond(M)
    if not np.isfinite(condition) or condition > CONDITION_LIMIT:
        raise SingularMatrixError(float(condition))
    return np.linalg.solve(M, np.asarray(rhs, dtype=np.float64))


def _find_feasible(A: np.ndarray, b: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Shift x into {Ax >= b} by a phase-one simplex on min s, Ax + s*1 >= b.

    The artificial variable s is capped below so the LP is never unbounded,
    and the search stops as soon as s is pushed a little past zero, i.e. once
    a strictly interior point appears.  Bland's rule keeps the pivoting finite
    and deterministic.  Whatever point the LP ends on is re-checked against
    the original rows; QpInfeasibleError reports the measured shortfall.
    """
    q, p = A.shape
    scale = 1.0 + float(np.abs(b).max(initial=0.0))
    shifted = b - A @ x
    if shifted.max(initial=0.0) <= 0.0:
        return x.copy()

    # rows scaled to unit inf-norm; w_j is the scaled slack of row j and the
    # tableau columns are [y+, y-, s+, s-, w, u] with y = candidate - x
    row_scale = np.maximum(1.0, np.abs(A).max(axis=1))
    cap = 1.0 + 1e-3 * scale
    n_cols = 2 * p + 3 + q
    tableau = np.zeros((q + 1, n_cols + 1))
    tableau[:q, 0:p] = A / row_scale[:, None]
    tableau[:q, p:2 * p] = -tableau[:q, 0:p]
    tableau[:q, 2 * p] = 1.0 / row_scale
    tableau[:q, 2 * p + 1] = -tableau[:q, 2 * p]
    tableau[:q, 2 * p + 2:2 * p + 2 + q] = -np.eye(q)
    tableau[q, 2 * p + 1] = 1.0
    tableau[q, 2 * p + 2 + q] = 1.0
    tableau[:q, n_cols] = shifted / row_scale
    tableau[q, n_cols] = cap

    # start at y=0 with s raised to the worst shortfall; that makes every w_j
    # and the cap slack u nonnegative, so {s+} + {w_j, j != worst} + {u} is a
    # basic feasible set
    worst_row = int(np.argmax(shifted))
    basis = np.array(
        [2 * p if j == worst_row else 2 * p + 2 + j for j in range(q)]
        + [2 * p + 2 + q]
    )
    for r, col in enumerate(basis):
        tableau[r] /= tableau[r, col]
        for rr in range(q + 1):
            if rr != r and tableau[rr, col] != 0.0:
                tableau[rr] -= tableau[rr, col] * tableau[r]

    cost = np.zeros(n_cols)
    cost[2 * p] = 1.0
    cost[2 * p + 1] = -1.0
    for _ in range(200 * (q + 1)):
        rhs = tableau[:, n_cols]
        s_value = sum(
            rhs[r] * cost[col] for r, col in enumerate(basis) if cost[col] != 0.0
        )
        if s_value <= -1e-9 * scale:
            break
        reduced = cost.copy()
        for r, col in enumerate(basis):
            if cost[col] != 0.0:
                reduced -= cost[col] * tableau[r, :n_cols]
        reduced[basis] = 0.0
        entering = np.flatnonzero(reduced < -1e-9)
        if entering.size == 0:
            break  # LP optimum; final shortfall check below decides
        j = int(entering[0])
        column = tableau[:, j]
        rows = np.flatnonzero(column > 1e-10)
        if rows.size == 0:
            break
        ratios = rhs[rows] / column[rows]
        best = ratios.min()
        ties = rows[ratios <= best + 1e-12 * (1.0 + abs(best))]
        r = int(ties[np.argmin(basis[ties])])
        tableau[r] /= tableau[r, j]
        for rr in range(q + 1):
            if rr != r and tableau[rr, j] != 0.0:
                tableau[rr] -= tableau[rr, j] * tableau[r]
        basis[r] = j

    solution = np.zeros(n_cols)
    solution[basis] = tableau[:, n_cols]
    candidate = x + solution[0:p] - solution[p:2 * p]
    slack = A @ candidate - b
    if slack.min() >= -1e-12 * scale:
        return candidate
    worst = int(np.argmin(slack))
    raise QpInfeasibleError(worst, float(-slack[worst]))


def _null_space(rows: np.ndarray, p: int) -> np.ndarray:
    """Orthonormal basis of {s : rows @ s = 0}, empty when rows span R^p."""
    if rows.shape[0] == 0:
        return np.eye(p)
    _, singular, vt = np.linalg.svd(rows)
    rank = int(np.sum(singular > 1e-12 * singular[0]))
    return vt[rank:].T


def solve_qp(problem: QpProblem) -> QpSolution:
    """Global minimizer of a strictly convex inequality-constrained QP.

    Primal active-set iteration from a feasible start.  Steps restricted to
    the working set are computed in an explicit null-space basis, so a fully
    pinned iterate produces an exactly zero step instead of solver noise.
    Ties in the blocking and leaving constraint choices are broken by the
    lowest row index so results are deterministic.
    """
    H, c, A, b = problem.H, problem.c, problem.A, problem.b
    p, q = problem.num_variables, problem.num_constraints

    x = np.linalg.solve(2.0 * H, 2.0 * c)  # unconstrained minimizer
    if q == 0:
        return _certify(problem, x, [], np.empty(0))

    scale = 1.0 + float(np.abs(b).max(initial=0.0))
    if np.min(A @ x - b) < -1e-9 * scale:
        x = _find_feasible(A, b, x)

    working: list[int] = []
    max_iter = 100 * (q + 1)
    for _ in range(max_iter):
        gradient = 2.0 * H @ x - 2.0 * c
        basis = _null_space(A[working], p)
        if basis.shape[1]:
            reduced = basis.T @ (2.0 * H) @ basis
            step = basis @ np.linalg.solve(reduced, -(basis.T @ gradient))
        else:
            step = np.zeros(p)

        if np.abs(step).max(initial=0.0) <= 1e-12 * (1.0 + np.abs(x).max()):
            # stationary on this face; multipliers from A_w^T lam = grad
            lam, *_ = np.linalg.lstsq(A[working].T, gradient, rcond=None) \
                if working else (np.empty(0),)
            negative = np.flatnonzero(lam < -1e-10)
            if negative.size == 0:
                return _certify(problem, x, working, lam)
            # leave the constraint with the most negative multiplier,
            # lowest row index on ties
            worst = min(
                negative, key=lambda idx: (lam[idx], working[idx])
            )
            del working[int(worst)]
            continue

        alpha = 1.0
        blocker = -1
        outside = [i for i in range(q) if i not in working]
        for i in outside:
            descent = A[i] @ step
            if descent < -1e-14:
                ratio = (b[i] - A[i] @ x) / descent
                if ratio < alpha - 1e-15:
                    alpha, blocker = max(ratio, 0.0), i
        x = x + alpha * step
        if blocker >= 0:
            working.append(blocker)
            working.sort()

    raise RuntimeError("active-set iteration did not converge")


def _certify(problem: QpProblem, x, working, lam) -> QpSolution:
    multipliers = np.zeros(problem.num_constraints)
    for idx, row in enumerate(working):
        multipliers[row] = max(lam[idx], 0.0)

    stationarity = 2.0 * problem.H @ x - 2.0 * problem.c \
        - problem.A.T @ multipliers
    residual = float(np.abs(stationarity).max(initial=0.0))
    if problem.num_constraints:
        slack = problem.A @ x - problem.b
        residual = max(residual, float(np.maximum(0.0, -slack).max()))
        residual = max(residual, float(np.abs(multipliers * slack).max()))
    multipliers.flags.writeable = False
    x = np.array(x)
    x.flags.writeable = False
    return QpSolution(
        x=x,
        multipliers=multipliers,
        active_set=tuple(sorted(working)),
        kkt_residual=residual,
        objective=problem.objective(x),
    )
