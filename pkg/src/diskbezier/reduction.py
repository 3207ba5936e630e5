"""Multi-degree reduction of disk rational Bezier curves.

The reduction runs in four stages:

1. ``reduce_weights``: a small QP picks reduced weights minimizing the L2
   distance between the reduced rational basis partition and the original
   one, keeping every weight strictly positive.
2. ``solve_center``: with both weight vectors fixed, the reduced control
   centers solve a weighted least-squares problem.  Endpoint positions are
   interpolated exactly and, when requested, tangent directions at each end
   are preserved (C^(k,h) continuity with k, h in {0, 1}).
3. ``compute_d``: the center error is sampled on a uniform parameter grid,
   yielding the enclosure margin d.
4. ``reduce_radius``: a second QP picks the smallest reduced radius function
   that still dominates the original radii plus d after degree elevation,
   so every disk of the original curve lies inside the reduced envelope.

``reduce`` chains the four stages and reports which one failed if any does.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bernstein import binomial, elevation_matrix, gram_cross, gram_same
from .curve import DiskRationalBezier
from .qp import QpProblem, QpSolution, solve_qp


class DistanceMode(enum.Enum):
    """How per-sample center errors aggregate into the margin d."""

    MAX = "max"
    SUM = "sum"


class ReductionStageError(RuntimeError):
    """A pipeline stage failed; ``stage`` names it."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


@dataclass(frozen=True)
class ReductionConfig:
    """Settings for one reduction run.

    ``continuity = (k, h)`` fixes the first k+1 and last h+1 reduced control
    disks' centers from endpoint continuity conditions; only 0 and 1 are
    supported.  ``eps_weight`` is the strict-positivity floor for the weight
    QP; None means 1e-6 times the largest original weight.
    """

    degree: int
    continuity: tuple[int, int] = (0, 0)
    samples: int = 1001
    d_mode: DistanceMode = DistanceMode.MAX
    eps_weight: float | None = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("reduced degree must be at least 1")
        k, h = self.continuity
        if k not in (0, 1) or h not in (0, 1):
            raise ValueError("continuity orders must be 0 or 1")
        if self.degree < k + h + 1:
            raise ValueError(
                f"degree {self.degree} is too low for C^({k},{h}) continuity"
            )
        if self.samples < 2:
            raise ValueError("need at least 2 samples")
        if self.eps_weight is not None and self.eps_weight <= 0.0:
            raise ValueError("eps_weight must be positive")


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of a full reduction run."""

    curve: DiskRationalBezier
    d: float
    center_errors: np.ndarray
    ts: np.ndarray
    weight_solution: QpSolution
    radius_solution: QpSolution
    exact: bool = False


def reduce_weights(curve: DiskRationalBezier, config: ReductionConfig) -> QpSolution:
    """Reduced weights minimizing || B_m' w_red - B_n' w || in L2 on [0, 1].

    Expanding the norm gives the QP  min w'Hw - 2(Sw_orig)'w  with H the
    degree-m Gram matrix and S the (m, n) cross Gram matrix, subject to
    w_i >= eps > 0.
    """
    m = config.degree
    n = curve.degree
    H = gram_same(m)
    S = gram_cross(m, n)
    eps = config.eps_weight
    if eps is None:
        eps = 1e-6 * float(curve.weights.max())
    problem = QpProblem(
        H=H,
        c=S @ curve.weights,
        A=np.eye(m + 1),
        b=np.full(m + 1, eps),
    )
    return solve_qp(problem)


def _continuity_fixed(
    curve: DiskRationalBezier,
    red_weights: np.ndarray,
    config: ReductionConfig,
) -> dict[int, np.ndarray]:
    """Reduced control centers pinned by the C^(k,h) endpoint conditions."""
    m = config.degree
    n = curve.degree
    k, h = config.continuity
    p = curve.centers
    w = curve.weights
    wr = red_weights

    fixed = {0: p[0].copy(), m: p[n].copy()}
    if k == 1:
        ratio = (n * wr[0] * w[1]) / (m * w[0] * wr[1])
        fixed[1] = fixed[0] + ratio * (p[1] - p[0])
    if h == 1:
        ratio = (n * w[n - 1] * wr[m]) / (m * w[n] * wr[m - 1])
        fixed[m - 1] = fixed[m] - ratio * (p[n] - p[n - 1])
    return fixed


def solve_center(
    curve: DiskRationalBezier,
    red_weights: np.ndarray,
    config: ReductionConfig,
) -> np.ndarray:
    """Reduced control centers, shape (m+1, 2).

    Minimizes the L2 norm of (R_red - R_orig) in homogeneous form: writing
    both curves over the common denominator and matching the weighted center
    polynomials in the least-squares sense, with the continuity-pinned
    columns moved to the right-hand side.  The x and y coordinates share one
    normal matrix.
    """
    m = config.degree
    n = curve.degree
    k, h = config.continuity
    w = curve.weights
    wr = np.asarray(red_weights, dtype=np.float64)
    p = curve.centers

    fixed = _continuity_fixed(curve, wr, config)
    free = [j for j in range(m + 1) if j not in fixed]

    # G[l, i + j] weights the product B_j^m B_i^n B_l^? expansion; the inner
    # products of the two weighted-center polynomials against the reduced
    # basis produce, for row l and columns (i, j):
    #   coeff(l, i, j) = C(m, j) C(n, i) / ((2m + n + 1) C(2m + n, i + j + l))
    # after cancelling the common C(m, l) row factor, which drops out of the
    # normal equations.  Row indices l run over the free interior range.
    rows = [l for l in range(m + 1) if l not in fixed]
    if not rows:
        centers = np.zeros((m + 1, 2))
        for j, point in fixed.items():
            centers[j] = point
        return centers

    cm = np.array([binomial(m, j) for j in range(m + 1)], dtype=np.float64)
    cn = np.array([binomial(n, i) for i in range(n + 1)], dtype=np.float64)
    total = 2 * m + n
    cden = np.array(
        [binomial(total, s) for s in range(total + 1)], dtype=np.float64
    )
    inv = 1.0 / ((total + 1) * cden)

    def coeff(l: int, i: int, j: int) -> float:
        return cm[j] * cn[i] * inv[i + j + l]

    A = np.zeros((len(rows), len(free)))
    rhs = np.zeros((len(rows), 2))
    for a, l in enumerate(rows):
        for bcol, j in enumerate(free):
            A[a, bcol] = wr[j] * sum(
                coeff(l, i, j) * w[i] for i in range(n + 1)
            )
        target = np.zeros(2)
        for i in range(n + 1):
            # reduced curve must match sum_i w_i p_i B_i^n against each row;
            # the reduced side contributes w_j p_j terms, fixed ones move here
            target += (
                sum(coeff(l, i, j) * wr[j] for j in range(m + 1)) * w[i] * p[i]
            )
        for j, point in fixed.items():
            target -= (
                wr[j]
                * sum(coeff(l, i, j) * w[i] for i in range(n + 1))
                * point
            )
        rhs[a] = target

    solution, *_ = np.linalg.lstsq(A, rhs, rcond=None)

    centers = np.zeros((m + 1, 2))
    for j, point in fixed.items():
        centers[j] = point
    for bcol, j in enumerate(free):
        centers[j] = solution[bcol]
    return centers


def compute_d(
    curve: DiskRationalBezier,
    reduced: DiskRationalBezier,
    config: ReductionConfig,
) -> tuple[float, np.ndarray, np.ndarray]:
    """Enclosure margin d plus the per-sample center errors and grid."""
    ts = np.linspace(0.0, 1.0, config.samples)
    original_centers, _ = curve.sample(ts)
    reduced_centers, _ = reduced.sample(ts)
    deltas = reduced_centers - original_centers
    errors = np.hypot(deltas[:, 0], deltas[:, 1])
    if config.d_mode is DistanceMode.MAX:
        d = float(errors.max())
    else:
        d = float(errors.sum())
    return d, errors, ts


def reduce_radius(
    curve: DiskRationalBezier, d: float, config: ReductionConfig
) -> QpSolution:
    """Reduced radii: smallest L2 radius function dominating r + d.

    Elevating the candidate radius polynomial back to degree n must dominate
    the original radii shifted up by d coefficientwise, which by the convex
    hull property makes the reduced envelope contain every original disk.
    """
    m = config.degree
    n = curve.degree
    if m >= n:
        raise ValueError("reduced degree must be below the curve degree")
    H = gram_same(m)
    S = gram_cross(m, n)
    E = elevation_matrix(m, n - m)
    eps = 1e-12 * max(1.0, float(curve.radii.max()) + d)
    problem = QpProblem(
        H=H,
        c=S @ curve.radii,
        A=np.vstack([E, np.eye(m + 1)]),
        b=np.concatenate([curve.radii + d, np.full(m + 1, eps)]),
    )
    return solve_qp(problem)


def reduce(
    curve: DiskRationalBezier, config: ReductionConfig
) -> ReductionResult:
    """Run the full weight / center / distance / radius pipeline."""
    if config.degree >= curve.degree:
        raise ValueError(
            f"reduced degree {config.degree} must be below the curve "
            f"degree {curve.degree}"
        )

    exact = curve.try_exact_reduce(config.degree)
    if exact is not None:
        ts = np.linspace(0.0, 1.0, config.samples)
        empty = QpSolution(
            x=np.empty(0), multipliers=np.empty(0), active_set=(),
            kkt_residual=0.0, objective=0.0,
        )
        return ReductionResult(
            curve=exact,
            d=0.0,
            center_errors=np.zeros(config.samples),
            ts=ts,
            weight_solution=empty,
            radius_solution=empty,
            exact=True,
        )

    try:
        weight_solution = reduce_weights(curve, config)
    except Exception as exc:
        raise ReductionStageError("weights", str(exc)) from exc
    red_weights = weight_solution.x

    try:
        red_centers = solve_center(curve, red_weights, config)
    except Exception as exc:
        raise ReductionStageError("center", str(exc)) from exc

    center_curve = DiskRationalBezier.from_arrays(
        red_centers, np.zeros(config.degree + 1), red_weights
    )
    try:
        d, errors, ts = compute_d(curve, center_curve, config)
    except Exception as exc:
        raise ReductionStageError("distance", str(exc)) from exc

    try:
        radius_solution = reduce_radius(curve, d, config)
    except Exception as exc:
        raise ReductionStageError("radius", str(exc)) from exc

    reduced = DiskRationalBezier.from_arrays(
        red_centers, radius_solution.x, red_weights
    )
    return ReductionResult(
        curve=reduced,
        d=d,
        center_errors=errors,
        ts=ts,
        weight_solution=weight_solution,
        radius_solution=radius_solution,
        exact=False,
    )
