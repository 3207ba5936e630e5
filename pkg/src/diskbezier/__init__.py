"""Disk rational Bezier curves with optimal multi-degree reduction.

Control points are disks: a center plus a tolerance radius.  The curve
carries that tolerance along, and `reduction.reduce` finds a lower-degree
disk curve whose envelope is guaranteed to contain the original one.
"""

from ._kernels import backend
from .bernstein import (
    BernsteinPoly,
    bernstein,
    binomial,
    elevation_matrix,
    gram_cross,
    gram_same,
    rational_basis,
)
from .curve import CurvePoint, DeCasteljauTriangle, DiskRationalBezier
from .disks import (
    Disk,
    HomogeneousDisk,
    RadiusConvention,
    add_disks,
    linear_combination,
    oblique_project,
    perspective_project,
    scale_disk,
)
from .fileio import CurveLoadError, load_curve, save_curve
from .metrics import ErrorReport, measure
from .qp import (
    QpInfeasibleError,
    QpProblem,
    QpSolution,
    SingularMatrixError,
    solve_linear,
    solve_qp,
)
from .reduction import (
    DistanceMode,
    ReductionConfig,
    ReductionResult,
    ReductionStageError,
    reduce,
)
from .svgplot import render_comparison, save_comparison

__version__ = "0.1.0"

__all__ = [
    "BernsteinPoly",
    "CurveLoadError",
    "CurvePoint",
    "DeCasteljauTriangle",
    "Disk",
    "DiskRationalBezier",
    "DistanceMode",
    "ErrorReport",
    "HomogeneousDisk",
    "QpInfeasibleError",
    "QpProblem",
    "QpSolution",
    "RadiusConvention",
    "ReductionConfig",
    "ReductionResult",
    "ReductionStageError",
    "SingularMatrixError",
    "add_disks",
    "backend",
    "bernstein",
    "binomial",
    "elevation_matrix",
    "gram_cross",
    "gram_same",
    "linear_combination",
    "load_curve",
    "measure",
    "oblique_project",
    "perspective_project",
    "rational_basis",
    "reduce",
    "render_comparison",
    "save_comparison",
    "save_curve",
    "scale_disk",
    "solve_linear",
    "solve_qp",
]
