"""Error measurement between an original and a reduced disk curve."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curve import DiskRationalBezier


@dataclass(frozen=True)
class ErrorReport:
    """Worst-case sampled errors between two disk curves.

    ``center_error`` is max over the grid of the Euclidean distance between
    center points; ``radius_error`` is max of |radius difference|.  The
    ``*_argmax`` fields hold the grid parameter where each maximum occurs.
    """

    center_error: float
    radius_error: float
    center_argmax: float
    radius_argmax: float
    samples: int


def measure(
    original: DiskRationalBezier,
    reduced: DiskRationalBezier,
    samples: int = 1001,
) -> ErrorReport:
    """Sample both curves on a uniform grid and compare pointwise."""
    if samples < 2:
        raise ValueError("need at least 2 samples")
    ts = np.linspace(0.0, 1.0, samples)
    ocenters, oradii = original.sample(ts)
    rcenters, rradii = reduced.sample(ts)
    deltas = rcenters - ocenters
    center = np.hypot(deltas[:, 0], deltas[:, 1])
    radius = np.abs(rradii - oradii)
    ci = int(np.argmax(center))
    ri = int(np.argmax(radius))
    return ErrorReport(
        center_error=float(center[ci]),
        radius_error=float(radius[ri]),
        center_argmax=float(ts[ci]),
        radius_argmax=float(ts[ri]),
        samples=samples,
    )
