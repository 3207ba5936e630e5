"""Shared test helpers and the acceptance-summary terminal hook."""

from __future__ import annotations

import numpy as np

from diskbezier import DiskRationalBezier

# (number, status, detail) tuples appended by tests/test_acceptance.py;
# printed after the run so the per-criterion lines survive output capture
ACCEPTANCE_RESULTS: list[tuple[int, str, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {detail}")


def random_curve(
    rng: np.random.Generator,
    degree: int,
    weight_range: tuple[float, float] = (0.5, 3.0),
    radius_range: tuple[float, float] = (0.0, 5.0),
    box: float = 50.0,
) -> DiskRationalBezier:
    """Random curve with positive weights and nonnegative radii."""
    centers = rng.uniform(-box, box, size=(degree + 1, 2))
    radii = rng.uniform(radius_range[0], radius_range[1], size=degree + 1)
    weights = rng.uniform(weight_range[0], weight_range[1], size=degree + 1)
    return DiskRationalBezier.from_arrays(centers, radii, weights)
