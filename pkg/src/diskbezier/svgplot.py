"""Deterministic SVG rendering of a reduction result.

The drawing has three panels: the disk envelopes of both curves (original in
black, reduced in blue), the center error over t, and the radius error over
t.  All numbers are written with four decimals and nothing depends on time,
randomness, or dict iteration order, so identical inputs yield identical
bytes.
"""

from __future__ import annotations

import os

import numpy as np

from .curve import DiskRationalBezier

PANEL = 420.0
PAD = 46.0
GAP = 26.0
CUSP_TOL = 1e-9


def _fmt(value: float) -> str:
    out = f"{value:.4f}"
    return "0.0000" if out == "-0.0000" else out


def _polyline(xs: np.ndarray, ys: np.ndarray, stroke: str, width: float = 1.5) -> str:
    points = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in zip(xs, ys))
    return (
        f'<polyline fill="none" stroke="{stroke}" '
        f'stroke-width="{_fmt(width)}" points="{points}"/>'
    )


def _envelope_tracks(
    curve: DiskRationalBezier, ts: np.ndarray
) -> tuple[np.ndarray, np.ndarray, list[tuple[float, float, float]]]:
    """Offset polylines center +- r * normal, plus cusp fallback circles.

    The unit normal comes from central differences of the sampled centers;
    samples where the tangent collapses get a full circle instead of an
    offset point (the neighbours' offsets still bracket it).
    """
    points, r = curve.sample(ts)
    x, y = points[:, 0], points[:, 1]
    dx = np.gradient(x, ts)
    dy = np.gradient(y, ts)
    norm = np.hypot(dx, dy)
    scale = max(1.0, float(norm.max(initial=0.0)))
    good = norm > CUSP_TOL * scale

    nx = np.where(good, -dy / np.where(good, norm, 1.0), 0.0)
    ny = np.where(good, dx / np.where(good, norm, 1.0), 0.0)
    upper = np.column_stack([x + r * nx, y + r * ny])
    lower = np.column_stack([x - r * nx, y - r * ny])
    circles = [
        (float(x[i]), float(y[i]), float(r[i]))
        for i in np.flatnonzero(~good)
    ]
    # end caps so the envelope closes around the first and last disks
    circles.append((float(x[0]), float(y[0]), float(r[0])))
    circles.append((float(x[-1]), float(y[-1]), float(r[-1])))
    return upper, lower, circles


class _Frame:
    """Maps one data rectangle into one panel rectangle, preserving aspect
    when asked."""

    def __init__(self, index: int, lo: np.ndarray, hi: np.ndarray,
                 keep_aspect: bool):
        self.x0 = PAD + index * (PANEL + GAP)
        self.y0 = PAD
        span = np.maximum(hi - lo, 1e-12)
        sx = PANEL / span[0]
        sy = PANEL / span[1]
        if keep_aspect:
            sx = sy = min(sx, sy)
        self.sx, self.sy = sx, sy
        self.lo = lo

    def x(self, values: np.ndarray) -> np.ndarray:
        return self.x0 + (np.asarray(values, dtype=np.float64) - self.lo[0]) * self.sx

    def y(self, values: np.ndarray) -> np.ndarray:
        # SVG y grows downward
        return self.y0 + PANEL - (np.asarray(values, dtype=np.float64) - self.lo[1]) * self.sy


def _error_panel(
    index: int, ts: np.ndarray, errors: np.ndarray, title: str, color: str
) -> list[str]:
    top = float(errors.max(initial=0.0))
    frame = _Frame(
        index,
        np.array([0.0, 0.0]),
        np.array([1.0, max(top, 1e-12)]),
        keep_aspect=False,
    )
    return [
        f'<rect x="{_fmt(frame.x0)}" y="{_fmt(frame.y0)}" '
        f'width="{_fmt(PANEL)}" height="{_fmt(PANEL)}" '
        f'fill="none" stroke="#cccccc" stroke-width="1.0000"/>',
        _polyline(frame.x(ts), frame.y(errors), color),
        f'<text x="{_fmt(frame.x0 + 4.0)}" y="{_fmt(frame.y0 - 8.0)}" '
        f'font-family="monospace" font-size="13">{title} '
        f"(max {_fmt(top)})</text>",
    ]


def render_comparison(
    original: DiskRationalBezier,
    reduced: DiskRationalBezier,
    samples: int = 400,
) -> str:
    """Three-panel SVG comparing a curve with its reduction."""
    if samples < 2:
        raise ValueError("need at least 2 samples")
    ts = np.linspace(0.0, 1.0, samples)

    tracks = {
        "black": _envelope_tracks(original, ts),
        "#1f6feb": _envelope_tracks(reduced, ts),
    }
    stacks = []
    for upper, lower, circles in tracks.values():
        stacks.extend([upper, lower])
        for cx, cy, cr in circles:
            stacks.append(np.array([[cx - cr, cy - cr], [cx + cr, cy + cr]]))
    cloud = np.vstack(stacks)
    lo = cloud.min(axis=0)
    hi = cloud.max(axis=0)
    margin = 0.03 * float(np.max(hi - lo, initial=1.0))
    frame = _Frame(0, lo - margin, hi + margin, keep_aspect=True)

    body = [
        f'<rect x="{_fmt(frame.x0)}" y="{_fmt(frame.y0)}" '
        f'width="{_fmt(PANEL)}" height="{_fmt(PANEL)}" '
        f'fill="none" stroke="#cccccc" stroke-width="1.0000"/>',
        f'<text x="{_fmt(frame.x0 + 4.0)}" y="{_fmt(frame.y0 - 8.0)}" '
        f'font-family="monospace" font-size="13">envelopes '
        f"(black original, blue reduced)</text>",
    ]
    for color, (upper, lower, circles) in tracks.items():
        body.append(_polyline(frame.x(upper[:, 0]), frame.y(upper[:, 1]), color))
        body.append(_polyline(frame.x(lower[:, 0]), frame.y(lower[:, 1]), color))
        for cx, cy, cr in circles:
            body.append(
                f'<circle cx="{_fmt(float(frame.x(cx)))}" '
                f'cy="{_fmt(float(frame.y(cy)))}" '
                f'r="{_fmt(cr * frame.sx)}" fill="none" '
                f'stroke="{color}" stroke-width="1.5000"/>'
            )

    opoints, orad = original.sample(ts)
    rpoints, rrad = reduced.sample(ts)
    deltas = rpoints - opoints
    center_err = np.hypot(deltas[:, 0], deltas[:, 1])
    radius_err = np.abs(rrad - orad)
    body.extend(_error_panel(1, ts, center_err, "center error", "#d1242f"))
    body.extend(_error_panel(2, ts, radius_err, "radius error", "#8250df"))

    width = 2 * PAD + 3 * PANEL + 2 * GAP
    height = 2 * PAD + PANEL
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def save_comparison(
    original: DiskRationalBezier,
    reduced: DiskRationalBezier,
    path: str | os.PathLike,
    samples: int = 400,
) -> None:
    text = render_comparison(original, reduced, samples=samples)
    with open(os.fspath(path), "w", encoding="utf-8") as handle:
        handle.write(text)
