"""Disk arithmetic in the plane and projections from homogeneous disks.

A disk is a center point plus a nonnegative radius; the radius is the
tolerance carried through every linear operation.  Scaling by k scales the
radius by |k|, addition adds radii, so a linear combination of disks always
yields a disk containing every pointwise combination of its operands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence


class RadiusConvention(Enum):
    """How a homogeneous disk stores its radius.

    WEIGHTED: the stored radius is w * r, so projecting to the plane w=1
    divides the radius by the weight (classic rational disks).
    PLAIN: the stored radius already lives in plane units and projection
    leaves it unchanged.
    """

    WEIGHTED = "weighted"
    PLAIN = "plain"


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class Disk:
    """Closed disk with center (cx, cy) and radius r >= 0."""

    cx: float
    cy: float
    r: float

    def __post_init__(self):
        object.__setattr__(self, "cx", _require_finite("cx", self.cx))
        object.__setattr__(self, "cy", _require_finite("cy", self.cy))
        object.__setattr__(self, "r", _require_finite("r", self.r))
        if self.r < 0:
            raise ValueError(f"radius must be nonnegative, got {self.r}")

    @property
    def center(self) -> tuple[float, float]:
        return (self.cx, self.cy)

    def __add__(self, other: "Disk") -> "Disk":
        return add_disks(self, other)

    def __rmul__(self, k: float) -> "Disk":
        return scale_disk(k, self)


@dataclass(frozen=True)
class HomogeneousDisk:
    """Disk lifted to homogeneous coordinates (x, y, w) with weight w > 0.

    ``rad`` is interpreted according to ``convention``; see RadiusConvention.
    """

    x: float
    y: float
    w: float
    rad: float
    convention: RadiusConvention

    def __post_init__(self):
        object.__setattr__(self, "x", _require_finite("x", self.x))
        object.__setattr__(self, "y", _require_finite("y", self.y))
        object.__setattr__(self, "w", _require_finite("w", self.w))
        object.__setattr__(self, "rad", _require_finite("rad", self.rad))
        if self.w <= 0:
            raise ValueError(f"weight must be positive, got {self.w}")
        if self.rad < 0:
            raise ValueError(f"radius must be nonnegative, got {self.rad}")
        if not isinstance(self.convention, RadiusConvention):
            raise ValueError(f"unknown radius convention: {self.convention!r}")


def scale_disk(k: float, d: Disk) -> Disk:
    """Scale a disk: center by k, radius by |k|."""
    k = _require_finite("k", k)
    return Disk(k * d.cx, k * d.cy, abs(k) * d.r)


def add_disks(a: Disk, b: Disk) -> Disk:
    """Minkowski-style sum: centers add componentwise, radii add."""
    return Disk(a.cx + b.cx, a.cy + b.cy, a.r + b.r)


def linear_combination(coeffs: Sequence[float], disks: Sequence[Disk]) -> Disk:
    """Sum of k_i * disk_i; the radius accumulates |k_i| * r_i."""
    if len(coeffs) != len(disks):
        raise ValueError(
            f"got {len(coeffs)} coefficients for {len(disks)} disks"
        )
    if not disks:
        raise ValueError("linear_combination needs at least one disk")
    cx = cy = r = 0.0
    for k, d in zip(coeffs, disks):
        k = _require_finite("coefficient", k)
        cx += k * d.cx
        cy += k * d.cy
        r += abs(k) * d.r
    return Disk(cx, cy, r)


def perspective_project(h: HomogeneousDisk) -> Disk:
    """Project onto the plane w=1, dividing the radius by the weight.

    Requires the WEIGHTED radius convention (stored radius is w * r).
    """
    if h.convention is not RadiusConvention.WEIGHTED:
        raise ValueError(
            "perspective projection needs the weighted radius convention"
        )
    return Disk(h.x / h.w, h.y / h.w, h.rad / h.w)


def oblique_project(h: HomogeneousDisk) -> Disk:
    """Project onto the plane w=1, keeping the radius unchanged.

    Requires the PLAIN radius convention (stored radius in plane units).
    """
    if h.convention is not RadiusConvention.PLAIN:
        raise ValueError(
            "oblique projection needs the plain radius convention"
        )
    return Disk(h.x / h.w, h.y / h.w, h.rad)
