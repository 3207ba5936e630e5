"""Disk rational Bezier curves.

The center curve is rational (control points weighted by positive w_i); the
radius is a plain Bernstein polynomial of the control radii, so the curve
sweeps a disk of radius r(t) around the rational center at every t.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .bernstein import binomial, elevation_matrix
from .disks import Disk

# Residual per equation below which a curve counts as exactly reducible.
EXACT_REDUCTION_TOL = 1e-8


@dataclass(frozen=True)
class CurvePoint:
    """Curve sample: disk of radius ``radius`` centered at ``center``."""

    center: tuple[float, float]
    radius: float
    t: float

    def as_disk(self) -> Disk:
        return Disk(self.center[0], self.center[1], self.radius)


@dataclass(frozen=True)
class DeCasteljauTriangle:
    """All intermediate control disks of one de Casteljau evaluation.

    Level j holds n+1-j entries; ``centers[j][i]``, ``weights[j][i]`` and
    ``radii[j][i]`` follow the recurrence with blending ratio t.  The apex
    (level n) is the curve point.
    """

    t: float
    centers: tuple[np.ndarray, ...]
    weights: tuple[np.ndarray, ...]
    radii: tuple[np.ndarray, ...]

    @property
    def point(self) -> CurvePoint:
        apex = self.centers[-1][0]
        return CurvePoint((float(apex[0]), float(apex[1])),
                          float(self.radii[-1][0]), self.t)


class DiskRationalBezier:
    """Degree-n curve from n+1 control disks and positive weights.

    Immutable: the backing arrays are read-only and every operation returns
    a new curve.
    """

    __slots__ = ("_centers", "_radii", "_weights")

    def __init__(self, disks: Iterable[Disk], weights: Sequence[float]):
        disks = tuple(disks)
        if not disks:
            raise ValueError("curve needs at least one control disk")
        if len(weights) != len(disks):
            raise ValueError(
                f"got {len(weights)} weights for {len(disks)} control disks"
            )
        centers = np.array([[d.cx, d.cy] for d in disks], dtype=np.float64)
        radii = np.array([d.r for d in disks], dtype=np.float64)
        w = np.array(weights, dtype=np.float64)
        if not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite")
        if np.any(w <= 0):
            bad = int(np.argmin(w))
            raise ValueError(f"weights must be positive; weights[{bad}] = {w[bad]}")
        for a in (centers, radii, w):
            a.flags.writeable = False
        self._centers = centers
        self._radii = radii
        self._weights = w

    @classmethod
    def from_arrays(cls, centers, radii, weights) -> "DiskRationalBezier":
        centers = np.asarray(centers, dtype=np.float64)
        radii = np.asarray(radii, dtype=np.float64)
        disks = [Disk(c[0], c[1], r) for c, r in zip(centers, radii)]
        return cls(disks, weights)

    # -- plain views -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._weights) - 1

    @property
    def centers(self) -> np.ndarray:
        """Control centers, shape (n+1, 2); read-only."""
        return self._centers

    @property
    def radii(self) -> np.ndarray:
        return self._radii

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def disks(self) -> tuple[Disk, ...]:
        return tuple(
            Disk(c[0], c[1], r) for c, r in zip(self._centers, self._radii)
        )

    def __repr__(self) -> str:
        return (
            f"DiskRationalBezier(degree={self.degree}, "
            f"weights={self._weights.tolist()})"
        )

    # -- evaluation --------------------------------------------------------

    def sample(self, ts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Centers (len(ts), 2) and radii (len(ts),) at parameters ts."""
        ts = np.asarray(ts, dtype=np.float64)
        if ts.size and (ts.min() < 0.0 or ts.max() > 1.0):
            raise ValueError("parameters must lie in [0, 1]")
        x, y, r = _kernels.curve_samples(
            self._centers[:, 0], self._centers[:, 1],
            self._radii, self._weights, ts,
        )
        return np.column_stack([x, y]), r

    def evaluate(self, t: float) -> CurvePoint:
        """Curve point at t via the rational basis form."""
        if not 0.0 <= t <= 1.0:
            raise ValueError(f"parameter outside [0, 1]: t={t}")
        centers, radii = self.sample(np.array([float(t)]))
        return CurvePoint((float(centers[0, 0]), float(centers[0, 1])),
                          float(radii[0]), float(t))

    def de_casteljau(self, t: float) -> DeCasteljauTriangle:
        """Evaluate by repeated blending, keeping every intermediate level.

        Weights and radii blend linearly; centers blend with the weight
        ratios, which is the homogeneous blend followed by division.
        """
        if not 0.0 <= t <= 1.0:
            raise ValueError(f"parameter outside [0, 1]: t={t}")
        w = self._weights.copy()
        hx = w[:, None] * self._centers  # homogeneous centers
        r = self._radii.copy()

        weights = [w]
        centers = [self._centers.copy()]
        radii = [r]
        s = 1.0 - t
        for _ in range(self.degree):
            w = s * w[:-1] + t * w[1:]
            hx = s * hx[:-1] + t * hx[1:]
            r = s * r[:-1] + t * r[1:]
            weights.append(w)
            centers.append(hx / w[:, None])
            radii.append(r)
        return DeCasteljauTriangle(
            t=float(t),
            centers=tuple(centers),
            weights=tuple(weights),
            radii=tuple(radii),
        )

    # -- structural operations ----------------------------------------------

    def subdivide(self, cut: float) -> tuple["DiskRationalBezier", "DiskRationalBezier"]:
        """Split into two curves covering [0, cut] and [cut, 1].

        Both halves are reparametrized over [0, 1] and share the de
        Casteljau apex as the joint control disk.
        """
        if not 0.0 < cut < 1.0:
            raise ValueError(f"cut must lie strictly inside (0, 1), got {cut}")
        tri = self.de_casteljau(cut)
        n = self.degree
        left_centers = np.array([tri.centers[j][0] for j in range(n + 1)])
        left_weights = np.array([tri.weights[j][0] for j in range(n + 1)])
        left_radii = np.array([tri.radii[j][0] for j in range(n + 1)])
        right_centers = np.array([tri.centers[n - i][i] for i in range(n + 1)])
        right_weights = np.array([tri.weights[n - i][i] for i in range(n + 1)])
        right_radii = np.array([tri.radii[n - i][i] for i in range(n + 1)])
        left = DiskRationalBezier.from_arrays(left_centers, left_radii, left_weights)
        right = DiskRationalBezier.from_arrays(right_centers, right_radii, right_weights)
        return left, right

    def elevate(self, s: int) -> "DiskRationalBezier":
        """Same curve written with degree raised by s >= 1.

        Weights and radii are mapped by the degree-raising matrix; centers
        are mapped homogeneously and divided by the new weights.
        """
        if s < 1:
            raise ValueError(f"degree raise must be at least 1, got {s}")
        E = elevation_matrix(self.degree, s)
        new_w = E @ self._weights
        new_centers = (E @ (self._weights[:, None] * self._centers)) / new_w[:, None]
        new_radii = E @ self._radii
        return DiskRationalBezier.from_arrays(new_centers, new_radii, new_w)

    def try_exact_reduce(self, m: int) -> Optional["DiskRationalBezier"]:
        """Degree-m curve representing this one exactly, or None.

        The radius coefficients are recovered as the least-squares solution
        of the degree-raising system; the weights and weighted centers by
        back-substitution on the leading index.  The candidate is accepted
        only if every cross-multiplied center equation and every radius
        equation holds within EXACT_REDUCTION_TOL.
        """
        n = self.degree
        if not 1 <= m < n:
            raise ValueError(f"target degree must satisfy 1 <= m < {n}, got {m}")
        s = n - m
        E = elevation_matrix(m, s)

        reduced_radii, *_ = np.linalg.lstsq(E, self._radii, rcond=None)
        if np.max(np.abs(E @ reduced_radii - self._radii)) > EXACT_REDUCTION_TOL:
            return None
        if np.any(reduced_radii < -EXACT_REDUCTION_TOL):
            return None
        reduced_radii = np.maximum(reduced_radii, 0.0)

        # Back-substitution on the degree-raising identities for i = 0..m;
        # the leading term j=i always carries coefficient C(m,i)/C(n,i) != 0.
        w = self._weights
        hom = w[:, None] * self._centers
        red_w = np.empty(m + 1)
        red_hom = np.empty((m + 1, 2))
        for i in range(m + 1):
            acc_w = w[i] * binomial(n, i)
            acc_h = hom[i] * binomial(n, i)
            for j in range(max(0, i - s), i):
                coeff = binomial(m, j) * binomial(s, i - j)
                acc_w -= coeff * red_w[j]
                acc_h -= coeff * red_hom[j]
            red_w[i] = acc_w / binomial(m, i)
            red_hom[i] = acc_h / binomial(m, i)
        if np.any(red_w <= 0) or not np.all(np.isfinite(red_w)):
            return None
        red_centers = red_hom / red_w[:, None]

        # Verify the full cross-multiplication system (degree n+m identity).
        for i in range(n + m + 1):
            denom = binomial(n + m, i)
            lhs = np.zeros(2)
            rhs = np.zeros(2)
            for j in range(max(0, i - n), min(m, i) + 1):
                coeff = binomial(m, j) * binomial(n, i - j) / denom
                lhs += coeff * red_w[j] * hom[i - j]
                rhs += coeff * red_w[j] * w[i - j] * red_centers[j]
            if np.max(np.abs(lhs - rhs)) > EXACT_REDUCTION_TOL:
                return None

        return DiskRationalBezier.from_arrays(red_centers, reduced_radii, red_w)
