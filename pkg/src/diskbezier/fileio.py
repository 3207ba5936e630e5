"""JSON persistence for disk rational Bezier curves.

File format::

    {
      "degree": 5,
      "disks": [{"x": 96.0, "y": 141.0, "r": 1.0}, ...],
      "weights": [2.0, 1.0, 1.0, 2.0, 1.0, 2.0]
    }

``degree`` must equal ``len(disks) - 1`` and ``weights`` must match the disk
count.  Numbers are written back exactly as Python floats repr them, so a
load/save round trip is bit for bit stable.
"""

from __future__ import annotations

import json
import os
from typing import Any

import numpy as np

from .curve import DiskRationalBezier


class CurveLoadError(ValueError):
    """Curve file is malformed; the message names the offending field."""


def _require(data: dict[str, Any], key: str, kind, where: str):
    if key not in data:
        raise CurveLoadError(f"{where}: missing required field '{key}'")
    value = data[key]
    if not isinstance(value, kind):
        raise CurveLoadError(
            f"{where}: field '{key}' must be {kind.__name__}, "
            f"got {type(value).__name__}"
        )
    return value


def _number(data: dict[str, Any], key: str, where: str) -> float:
    if key not in data:
        raise CurveLoadError(f"{where}: missing required field '{key}'")
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CurveLoadError(
            f"{where}: field '{key}' must be a number, "
            f"got {type(value).__name__}"
        )
    return float(value)


def curve_from_dict(data: dict[str, Any], where: str = "curve") -> DiskRationalBezier:
    """Build a curve from an already-parsed JSON object."""
    if not isinstance(data, dict):
        raise CurveLoadError(f"{where}: top level must be an object")
    degree = _require(data, "degree", int, where)
    disks = _require(data, "disks", list, where)
    weights = _require(data, "weights", list, where)
    if degree != len(disks) - 1:
        raise CurveLoadError(
            f"{where}: field 'degree' is {degree} but there are "
            f"{len(disks)} disks (expected degree + 1)"
        )
    if len(weights) != len(disks):
        raise CurveLoadError(
            f"{where}: field 'weights' has {len(weights)} entries, "
            f"expected {len(disks)}"
        )
    centers = np.zeros((len(disks), 2))
    radii = np.zeros(len(disks))
    for i, disk in enumerate(disks):
        spot = f"{where}: disks[{i}]"
        if not isinstance(disk, dict):
            raise CurveLoadError(f"{spot} must be an object")
        centers[i, 0] = _number(disk, "x", spot)
        centers[i, 1] = _number(disk, "y", spot)
        radii[i] = _number(disk, "r", spot)
        if radii[i] < 0.0:
            raise CurveLoadError(f"{spot}: field 'r' must be nonnegative")
    wvals = np.zeros(len(weights))
    for i, value in enumerate(weights):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise CurveLoadError(
                f"{where}: weights[{i}] must be a number, "
                f"got {type(value).__name__}"
            )
        wvals[i] = float(value)
        if wvals[i] <= 0.0:
            raise CurveLoadError(f"{where}: weights[{i}] must be positive")
    try:
        return DiskRationalBezier.from_arrays(centers, radii, wvals)
    except ValueError as exc:
        raise CurveLoadError(f"{where}: {exc}") from exc


def curve_to_dict(curve: DiskRationalBezier) -> dict[str, Any]:
    return {
        "degree": curve.degree,
        "disks": [
            {"x": float(x), "y": float(y), "r": float(r)}
            for (x, y), r in zip(curve.centers, curve.radii)
        ],
        "weights": [float(w) for w in curve.weights],
    }


def load_curve(path: str | os.PathLike) -> DiskRationalBezier:
    """Read a curve from a JSON file."""
    name = os.fspath(path)
    with open(name, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise CurveLoadError(
                f"{name}: invalid JSON at line {exc.lineno}: {exc.msg}"
            ) from exc
    return curve_from_dict(data, where=name)


def save_curve(curve: DiskRationalBezier, path: str | os.PathLike) -> None:
    """Write a curve as indented JSON with a trailing newline."""
    with open(os.fspath(path), "w", encoding="utf-8") as handle:
        json.dump(curve_to_dict(curve), handle, indent=2)
        handle.write("\n")
