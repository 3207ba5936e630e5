"""Command line interface.

``diskbezier reduce`` loads a curve from JSON, runs the reduction pipeline,
writes the reduced curve, and optionally emits an SVG comparison and a JSON
report.  Exit codes: 0 success, 1 pipeline failure (the message names the
failing stage), 2 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .fileio import CurveLoadError, load_curve, save_curve
from .metrics import measure
from .reduction import (
    DistanceMode,
    ReductionConfig,
    ReductionStageError,
    reduce,
)
from .svgplot import save_comparison


def _parse_continuity(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            "continuity must be two comma-separated integers, e.g. 1,1"
        )
    try:
        k, h = (int(part.strip()) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"continuity must be two integers, got {text!r}"
        ) from None
    if k not in (0, 1) or h not in (0, 1):
        raise argparse.ArgumentTypeError("continuity orders must be 0 or 1")
    return k, h


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diskbezier",
        description="Disk rational Bezier curves and degree reduction.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    red = commands.add_parser(
        "reduce",
        help="reduce the degree of a disk rational Bezier curve",
    )
    red.add_argument("--input", required=True, help="input curve JSON file")
    red.add_argument("--output", required=True, help="reduced curve JSON file")
    red.add_argument(
        "--degree", required=True, type=int, help="target degree (below input)"
    )
    red.add_argument(
        "--continuity",
        type=_parse_continuity,
        default=(0, 0),
        metavar="K,H",
        help="endpoint continuity orders, each 0 or 1 (default 0,0)",
    )
    red.add_argument(
        "--samples",
        type=int,
        default=1001,
        help="parameter grid size for the enclosure margin (default 1001)",
    )
    red.add_argument(
        "--d-mode",
        choices=["max", "sum"],
        default="max",
        help="aggregate center errors by max or sum (default max)",
    )
    red.add_argument("--svg", help="also write an SVG comparison here")
    red.add_argument("--report", help="also write a JSON report here")
    return parser


def _run_reduce(args: argparse.Namespace) -> int:
    try:
        curve = load_curve(args.input)
    except (OSError, CurveLoadError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    config = ReductionConfig(
        degree=args.degree,
        continuity=args.continuity,
        samples=args.samples,
        d_mode=DistanceMode(args.d_mode),
    )
    try:
        result = reduce(curve, config)
    except ReductionStageError as exc:
        print(f"error: reduction failed at stage {exc.stage}: {exc}",
              file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        save_curve(result.curve, args.output)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return 1

    report = measure(curve, result.curve, samples=args.samples)
    k, h = config.continuity
    print(f"reduced degree {curve.degree} -> {config.degree} "
          f"with C^({k},{h}) endpoints")
    if result.exact:
        print("input was degree reducible: reduction is exact")
    print(f"enclosure margin d = {result.d:.6f}")
    print(f"max center error   = {report.center_error:.6f} "
          f"at t = {report.center_argmax:.4f}")
    print(f"max radius error   = {report.radius_error:.6f} "
          f"at t = {report.radius_argmax:.4f}")
    print(f"wrote {args.output}")

    if args.svg:
        try:
            save_comparison(curve, result.curve, args.svg)
        except OSError as exc:
            print(f"error: cannot write {args.svg}: {exc}", file=sys.stderr)
            return 1
        print(f"wrote {args.svg}")

    if args.report:
        payload = {
            "input": args.input,
            "output": args.output,
            "degree": {"from": curve.degree, "to": config.degree},
            "continuity": {"k": k, "h": h},
            "samples": args.samples,
            "d_mode": config.d_mode.value,
            "d": result.d,
            "exact": result.exact,
            "errors": {
                "center_error": report.center_error,
                "radius_error": report.radius_error,
                "center_argmax": report.center_argmax,
                "radius_argmax": report.radius_argmax,
                "samples": report.samples,
            },
            "qp": {
                "weight_objective": result.weight_solution.objective,
                "weight_kkt_residual": result.weight_solution.kkt_residual,
                "radius_objective": result.radius_solution.objective,
                "radius_kkt_residual": result.radius_solution.kkt_residual,
            },
        }
        try:
            with open(args.report, "w", encoding="utf-8") as handle:
                json.dump(payload, handle, indent=2)
                handle.write("\n")
        except OSError as exc:
            print(f"error: cannot write {args.report}: {exc}", file=sys.stderr)
            return 1
        print(f"wrote {args.report}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "reduce":
        return _run_reduce(args)
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
