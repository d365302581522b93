"""Command line interface.

    trigrid mesh --input boundary.mg --spacing uniform:0.25 --svg out.svg
    trigrid stats --input boundary.mg --spacing uniform:0.25 --kind 5
    trigrid serve --port 8000

Exit codes: 0 clean success, 1 success with generation warnings,
2 input error (unreadable or invalid input, bad parameters, meshing
failure), 3 internal error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from .advancing_front import FrontStrategy
from .diagnostics import MeshError, ParseError
from .export import export_json, render_svg
from .pipeline import MeshMethod, MeshParams, MeshResult, run_mesh
from .quality import HistogramKind, histogram_report, quality_report
from .refine import SwapCriterion
from .spacing import parse_spacing

_SWAPS = {"delaunay": SwapCriterion.DELAUNAY_MAX_MIN,
          "minmax": SwapCriterion.MIN_MAX,
          "none": None}
_VERSIONS = {"first": FrontStrategy.FIRST_ACTIVE_EDGE,
             "smallest": FrontStrategy.SMALLEST_EDGE}


def _add_mesh_options(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--input", required=True, metavar="F.mg",
                     help="boundary file, or - for stdin")
    cmd.add_argument("--spacing", required=True,
                     help="uniform:D | circular:DA,DB,BETA[,XS,YS] | "
                          "stripe:DA,DB,ALPHA_DEG,LEN[,XC,YC]")
    cmd.add_argument("--method", choices=[m.value for m in MeshMethod],
                     default="steiner")
    cmd.add_argument("--afm-version", choices=sorted(_VERSIONS),
                     default="first",
                     help="base edge order for the advancing front")
    cmd.add_argument("--swap", choices=["delaunay", "minmax", "none"],
                     default="delaunay", help="final edge swap criterion")
    cmd.add_argument("--smooth", action=argparse.BooleanOptionalAction,
                     default=True, help="relax interior nodes")
    cmd.add_argument("--final-edge-check",
                     action=argparse.BooleanOptionalAction, default=True,
                     help="closing scan for crossing edges")
    cmd.add_argument("--factor", type=float, default=1.0,
                     help="size slack for refinement, between 1 and 3")
    cmd.add_argument("--spline", action="store_true",
                     help="curve segments through their points")
    cmd.add_argument("--max-nodes", type=int, default=None)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigrid",
        description="Unstructured triangular mesh generation for planar domains.")
    sub = parser.add_subparsers(dest="command", required=True)

    mesh = sub.add_parser("mesh", help="mesh a boundary description")
    _add_mesh_options(mesh)
    mesh.add_argument("--out", metavar="M.json",
                      help="write the mesh JSON here instead of stdout")
    mesh.add_argument("--svg", metavar="M.svg", help="also render an SVG")
    mesh.add_argument("--stats", action="store_true",
                      help="print the quality report to stderr")

    stats = sub.add_parser(
        "stats", help="mesh a boundary and report quality histograms")
    _add_mesh_options(stats)
    stats.add_argument("--kind", type=int, choices=range(1, 6), default=None,
                       help="one histogram instead of the full report")

    serve = sub.add_parser("serve", help="run the local HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _params(args: argparse.Namespace) -> MeshParams:
    return MeshParams(
        spacing=parse_spacing(args.spacing),
        method=MeshMethod(args.method),
        factor=args.factor,
        afm_version=_VERSIONS[args.afm_version],
        swap=_SWAPS[args.swap],
        smoothing=args.smooth,
        use_spline=args.spline,
        final_edge_check=args.final_edge_check,
        max_nodes=args.max_nodes,
    )


def _report_warnings(result: MeshResult) -> int:
    for diag in result.warnings:
        print(f"warning: {diag}", file=sys.stderr)
    return 1 if result.warnings else 0


def _cmd_mesh(args: argparse.Namespace) -> int:
    params = _params(args)
    result = run_mesh(_read(args.input), params)
    code = _report_warnings(result)
    text = export_json(result.mesh)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")
    if args.svg:
        Path(args.svg).write_text(render_svg(result.mesh), encoding="utf-8")
    if args.stats:
        print(quality_report(result.mesh, params.spacing), file=sys.stderr)
    return code


def _cmd_stats(args: argparse.Namespace) -> int:
    params = _params(args)
    result = run_mesh(_read(args.input), params)
    code = _report_warnings(result)
    if args.kind is None:
        print(quality_report(result.mesh, params.spacing))
    else:
        print(histogram_report(result.histograms[HistogramKind(args.kind)]))
    return code


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "mesh":
            return _cmd_mesh(args)
        if args.command == "stats":
            return _cmd_stats(args)
        return _cmd_serve(args)
    except MeshError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - the boundary of the program
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
