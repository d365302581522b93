"""End-to-end meshing pipeline: parameters, dispatch, warning collection.

run_mesh is the single entry point the CLI and the HTTP service share. It
parses the boundary text, discretizes, runs the chosen generator, applies
the optional post passes and returns the mesh together with its quality
histograms and every warning raised on the way, whether it was attached to
the mesh or raised through the warnings module.
"""

from __future__ import annotations

import math
import warnings as _warnings
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .advancing_front import FrontStrategy, advancing_front_mesh
from .boundary import DiscretizedBoundary, Domain, discretize_boundary, parse_mg
from .delaunay import DelaunayMode, delaunay_mesh
from .diagnostics import Diagnostic, DiagnosticCode, MeshError, MeshWarning, ParamError
from .geom import Tolerances
from .meshmodel import Mesh, _crossing_pairs
from .quality import Histogram, HistogramKind, mesh_histogram
from .refine import SwapCriterion, smooth_mesh, swap_edges
from .spacing import SpacingField
from .steiner import SteinerOptions, steiner_mesh


class MeshMethod(Enum):
    DELAUNAY = "delaunay"
    ADVANCING_FRONT = "afm"
    STEINER = "steiner"


@dataclass
class MeshParams:
    spacing: SpacingField
    method: MeshMethod = MeshMethod.STEINER
    factor: float = 1.0
    afm_version: FrontStrategy = FrontStrategy.FIRST_ACTIVE_EDGE
    swap: Optional[SwapCriterion] = SwapCriterion.DELAUNAY_MAX_MIN
    smoothing: bool = True
    use_spline: bool = False
    final_edge_check: bool = True
    max_nodes: Optional[int] = None
    max_rounds: int = 100

    def __post_init__(self):
        if not 1.0 <= self.factor <= 3.0:
            raise ParamError(f"factor must lie in [1, 3], got {self.factor}")
        if self.max_rounds < 1:
            raise ParamError("max_rounds must be at least 1")
        if self.max_nodes is not None and self.max_nodes < 3:
            raise ParamError("max_nodes must be at least 3")


@dataclass
class MeshResult:
    mesh: Mesh
    boundary: DiscretizedBoundary
    histograms: dict[HistogramKind, Histogram] = field(default_factory=dict)
    warnings: list[Diagnostic] = field(default_factory=list)


def domain_tolerances(domain: Domain) -> Tolerances:
    """Tolerances scaled to the domain's bounding box diagonal."""
    xs = []
    ys = []
    for seg in domain.segments:
        for p in seg.points:
            xs.append(p.x)
            ys.append(p.y)
    if not xs:
        return Tolerances()
    diag = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
    return Tolerances.scaled(diag if diag > 0 else 1.0)


def _drain(record: list) -> list[Diagnostic]:
    out = []
    for w in record:
        msg = w.message
        if isinstance(msg, MeshWarning):
            out.append(Diagnostic(msg.code, msg.message))
        else:
            out.append(Diagnostic(DiagnosticCode.CHECK_MESH_WARNING, str(msg)))
    record.clear()
    return out


def _dedupe(diags: list[Diagnostic]) -> list[Diagnostic]:
    seen = set()
    out = []
    for d in diags:
        key = (d.code, d.message)
        if key not in seen:
            seen.add(key)
            out.append(d)
    return out


def run_mesh(mg_text: str, params: MeshParams,
             dry_run: bool = False) -> MeshResult:
    """Mesh the domain described by boundary text, per the parameters.

    The result always carries all five quality histograms plus every
    warning collected during the run. With dry_run only the parse and the
    boundary discretization happen; the result's mesh is the boundary
    mesh (no triangles, no histograms), handy for previewing node
    placement.
    """
    domain = parse_mg(mg_text)
    tol = domain_tolerances(domain)
    collected: list[Diagnostic] = []
    with _warnings.catch_warnings(record=True) as record:
        _warnings.simplefilter("always")
        boundary = discretize_boundary(domain, params.spacing,
                                       use_spline=params.use_spline, tol=tol,
                                       node_budget=params.max_nodes)
        collected += _drain(record)
        if dry_run:
            mesh = boundary.mesh.copy()
            collected += list(mesh.warnings)
            return MeshResult(mesh, boundary, {}, _dedupe(collected))
        if params.method is MeshMethod.DELAUNAY:
            mode = (DelaunayMode.WITH_SPLINE_BOUNDARIES if params.use_spline
                    else DelaunayMode.WITH_BOUNDARIES)
            mesh = delaunay_mesh(boundary=boundary, mode=mode, tol=tol)
        elif params.method is MeshMethod.ADVANCING_FRONT:
            mesh = advancing_front_mesh(boundary, params.spacing,
                                        params.afm_version, tol,
                                        max_nodes=params.max_nodes)
            if params.swap is not None:
                swap_edges(mesh, params.swap, tol)
            if params.smoothing:
                smooth_mesh(mesh)
        else:
            options = SteinerOptions(factor=params.factor,
                                     smoothing=params.smoothing,
                                     final_edge_check=False,
                                     max_rounds=params.max_rounds)
            mesh = steiner_mesh(boundary, params.spacing, options, tol,
                                max_nodes=params.max_nodes)
            if params.swap is not None:
                swap_edges(mesh, params.swap, tol)
        if params.final_edge_check:
            pairs = _crossing_pairs(mesh, tol, limit=1)
            if pairs:
                e1, e2 = pairs[0]
                raise MeshError(DiagnosticCode.EDGE_CROSSING_DETECTED,
                                f"edges {e1} and {e2} cross in the finished mesh")
        histograms = {kind: mesh_histogram(mesh, kind, params.spacing)
                      for kind in HistogramKind}
        collected += _drain(record)
    collected += list(mesh.warnings)
    return MeshResult(mesh, boundary, histograms, _dedupe(collected))
