"""Mesh quality measurement: histograms and summary statistics.

Every histogram has exactly 21 bins: 20 regular bins plus one overflow bin.
Size-related kinds are measured relative to the spacing field, so a value of
100% means the mesh matches the requested spacing exactly at that spot.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .diagnostics import DiagnosticCode, MeshError, MeshWarning, ParamError
from .meshmodel import Mesh, boundary_loops, euler_check
from .spacing import SpacingField, eval_spacing

SQRT3_4 = math.sqrt(3.0) / 4.0
BIN_COUNT = 21


class HistogramKind(Enum):
    EDGES_PER_NODE = 1
    TRIANGLES_PER_NODE = 2
    TRIANGLE_AREA = 3        # percent of the ideal area at the centroid
    EDGE_LENGTH = 4          # percent of the spacing at the midpoint
    ANGLE = 5                # percent of 60 degrees

    @property
    def needs_spacing(self) -> bool:
        return self in (HistogramKind.TRIANGLE_AREA, HistogramKind.EDGE_LENGTH)


# regular-bin width per kind; counting kinds use width 1
_WIDTH = {
    HistogramKind.EDGES_PER_NODE: 1,
    HistogramKind.TRIANGLES_PER_NODE: 1,
    HistogramKind.TRIANGLE_AREA: 20,
    HistogramKind.EDGE_LENGTH: 20,
    HistogramKind.ANGLE: 15,
}


# what each kind's value is measured against, for the report header
_RULE = {
    HistogramKind.EDGES_PER_NODE:
        "bins: edges meeting at a node, width 1, last bin 20+",
    HistogramKind.TRIANGLES_PER_NODE:
        "bins: triangles touching a node, width 1, last bin 20+",
    HistogramKind.TRIANGLE_AREA:
        "bins: area as % of the target area at the centroid, width 20%, last bin 400%+",
    HistogramKind.EDGE_LENGTH:
        "bins: length as % of the spacing at the midpoint, width 20%, last bin 400%+",
    HistogramKind.ANGLE:
        "bins: angle as % of 60 degrees, width 15%, last bin 300%+",
}


@dataclass(frozen=True)
class Histogram:
    kind: HistogramKind
    counts: tuple[int, ...]
    population: int

    @property
    def width(self) -> int:
        return _WIDTH[self.kind]

    @property
    def bin_rule(self) -> str:
        return _RULE[self.kind]

    def bin_label(self, i: int) -> str:
        w = self.width
        if w == 1:
            return f"{i}" if i < BIN_COUNT - 1 else f"{i}+"
        if i < BIN_COUNT - 1:
            return f"{i * w}%..{(i + 1) * w}%"
        return f"{i * w}%+"


def _bin_index(value: float, width: int) -> int:
    i = int(value // width)
    return min(max(i, 0), BIN_COUNT - 1)


def _delta_at(spacing: SpacingField, x: float, y: float) -> float:
    d = eval_spacing(spacing, x, y)
    if d <= 0.0:
        raise MeshError(DiagnosticCode.INVALID_PARAMS,
                        f"spacing is not positive at ({x:g},{y:g})")
    return d


def _warn_if_counts_off(mesh: Mesh) -> None:
    """Flag connectivity tables that disagree with the boundary topology.

    A closed triangulated region must satisfy nodes - edges + triangles =
    1 - holes. Statistics on a mesh that breaks this are suspect, so the
    violation is attached to every histogram request as a warning.
    """
    loops = boundary_loops(mesh)
    if not loops:
        return
    holes = len(loops) - 1
    if not euler_check(mesh, holes):
        warnings.warn(MeshWarning(
            f"counts nn={mesh.nn} nl={mesh.nl} nt={mesh.nt} do not close "
            f"up for {holes} hole(s)", DiagnosticCode.EULER_VIOLATION))


def mesh_histogram(mesh: Mesh, kind: HistogramKind,
                   spacing: Optional[SpacingField] = None) -> Histogram:
    """Distribution of one quality measure over the whole mesh."""
    if kind.needs_spacing and spacing is None:
        raise ParamError(f"{kind.name} needs a spacing field")
    _warn_if_counts_off(mesh)
    counts = [0] * BIN_COUNT
    width = _WIDTH[kind]
    if kind is HistogramKind.EDGES_PER_NODE:
        per = [0] * mesh.nn
        for e in mesh.edges:
            per[e.a] += 1
            per[e.b] += 1
        for v in per:
            counts[_bin_index(v, width)] += 1
        population = mesh.nn
    elif kind is HistogramKind.TRIANGLES_PER_NODE:
        per = [0] * mesh.nn
        for t in mesh.triangles:
            for n in t.nodes:
                per[n] += 1
        for v in per:
            counts[_bin_index(v, width)] += 1
        population = mesh.nn
    elif kind is HistogramKind.TRIANGLE_AREA:
        for t in mesh.triangles:
            p1, p2, p3 = (mesh.points[n] for n in t.nodes)
            area = 0.5 * abs((p2.x - p1.x) * (p3.y - p1.y)
                             - (p2.y - p1.y) * (p3.x - p1.x))
            cx = (p1.x + p2.x + p3.x) / 3.0
            cy = (p1.y + p2.y + p3.y) / 3.0
            d = _delta_at(spacing, cx, cy)
            pct = 100.0 * area / (SQRT3_4 * d * d)
            counts[_bin_index(pct, width)] += 1
        population = mesh.nt
    elif kind is HistogramKind.EDGE_LENGTH:
        for e in mesh.edges:
            pa, pb = mesh.points[e.a], mesh.points[e.b]
            d = _delta_at(spacing, 0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y))
            pct = 100.0 * math.hypot(pa.x - pb.x, pa.y - pb.y) / d
            counts[_bin_index(pct, width)] += 1
        population = mesh.nl
    elif kind is HistogramKind.ANGLE:
        for t in mesh.triangles:
            p1, p2, p3 = (mesh.points[n] for n in t.nodes)
            for o, u, v in ((p1, p2, p3), (p2, p3, p1), (p3, p1, p2)):
                ux, uy = u.x - o.x, u.y - o.y
                vx, vy = v.x - o.x, v.y - o.y
                ang = math.degrees(
                    math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy))
                counts[_bin_index(100.0 * ang / 60.0, width)] += 1
        population = 3 * mesh.nt
    else:  # pragma: no cover - closed enum
        raise ParamError(f"unknown kind {kind}")
    return Histogram(kind, tuple(counts), population)


def histogram_report(hist: Histogram) -> str:
    """Plain-text rendering: kind, total and bin rule, then one line per bin."""
    lines = [f"{hist.kind.name}  (n={hist.population})",
             f"  {hist.bin_rule}"]
    for i, c in enumerate(hist.counts):
        lines.append(f"  {hist.bin_label(i):>10}: {c}")
    return "\n".join(lines)


def mesh_statistics(mesh: Mesh) -> dict:
    """Entity counts plus the boundary-loop consistency check."""
    loops = boundary_loops(mesh)
    holes = max(len(loops) - 1, 0)
    ok = euler_check(mesh, holes) if loops else None
    return {
        "nodes": mesh.nn,
        "edges": mesh.nl,
        "triangles": mesh.nt,
        "boundary_loops": len(loops),
        "holes": holes,
        "euler_ok": ok,
    }


def quality_report(mesh: Mesh, spacing: Optional[SpacingField] = None) -> str:
    """Full text report: counts plus every histogram that can be computed."""
    stats = mesh_statistics(mesh)
    lines = [
        f"nodes:     {stats['nodes']}",
        f"edges:     {stats['edges']}",
        f"triangles: {stats['triangles']}",
        f"loops:     {stats['boundary_loops']} ({stats['holes']} hole(s))",
    ]
    if stats["euler_ok"] is not None:
        lines.append(f"closed:    {'yes' if stats['euler_ok'] else 'NO'}")
    for kind in HistogramKind:
        if kind.needs_spacing and spacing is None:
            continue
        lines.append("")
        lines.append(histogram_report(mesh_histogram(mesh, kind, spacing)))
    return "\n".join(lines)
