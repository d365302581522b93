"""Boundary handling: `.mg` parsing, spline/polyline discretization, and the
starting-edge pickers for free-node triangulation.

The `.mg` format is an ASCII record:

    SEGMENT
    <segment count>
    <segment number> <point count> <next segment> 0
    <1-based point index> <x> <y>
    ...
    ENDRC

Fields are separated by one or more spaces (never tabs). Segments may appear
in any order; the `next` column links them into closed loops. The outer loop
must run counter-clockwise and inner loops clockwise, so the meshed region is
always to the left of each directed edge. Content after ENDRC is ignored with
a warning.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.interpolate import CubicSpline

from .diagnostics import (DiagnosticCode, MeshError, MeshWarning,
                          OrientationError, ParamError, ParseError)
from .geom import DEFAULT_TOL, Point2, Tolerances
from .meshmodel import Mesh, NodeId

SEGMENT_NODE_CAP = 1_000_000   # hard sanity cap per segment


@dataclass
class BoundarySegment:
    id: int                    # 1-based segment number from the file
    points: list[Point2]       # describing nodes, ordered
    next: int                  # id of the connecting segment
    header_line: int = 0       # 1-based source line, for error reporting


@dataclass
class Domain:
    segments: list[BoundarySegment]
    loops: list[list[int]]     # each loop: segment ids in traversal order
    outer_loop: int            # index into loops

    def loop_polygon(self, loop_index: int) -> list[Point2]:
        """Describing nodes of one loop, shared endpoints dropped."""
        poly: list[Point2] = []
        by_id = {s.id: s for s in self.segments}
        for sid in self.loops[loop_index]:
            poly.extend(by_id[sid].points[:-1])
        return poly

    @property
    def holes(self) -> int:
        return len(self.loops) - 1


@dataclass
class DiscretizedBoundary:
    mesh: Mesh
    mb: list[int]                    # nodes owned by each segment, file order
    loops: list[list[NodeId]]        # node cycles in traversal order
    outer_loop: int = 0

    @property
    def holes(self) -> int:
        return len(self.loops) - 1


# -- parsing -----------------------------------------------------------------

def _signed_area(poly: Sequence[Point2]) -> float:
    s = 0.0
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return 0.5 * s


def _point_in_polygon(p: Point2, poly: Sequence[Point2]) -> bool:
    inside = False
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        if (y1 > p.y) != (y2 > p.y):
            xc = x1 + (p.y - y1) * (x2 - x1) / (y2 - y1)
            if p.x < xc:
                inside = not inside
    return inside


def parse_mg(text: str) -> Domain:
    lines = text.splitlines()
    pos = 0

    def next_content() -> tuple[Optional[int], list[str]]:
        nonlocal pos
        while pos < len(lines):
            raw = lines[pos]
            pos += 1
            if "\t" in raw:
                raise ParseError("tab separator is not allowed", line=pos)
            if raw.strip():
                return pos, raw.split()
        return None, []

    lineno, toks = next_content()
    if lineno is None:
        raise ParseError("missing SEGMENT record")
    if toks[0] != "SEGMENT":
        raise ParseError(f"unknown record keyword {toks[0]!r}", line=lineno)

    lineno, toks = next_content()
    if lineno is None or len(toks) != 1 or not toks[0].lstrip("-").isdigit():
        raise ParseError("expected segment count", line=lineno)
    nseg = int(toks[0])
    if nseg < 1:
        raise ParseError(f"segment count must be positive, got {nseg}", line=lineno)

    segments: dict[int, BoundarySegment] = {}
    order: list[int] = []
    for _ in range(nseg):
        lineno, toks = next_content()
        if lineno is None:
            raise ParseError("unexpected end of file inside SEGMENT record",
                             line=len(lines) + 1)
        try:
            sid, npts, nxt, trailing = (int(t) for t in toks)
        except ValueError:
            raise ParseError(f"bad segment header {' '.join(toks)!r}",
                             line=lineno) from None
        if trailing != 0:
            raise ParseError("fourth header field must be 0", line=lineno)
        if npts < 2:
            raise ParseError("segment needs at least 2 points", line=lineno)
        if sid in segments:
            raise ParseError(f"duplicate segment number {sid}", line=lineno)
        header_line = lineno
        pts: list[Point2] = []
        for k in range(1, npts + 1):
            lineno, toks = next_content()
            if lineno is None:
                raise ParseError("unexpected end of file in point list",
                                 line=len(lines) + 1)
            if len(toks) != 3:
                raise ParseError(f"point line needs 3 fields, got {len(toks)}",
                                 line=lineno)
            try:
                idx = int(toks[0])
                x = float(toks[1])
                y = float(toks[2])
            except ValueError:
                raise ParseError(f"bad point line {' '.join(toks)!r}",
                                 line=lineno) from None
            if idx != k:
                raise ParseError(f"point index {idx}, expected {k}", line=lineno)
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ParseError("non-finite coordinate", line=lineno)
            pts.append(Point2(x, y))
        segments[sid] = BoundarySegment(sid, pts, nxt, header_line)
        order.append(sid)

    lineno, toks = next_content()
    if lineno is None or toks[0] != "ENDRC":
        raise ParseError("missing ENDRC", line=lineno)
    while True:
        lineno, toks = next_content()
        if lineno is None:
            break
        warnings.warn(MeshWarning(
            f"ignoring unknown record {toks[0]!r} after ENDRC (line {lineno})"))

    # linkage validation: every next target exists and is targeted exactly once
    for sid in order:
        seg = segments[sid]
        if seg.next not in segments:
            raise ParseError(
                f"segment {sid} connects to missing segment {seg.next}",
                line=seg.header_line)
    indeg: dict[int, int] = {sid: 0 for sid in order}
    for sid in order:
        indeg[segments[sid].next] += 1
    for sid in order:
        if indeg[sid] != 1:
            raise ParseError(
                f"segment linkage does not form closed loops "
                f"(segment {sid} is the target of {indeg[sid]} segments)",
                line=segments[sid].header_line)

    # follow linkage into loops; in/out degree 1 guarantees disjoint cycles
    seen: set[int] = set()
    loops: list[list[int]] = []
    for sid in order:
        if sid in seen:
            continue
        loop = [sid]
        seen.add(sid)
        cur = segments[sid].next
        while cur != sid:
            loop.append(cur)
            seen.add(cur)
            cur = segments[cur].next
        loops.append(loop)

    # geometric continuity of linked endpoints
    extent = 0.0
    for seg in segments.values():
        for p in seg.points:
            extent = max(extent, abs(p.x), abs(p.y))
    join_tol = 1e-9 * max(extent, 1.0)
    for sid, seg in segments.items():
        nxt = segments[seg.next]
        last = seg.points[-1]
        first = nxt.points[0]
        if math.hypot(last.x - first.x, last.y - first.y) > join_tol:
            raise ParseError(
                f"segment {sid} ends at ({last.x:g},{last.y:g}) but segment "
                f"{seg.next} starts at ({first.x:g},{first.y:g})",
                line=seg.header_line)

    domain = Domain([segments[sid] for sid in order], loops, 0)

    # orientation: exactly one CCW loop containing all others; the rest CW inside it
    polys = [domain.loop_polygon(i) for i in range(len(loops))]
    areas = [_signed_area(p) for p in polys]
    outer = max(range(len(loops)), key=lambda i: abs(areas[i]))
    if areas[outer] <= 0:
        raise OrientationError(
            "outer boundary loop must run counter-clockwise "
            "(meshed region to the left of each edge)")
    for i in range(len(loops)):
        if i == outer:
            continue
        if areas[i] >= 0:
            raise OrientationError(
                f"inner loop (segments {loops[i]}) must run clockwise")
        if not _point_in_polygon(polys[i][0], polys[outer]):
            raise OrientationError(
                f"inner loop (segments {loops[i]}) lies outside the outer loop")
        for j in range(len(loops)):
            if j not in (i, outer) and _point_in_polygon(polys[i][0], polys[j]):
                raise OrientationError(
                    f"inner loops (segments {loops[i]} and {loops[j]}) are nested")
    domain.outer_loop = outer
    return domain


def format_mg(domain: Domain) -> str:
    """Serialize a Domain back to `.mg` text (round-trips through parse_mg)."""
    out = ["SEGMENT", str(len(domain.segments))]
    for seg in domain.segments:
        out.append(f"{seg.id} {len(seg.points)} {seg.next} 0")
        for k, p in enumerate(seg.points, start=1):
            out.append(f"{k} {p.x:.17g} {p.y:.17g}")
    out.append("ENDRC")
    return "\n".join(out) + "\n"


# -- sampling ----------------------------------------------------------------

def _march(dense_x: np.ndarray, dense_y: np.ndarray, dense_s: np.ndarray,
           spacing, cap: int) -> np.ndarray:
    """March along a densely tabulated curve with local step delta.

    Returns arclength positions including both endpoints. The trailing partial
    interval is folded in by uniformly rescaling all steps: the step count is
    rounded to the nearest whole number of local-delta intervals (at least 1).
    """
    total = float(dense_s[-1])
    positions = [0.0]
    s = 0.0
    while True:
        x = float(np.interp(s, dense_s, dense_x))
        y = float(np.interp(s, dense_s, dense_y))
        d = float(spacing(x, y))
        if not (d > 0.0 and math.isfinite(d)):
            raise ParamError(f"spacing field returned {d!r} at ({x:g},{y:g})")
        s_next = s + d
        if s_next >= total * (1.0 - 1e-9):
            leftover = total - s
            if positions[-1] > 0.0 and leftover > 0.5 * d:
                positions.append(s_next)
            break
        positions.append(s_next)
        s = s_next
        if len(positions) > cap:
            raise MeshError(DiagnosticCode.SEGMENT_OVERFLOW,
                            f"more than {cap} nodes on one boundary segment")
    arr = np.asarray(positions)
    if len(arr) == 1:      # spacing coarser than the segment: keep endpoints
        return np.array([0.0, total])
    arr *= total / arr[-1]
    arr[-1] = total
    return arr


def _dense_polyline(pts: list[Point2]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    xs = np.array([p.x for p in pts])
    ys = np.array([p.y for p in pts])
    ss = np.concatenate([[0.0], np.cumsum(np.hypot(np.diff(xs), np.diff(ys)))])
    return xs, ys, ss


def _dense_spline(pts: list[Point2], samples_per_span: int = 256):
    xs = np.array([p.x for p in pts])
    ys = np.array([p.y for p in pts])
    chord = np.concatenate([[0.0], np.cumsum(np.hypot(np.diff(xs), np.diff(ys)))])
    spl_x = CubicSpline(chord, xs, bc_type="natural")
    spl_y = CubicSpline(chord, ys, bc_type="natural")
    t = np.linspace(0.0, chord[-1], samples_per_span * (len(pts) - 1) + 1)
    dx = spl_x(t)
    dy = spl_y(t)
    ds = np.concatenate([[0.0], np.cumsum(np.hypot(np.diff(dx), np.diff(dy)))])
    return dx, dy, ds


def _sample(pts: list[Point2], spacing, use_spline: bool, tol: Tolerances,
            cap: int) -> list[Point2]:
    if len(pts) < 2:
        raise MeshError(DiagnosticCode.INPUT_TOO_SMALL,
                        "a segment needs at least 2 describing nodes")
    chord_total = sum(math.hypot(pts[i + 1].x - pts[i].x, pts[i + 1].y - pts[i].y)
                      for i in range(len(pts) - 1))
    if chord_total < tol.zero_strip or chord_total == 0.0:
        raise MeshError(DiagnosticCode.DEGENERATE_SEGMENT,
                        "segment chord length is below the zero strip")
    if use_spline and len(pts) >= 3:
        dx, dy, ds = _dense_spline(pts)
    else:
        dx, dy, ds = _dense_polyline(pts)
    arc = _march(dx, dy, ds, spacing, cap)
    out_x = np.interp(arc, ds, dx)
    out_y = np.interp(arc, ds, dy)
    out = [Point2(float(x), float(y)) for x, y in zip(out_x, out_y)]
    out[0] = pts[0]          # endpoints exact, bit for bit
    out[-1] = pts[-1]
    return out


def spline_sample(points: Sequence[Point2], spacing,
                  tol: Tolerances = DEFAULT_TOL,
                  cap: int = SEGMENT_NODE_CAP) -> list[Point2]:
    """Nodes along the natural cubic spline through the describing points,
    stepped by the local spacing value (chord-length parameterization)."""
    pts = [Point2(float(p[0]), float(p[1])) for p in points]
    return _sample(pts, spacing, True, tol, cap)


def polyline_sample(points: Sequence[Point2], spacing,
                    tol: Tolerances = DEFAULT_TOL,
                    cap: int = SEGMENT_NODE_CAP) -> list[Point2]:
    """Same marching, but straight along the describing polyline."""
    pts = [Point2(float(p[0]), float(p[1])) for p in points]
    return _sample(pts, spacing, False, tol, cap)


def discretize_boundary(domain: Domain, spacing, use_spline: bool = False,
                        tol: Tolerances = DEFAULT_TOL,
                        node_budget: Optional[int] = None,
                        segment_cap: Optional[int] = None) -> DiscretizedBoundary:
    """Sample every segment and assemble the boundary-only mesh.

    Nodes shared by linked segments are created once; each segment owns its
    sampled nodes except the final one (which belongs to the next segment).
    """
    mesh = Mesh()
    by_id = {s.id: s for s in domain.segments}
    mb: dict[int, int] = {}
    node_loops: list[list[NodeId]] = []
    cap = segment_cap if segment_cap is not None else SEGMENT_NODE_CAP
    for loop in domain.loops:
        loop_nodes: list[NodeId] = []
        first_node: Optional[NodeId] = None
        prev_node: Optional[NodeId] = None
        for li, sid in enumerate(loop):
            seg = by_id[sid]
            pts = _sample(seg.points, spacing, use_spline, tol, cap)
            mb[sid] = len(pts) - 1
            if first_node is None:
                first_node = mesh.add_point(pts[0])
                prev_node = first_node
                loop_nodes.append(first_node)
            last_of_loop = li == len(loop) - 1
            interior = pts[1:-1] if last_of_loop else pts[1:]
            for p in interior:
                nid = mesh.add_point(p)
                if node_budget is not None and mesh.nn > node_budget:
                    raise MeshError(DiagnosticCode.NODE_BUDGET_EXCEEDED,
                                    f"boundary needs more than {node_budget} nodes")
                mesh.add_boundary_edge(prev_node, nid)
                loop_nodes.append(nid)
                prev_node = nid
            if last_of_loop:
                mesh.add_boundary_edge(prev_node, first_node)
        node_loops.append(loop_nodes)
    return DiscretizedBoundary(
        mesh=mesh,
        mb=[mb[s.id] for s in domain.segments],
        loops=node_loops,
        outer_loop=domain.outer_loop,
    )


def point_in_domain(boundary: DiscretizedBoundary, p: Point2) -> bool:
    """Winding-number test against the oriented boundary edges.

    With the outer loop CCW and holes CW, points of the meshed region wind
    exactly once.
    """
    w = 0
    pts = boundary.mesh.points
    for e in boundary.mesh.edges:
        if not e.is_boundary:
            continue
        a = pts[e.a]
        b = pts[e.b]
        cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
        if a.y <= p.y:
            if b.y > p.y and cross > 0:
                w += 1
        elif b.y <= p.y and cross < 0:
            w -= 1
    return w == 1


# -- free-node starting edge --------------------------------------------------

def min_y_node(points: Sequence[Point2]) -> NodeId:
    """Index of the lowest point; ties go to the smallest index."""
    if not points:
        raise MeshError(DiagnosticCode.EMPTY_INPUT, "no points")
    best = 0
    for i in range(1, len(points)):
        if points[i][1] < points[best][1]:
            best = i
    return best


def min_angle_node(points: Sequence[Point2], n1: NodeId) -> NodeId:
    """Node whose direction from n1 makes the smallest absolute angle with +x.

    Ties broken by smaller distance, then smaller index.
    """
    if len(points) < 2:
        raise MeshError(DiagnosticCode.EMPTY_INPUT, "need a second point")
    px, py = points[n1]
    best: Optional[tuple[float, float, int]] = None
    for i, p in enumerate(points):
        if i == n1:
            continue
        dx = p[0] - px
        dy = p[1] - py
        key = (abs(math.atan2(dy, dx)), dx * dx + dy * dy, i)
        if best is None or key < best:
            best = key
    assert best is not None
    return best[2]
