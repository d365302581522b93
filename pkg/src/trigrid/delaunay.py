"""Delaunay triangulation by front advancement with smallest circumcircles.

Each active edge looks for the third node of its triangle on its left side:
starting from the left-side node nearest the edge midpoint, the circumcircle
through the edge and the candidate is tested; while some other node lies
strictly inside, the inside node closest to the circumcenter becomes the new
candidate. The circle shrinks at every step, so the iteration ends with an
empty circumcircle. In constrained modes a candidate whose new edges would
cross an existing edge is excluded and the search repeats without it.
"""

from __future__ import annotations

import math
from collections import deque
from enum import Enum
from typing import Callable, Optional, Sequence

import numpy as np

from .boundary import DiscretizedBoundary, min_angle_node, min_y_node, point_in_domain
from .diagnostics import DiagnosticCode, MeshError
from .geom import (DEFAULT_TOL, Point2, Tolerances, circumcircle, edge_cross,
                   segment_point_dist)
from .meshmodel import Mesh, NodeId

Observer = Callable[[Point2, Point2], None]


class DelaunayMode(Enum):
    NO_BOUNDARIES = 0
    WITH_BOUNDARIES = 1
    WITH_SPLINE_BOUNDARIES = 2


def _would_cross(mesh: Mesh, u: NodeId, v: NodeId, tol: Tolerances) -> bool:
    """True if a new edge u-v would cross any existing edge."""
    pts = mesh.points
    pu, pv = pts[u], pts[v]
    x0, x1 = (pu.x, pv.x) if pu.x <= pv.x else (pv.x, pu.x)
    y0, y1 = (pu.y, pv.y) if pu.y <= pv.y else (pv.y, pu.y)
    for e in mesh.edges:
        if e.a in (u, v) or e.b in (u, v):
            continue
        pa, pb = pts[e.a], pts[e.b]
        if max(pa.x, pb.x) < x0 or min(pa.x, pb.x) > x1:
            continue
        if max(pa.y, pb.y) < y0 or min(pa.y, pb.y) > y1:
            continue
        if edge_cross(pu, pv, pa, pb, tol):
            return True
    return False


def _side_taken(mesh: Mesh, u: NodeId, v: NodeId) -> bool:
    """True when some triangle already sits left of u->v."""
    eid = mesh.find_edge(u, v)
    if eid is None:
        return False
    e = mesh.edges[eid]
    return (e.t_left if (e.a, e.b) == (u, v) else e.t_right) is not None


def _third_node(mesh: Mesh, xs: np.ndarray, ys: np.ndarray,
                a: NodeId, b: NodeId,
                tol: Tolerances, constrained: bool) -> Optional[NodeId]:
    """Pick the empty-circumcircle node left of a->b, or None if there is none.

    Excluded candidates also stop counting as circle blockers, which stands in
    for a visibility test when constraints hide part of the node set.
    """
    ax, ay = xs[a], ys[a]
    bx, by = xs[b], ys[b]
    ex, ey = bx - ax, by - ay
    band = tol.zero_strip * math.hypot(ex, ey)
    eligible = (ex * (ys - ay) - ey * (xs - ax)) > band
    eligible[a] = False
    eligible[b] = False
    mx, my = 0.5 * (ax + bx), 0.5 * (ay + by)
    pa = mesh.points[a]
    pb = mesh.points[b]
    while True:
        ids = np.nonzero(eligible)[0]
        if ids.size == 0:
            return None
        d2mid = (xs[ids] - mx) ** 2 + (ys[ids] - my) ** 2
        c = int(ids[int(np.argmin(d2mid))])
        for _ in range(len(mesh.points) + 1):
            circ = circumcircle(pa, pb, mesh.points[c], tol)
            if circ.degenerate:
                break
            cx, cy = circ.center
            d2 = (xs - cx) ** 2 + (ys - cy) ** 2
            inside = eligible & (d2 < circ.r2 * (1.0 - tol.incircle_eps))
            inside[c] = False
            iid = np.nonzero(inside)[0]
            if iid.size == 0:
                break
            c = int(iid[int(np.argmin(d2[iid]))])
        # four cocircular nodes leave the diagonal ambiguous: two front
        # edges can disagree and try to claim the same triangle side
        # twice, so a candidate whose new sides are taken gets dropped
        if _side_taken(mesh, b, c) or _side_taken(mesh, c, a):
            eligible[c] = False
            continue
        if constrained:
            bad = False
            for u, v in ((a, c), (c, b)):
                if mesh.find_edge(u, v) is None and _would_cross(mesh, u, v, tol):
                    bad = True
                    break
            if bad:
                eligible[c] = False
                continue
        return c


def _advance_front(mesh: Mesh, tol: Tolerances, constrained: bool,
                   observer: Optional[Observer],
                   max_edges: Optional[int]) -> None:
    xs = np.array([p.x for p in mesh.points])
    ys = np.array([p.y for p in mesh.points])
    queue: deque[int] = deque(i for i, e in enumerate(mesh.edges) if e.active)
    while queue:
        eid = queue.popleft()
        e = mesh.edges[eid]
        if not e.active:
            continue
        c = _third_node(mesh, xs, ys, e.a, e.b, tol, constrained)
        if c is None:
            e.active = False
            if constrained:
                mesh.warn(DiagnosticCode.CHECK_MESH_WARNING,
                          f"no valid third node for edge {e.a}-{e.b}; "
                          "the mesh may be incomplete")
            else:
                # hull edge: nothing on its open side; store it region-left
                # like every other boundary edge
                e.a, e.b = e.b, e.a
                e.t_left, e.t_right = e.t_right, e.t_left
                e.is_boundary = True
            continue
        nl_before = mesh.nl
        mesh.add_triangle(e.a, e.b, c)
        if max_edges is not None and mesh.nl > max_edges:
            raise MeshError(DiagnosticCode.INPUT_TOO_SMALL,
                            f"edge budget {max_edges} exceeded")
        for new_eid in range(nl_before, mesh.nl):
            queue.append(new_eid)
            if observer is not None:
                ne = mesh.edges[new_eid]
                observer(mesh.points[ne.a], mesh.points[ne.b])


def delaunay_mesh(points: Optional[Sequence[Point2]] = None,
                  boundary: Optional[DiscretizedBoundary] = None,
                  mode: DelaunayMode = DelaunayMode.NO_BOUNDARIES,
                  initial_edge: Optional[tuple[NodeId, NodeId]] = None,
                  tol: Tolerances = DEFAULT_TOL,
                  observer: Optional[Observer] = None,
                  max_edges: Optional[int] = None) -> Mesh:
    """Triangulate a node set.

    NO_BOUNDARIES: `points` is the whole node set; the starting edge comes
    from min_y_node/min_angle_node unless `initial_edge` is given; the result
    triangulates the convex hull and hull edges are flagged as boundary.

    WITH_BOUNDARIES / WITH_SPLINE_BOUNDARIES: `boundary` carries the boundary
    nodes and edges; `points` lists extra free nodes, which must lie strictly
    inside the domain. Boundary edges are preserved verbatim and new edges
    never cross existing ones.
    """
    if mode is DelaunayMode.NO_BOUNDARIES:
        if points is None or len(points) < 3:
            raise MeshError(DiagnosticCode.INPUT_TOO_SMALL,
                            "need at least 3 nodes")
        mesh = Mesh()
        for p in points:
            mesh.add_point(Point2(float(p[0]), float(p[1])))
        if initial_edge is None:
            n1 = min_y_node(mesh.points)
            n2 = min_angle_node(mesh.points, n1)
        else:
            n1, n2 = initial_edge
            pa, pb = mesh.points[n1], mesh.points[n2]
            ex, ey = pb.x - pa.x, pb.y - pa.y
            band = -tol.zero_strip * math.hypot(ex, ey)
            for i, p in enumerate(mesh.points):
                if i in (n1, n2):
                    continue
                # the walk only ever fills left sides, so a node strictly
                # right of the seed edge could never be reached
                if ex * (p.y - pa.y) - ey * (p.x - pa.x) < band:
                    raise MeshError(
                        DiagnosticCode.BAD_COUNTS,
                        "initial edge must keep every node on its left")
        mesh.add_boundary_edge(n1, n2)
        _advance_front(mesh, tol, False, observer, max_edges)
        if mesh.nt == 0:
            raise MeshError(DiagnosticCode.ALL_COLLINEAR,
                            "all input nodes are collinear")
        return mesh

    if boundary is None:
        raise MeshError(DiagnosticCode.BAD_COUNTS,
                        "constrained mode needs a discretized boundary")
    mesh = boundary.mesh.copy()
    for p in points or []:
        pt = Point2(float(p[0]), float(p[1]))
        if not point_in_domain(boundary, pt):
            raise MeshError(DiagnosticCode.BAD_COUNTS,
                            f"free node ({pt.x:g},{pt.y:g}) lies outside the domain")
        for e in mesh.edges:
            if e.is_boundary and segment_point_dist(
                    mesh.points[e.a], mesh.points[e.b], pt) <= tol.zero_strip:
                raise MeshError(
                    DiagnosticCode.BAD_COUNTS,
                    f"free node ({pt.x:g},{pt.y:g}) sits on a boundary edge")
        mesh.add_point(pt)
    if mesh.nn < 3:
        raise MeshError(DiagnosticCode.INPUT_TOO_SMALL, "need at least 3 nodes")
    _advance_front(mesh, tol, True, observer, max_edges)
    return mesh
