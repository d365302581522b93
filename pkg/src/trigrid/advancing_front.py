"""Advancing-front triangulation driven by a spacing field.

The front starts as the discretized boundary. Each base edge proposes an
ideal apex sized by the local spacing, gathers nearby front nodes as
competing candidates, and accepts the first one that forms a valid triangle.
Edges whose candidates all fail are parked and retried after the front
changes near them.
"""

from __future__ import annotations

import heapq
import math
import warnings
from collections import deque
from enum import Enum
from typing import Callable, Iterable, Optional, Union

from .boundary import DiscretizedBoundary
from .diagnostics import DiagnosticCode, MeshError, MeshWarning
from .geom import (DEFAULT_TOL, Point2, Tolerances, edge_cross, orient2d,
                   segment_point_dist)
from .meshmodel import Edge, EdgeId, Mesh, NodeId
from .spacing import SpacingField, eval_spacing

Observer = Callable[[Point2, Point2], None]
Candidate = Union[NodeId, Point2]

SQRT3 = math.sqrt(3.0)


class FrontStrategy(Enum):
    FIRST_ACTIVE_EDGE = 1
    SMALLEST_EDGE = 2


def ideal_vertex(a: Point2, b: Point2, spacing: SpacingField,
                 tol: Tolerances = DEFAULT_TOL,
                 max_rounds: int = 100) -> tuple[Point2, float]:
    """Apex position and side length for the triangle grown left of a->b.

    The side length comes from iterating the spacing evaluation: an
    equilateral triangle of the current side is stood on the edge midpoint,
    the spacing at its centroid gives the next side, until successive heights
    agree within 1%. The result is then clamped to [0.55, 2] times the base
    length so the apex always stays a proper triangle tip.
    """
    mx = 0.5 * (a.x + b.x)
    my = 0.5 * (a.y + b.y)
    ex = b.x - a.x
    ey = b.y - a.y
    base = math.hypot(ex, ey)
    if base <= tol.zero_strip:
        raise MeshError(DiagnosticCode.DEGENERATE_SEGMENT,
                        "cannot grow a triangle on a zero-length edge")
    nx = -ey / base
    ny = ex / base
    delta = eval_spacing(spacing, mx, my)
    if delta <= 0.0:
        raise MeshError(DiagnosticCode.INVALID_PARAMS,
                        f"spacing is not positive at ({mx:g},{my:g})")
    height = 0.5 * SQRT3 * delta
    converged = False
    for _ in range(max_rounds):
        cx = mx + (SQRT3 / 6.0) * delta * nx
        cy = my + (SQRT3 / 6.0) * delta * ny
        delta_next = eval_spacing(spacing, cx, cy)
        if delta_next <= 0.0:
            raise MeshError(DiagnosticCode.INVALID_PARAMS,
                            f"spacing is not positive at ({cx:g},{cy:g})")
        height_next = 0.5 * SQRT3 * delta_next
        done = abs(height_next - height) <= 0.01 * height
        delta = delta_next
        height = height_next
        if done:
            converged = True
            break
    if not converged:
        warnings.warn(MeshWarning(
            f"apex height kept changing after {max_rounds} rounds near "
            f"({mx:g},{my:g}); using the last value",
            DiagnosticCode.NON_CONVERGENCE))
    delta = min(2.0 * base, max(0.55 * base, delta))
    h = math.sqrt(delta * delta - 0.25 * base * base)
    return Point2(mx + h * nx, my + h * ny), delta


def _front_edges(mesh: Mesh, front: Optional[Iterable[EdgeId]]) -> Iterable[Edge]:
    if front is None:
        return (e for e in mesh.edges if e.active)
    return (mesh.edges[i] for i in front)


def select_candidates(mesh: Mesh, a: NodeId, b: NodeId, apex: Point2,
                      delta: float, tol: Tolerances = DEFAULT_TOL,
                      front: Optional[Iterable[EdgeId]] = None) -> list[Candidate]:
    """Ordered apex candidates for the base edge a->b.

    Existing front nodes qualify when they lie strictly left of the base,
    within `delta` of the ideal apex, and within 1.5 * delta of both base
    ends. They are ordered by distance to the base edge, nearest first, and
    the ideal apex itself comes last. The apex is dropped when it almost
    coincides with a qualifying node, so near-duplicate nodes never arise.
    """
    pa = mesh.points[a]
    pb = mesh.points[b]
    reach = 1.5 * delta + tol.zero_strip
    near: list[NodeId] = []
    seen: set[NodeId] = set()
    for e in _front_edges(mesh, front):
        for n in (e.a, e.b):
            if n in seen or n == a or n == b:
                continue
            seen.add(n)
            p = mesh.points[n]
            if math.hypot(p.x - apex.x, p.y - apex.y) > delta + tol.zero_strip:
                continue
            if math.hypot(p.x - pa.x, p.y - pa.y) > reach:
                continue
            if math.hypot(p.x - pb.x, p.y - pb.y) > reach:
                continue
            if orient2d(pa, pb, p, tol) != 1:
                continue
            near.append(n)
    near.sort(key=lambda n: (segment_point_dist(pa, pb, mesh.points[n]), n))
    out: list[Candidate] = list(near)
    snap = 0.4 * delta
    for n in near:
        p = mesh.points[n]
        if math.hypot(p.x - apex.x, p.y - apex.y) <= snap:
            return out
    out.append(apex)
    return out


def _side_fillable(mesh: Mesh, u: NodeId, v: NodeId) -> bool:
    """True when a triangle left of u->v may attach there."""
    eid = mesh.find_edge(u, v)
    if eid is None:
        return True
    e = mesh.edges[eid]
    if not e.active:
        return False
    if (e.a, e.b) == (u, v):
        return e.t_left is None
    return e.t_right is None


def _new_edge_clear(mesh: Mesh, pu: Point2, pv: Point2, tol: Tolerances,
                    front: Optional[Iterable[EdgeId]]) -> bool:
    """True when segment pu-pv crosses no open front edge.

    Front edges sharing an endpoint coordinate with the segment count only
    when they overlap it collinearly; mere touching is fine.
    """
    x0, x1 = (pu.x, pv.x) if pu.x <= pv.x else (pv.x, pu.x)
    y0, y1 = (pu.y, pv.y) if pu.y <= pv.y else (pv.y, pu.y)
    for e in _front_edges(mesh, front):
        pa = mesh.points[e.a]
        pb = mesh.points[e.b]
        if max(pa.x, pb.x) < x0 or min(pa.x, pb.x) > x1:
            continue
        if max(pa.y, pb.y) < y0 or min(pa.y, pb.y) > y1:
            continue
        if edge_cross(pu, pv, pa, pb, tol):
            return False
    return True


def _no_front_node_inside(mesh: Mesh, a: NodeId, b: NodeId,
                          cand: Optional[NodeId], pc: Point2, tol: Tolerances,
                          front: Optional[Iterable[EdgeId]]) -> bool:
    pa = mesh.points[a]
    pb = mesh.points[b]
    x0 = min(pa.x, pb.x, pc.x)
    x1 = max(pa.x, pb.x, pc.x)
    y0 = min(pa.y, pb.y, pc.y)
    y1 = max(pa.y, pb.y, pc.y)
    seen: set[NodeId] = set()
    for e in _front_edges(mesh, front):
        for n in (e.a, e.b):
            if n in seen or n == a or n == b or n == cand:
                continue
            seen.add(n)
            p = mesh.points[n]
            if not (x0 <= p.x <= x1 and y0 <= p.y <= y1):
                continue
            if (orient2d(pa, pb, p, tol) == 1
                    and orient2d(pb, pc, p, tol) == 1
                    and orient2d(pc, pa, p, tol) == 1):
                return False
    return True


def _triangle_ok(mesh: Mesh, a: NodeId, b: NodeId, cand: Candidate,
                 tol: Tolerances,
                 front: Optional[set[EdgeId]] = None) -> bool:
    """Would the triangle (a, b, cand) be a legal front advance?

    Besides the crossing test each proposed triangle must be empty of other
    front nodes; otherwise a later edge would have nowhere to put its own
    triangle and the front would wedge itself shut.
    """
    pa = mesh.points[a]
    pb = mesh.points[b]
    if isinstance(cand, int):
        pc = mesh.points[cand]
        if not (_side_fillable(mesh, b, cand) and _side_fillable(mesh, cand, a)):
            return False
        if mesh.find_edge(a, cand) is None and not _new_edge_clear(
                mesh, pc, pa, tol, front):
            return False
        if mesh.find_edge(b, cand) is None and not _new_edge_clear(
                mesh, pc, pb, tol, front):
            return False
        return _no_front_node_inside(mesh, a, b, cand, pc, tol, front)
    pc = cand
    if orient2d(pa, pb, pc, tol) != 1:
        return False
    if not _new_edge_clear(mesh, pc, pa, tol, front):
        return False
    if not _new_edge_clear(mesh, pc, pb, tol, front):
        return False
    return _no_front_node_inside(mesh, a, b, None, pc, tol, front)


class _FrontQueue:
    """Base-edge picker. FIFO in creation order, or smallest length first."""

    def __init__(self, mesh: Mesh, strategy: FrontStrategy):
        self.mesh = mesh
        self.strategy = strategy
        self.fifo: deque[EdgeId] = deque()
        self.heap: list[tuple[float, EdgeId]] = []

    def _length(self, e: Edge) -> float:
        pa = self.mesh.points[e.a]
        pb = self.mesh.points[e.b]
        return math.hypot(pa.x - pb.x, pa.y - pb.y)

    def push(self, eid: EdgeId):
        if self.strategy is FrontStrategy.FIRST_ACTIVE_EDGE:
            self.fifo.append(eid)
        else:
            heapq.heappush(self.heap, (self._length(self.mesh.edges[eid]), eid))

    def pop(self) -> Optional[EdgeId]:
        if self.strategy is FrontStrategy.FIRST_ACTIVE_EDGE:
            while self.fifo:
                eid = self.fifo.popleft()
                if self.mesh.edges[eid].active:
                    return eid
            return None
        while self.heap:
            _, eid = heapq.heappop(self.heap)
            if self.mesh.edges[eid].active:
                return eid
        return None


def advancing_front_mesh(boundary: DiscretizedBoundary,
                         spacing: SpacingField,
                         strategy: FrontStrategy = FrontStrategy.FIRST_ACTIVE_EDGE,
                         tol: Tolerances = DEFAULT_TOL,
                         observer: Optional[Observer] = None,
                         max_nodes: Optional[int] = None) -> Mesh:
    """Mesh the domain interior by marching the boundary front inward.

    Returns a mesh whose node spacing follows the field. If some edges never
    find a triangle the partial mesh is returned with a warning attached.
    """
    mesh = boundary.mesh.copy()
    queue = _FrontQueue(mesh, strategy)
    front: set[EdgeId] = set()
    for eid, e in enumerate(mesh.edges):
        if e.active:
            queue.push(eid)
            front.add(eid)
    parked: set[EdgeId] = set()
    progress = True
    while True:
        eid = queue.pop()
        if eid is None:
            # every queued edge is done; give parked edges another pass, but
            # only if the front changed since they were parked
            if parked and progress:
                for pid in sorted(parked):
                    if mesh.edges[pid].active:
                        queue.push(pid)
                parked.clear()
                progress = False
                continue
            break
        e = mesh.edges[eid]
        apex, delta = ideal_vertex(mesh.points[e.a], mesh.points[e.b],
                                   spacing, tol)
        accepted = None
        for cand in select_candidates(mesh, e.a, e.b, apex, delta, tol, front):
            if _triangle_ok(mesh, e.a, e.b, cand, tol, front):
                accepted = cand
                break
        if accepted is None:
            # parked edges leave the queue but stay on the geometric front:
            # they still block crossings until something fills them
            parked.add(eid)
            continue
        if isinstance(accepted, int):
            c = accepted
        else:
            c = mesh.add_point(accepted)
            if max_nodes is not None and mesh.nn > max_nodes:
                raise MeshError(DiagnosticCode.NODE_BUDGET_EXCEEDED,
                                f"node budget {max_nodes} exceeded")
        nl_before = mesh.nl
        tid = mesh.add_triangle(e.a, e.b, c)
        progress = True
        for teid in mesh.triangles[tid].edges:
            if mesh.edges[teid].active:
                front.add(teid)
            else:
                front.discard(teid)
        for new_eid in range(nl_before, mesh.nl):
            queue.push(new_eid)
            if observer is not None:
                ne = mesh.edges[new_eid]
                observer(mesh.points[ne.a], mesh.points[ne.b])
        if parked:
            woken = [pid for pid in parked
                     if {mesh.edges[pid].a, mesh.edges[pid].b} & {e.a, e.b, c}]
            for pid in woken:
                parked.discard(pid)
                if mesh.edges[pid].active:
                    queue.push(pid)
    leftover = sum(1 for e in mesh.edges if e.active)
    if leftover:
        mesh.warn(DiagnosticCode.STALLED,
                  f"front stalled with {leftover} open edges; "
                  "returning the partial mesh")
    return mesh
