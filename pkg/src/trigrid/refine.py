"""Mesh refinement operators: node insertion, edge swapping, smoothing.

All three mutate the mesh they are given. Node insertion splits oversized
triangles, swapping flips interior diagonals toward an angle criterion, and
smoothing relaxes free nodes onto the average of their neighbors while the
boundary stays untouched.
"""

from __future__ import annotations

import math
import warnings
from enum import Enum
from typing import Callable, Optional

from .diagnostics import DiagnosticCode, MeshError, MeshWarning, ParamError
from .geom import DEFAULT_TOL, Point2, Tolerances, orient2d, signed_area
from .meshmodel import EdgeId, Mesh, NodeId, TriId
from .spacing import SpacingField, eval_spacing

SQRT3_4 = math.sqrt(3.0) / 4.0

SwapObserver = Callable[[Mesh, EdgeId], None]


class InsertStrategy(Enum):
    CENTROID = 1
    CIRCUMCENTER = 2
    DELTA_FROM_VERTICES = 3


class SwapCriterion(Enum):
    DELAUNAY_MAX_MIN = 1     # flip while opposite angles exceed a half turn
    MIN_MAX = 2              # flip while it shrinks the largest angle


def insert_nodes(mesh: Mesh, spacing: SpacingField, factor: float = 1.0,
                 strategy: InsertStrategy = InsertStrategy.CENTROID,
                 tol: Tolerances = DEFAULT_TOL) -> int:
    """One sweep splitting every triangle larger than the spacing allows.

    A triangle is split when its area exceeds `factor` times the area of the
    equilateral triangle with the spacing evaluated at its centroid. Only the
    triangles present on entry are examined; the split pieces wait for the
    next sweep. Returns the number of nodes inserted.
    """
    if factor <= 0.0:
        raise ParamError("factor must be positive")
    if strategy is not InsertStrategy.CENTROID:
        raise NotImplementedError(f"{strategy.name} insertion is not available")
    inserted = 0
    for tid in range(mesh.nt):
        tri = mesh.triangles[tid]
        n1, n2, n3 = tri.nodes
        p1 = mesh.points[n1]
        p2 = mesh.points[n2]
        p3 = mesh.points[n3]
        cx = (p1.x + p2.x + p3.x) / 3.0
        cy = (p1.y + p2.y + p3.y) / 3.0
        delta = eval_spacing(spacing, cx, cy)
        if delta <= 0.0:
            raise MeshError(DiagnosticCode.INVALID_PARAMS,
                            f"spacing is not positive at ({cx:g},{cy:g})")
        if signed_area(p1, p2, p3) <= factor * SQRT3_4 * delta * delta:
            continue
        c = Point2(cx, cy)
        if (orient2d(p1, p2, c, tol) != 1 or orient2d(p2, p3, c, tol) != 1
                or orient2d(p3, p1, c, tol) != 1):
            mesh.warn(DiagnosticCode.DEGENERATE_TRIANGLE,
                      f"triangle {tid} too thin to split at its centroid")
            continue
        nid = mesh.add_point(c)
        mesh.detach_triangle(tid)
        mesh.add_triangle(n1, n2, nid, slot=tid)
        mesh.add_triangle(n2, n3, nid)
        mesh.add_triangle(n3, n1, nid)
        inserted += 1
    return inserted


def _angles(pa: Point2, pb: Point2, pc: Point2) -> tuple[float, float, float]:
    """Interior angles at pa, pb, pc."""
    def at(o: Point2, u: Point2, v: Point2) -> float:
        ux, uy = u.x - o.x, u.y - o.y
        vx, vy = v.x - o.x, v.y - o.y
        return math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy)
    return at(pa, pb, pc), at(pb, pc, pa), at(pc, pa, pb)


def _quad(mesh: Mesh, eid: EdgeId) -> Optional[tuple[NodeId, NodeId, NodeId, NodeId]]:
    """Quad (u, right apex, v, left apex) around an interior edge u->v."""
    e = mesh.edges[eid]
    if e.is_boundary or e.t_left is None or e.t_right is None:
        return None
    left = mesh.triangles[e.t_left]
    right = mesh.triangles[e.t_right]
    (cl,) = set(left.nodes) - {e.a, e.b}
    (cr,) = set(right.nodes) - {e.a, e.b}
    return e.a, cr, e.b, cl


def _should_swap(mesh: Mesh, eid: EdgeId, criterion: SwapCriterion,
                 tol: Tolerances) -> bool:
    quad = _quad(mesh, eid)
    if quad is None:
        return False
    u, cr, v, cl = quad
    pu = mesh.points[u]
    pr = mesh.points[cr]
    pv = mesh.points[v]
    pl = mesh.points[cl]
    if criterion is SwapCriterion.DELAUNAY_MAX_MIN:
        al = _angles(pl, pu, pv)[0]
        ar = _angles(pr, pv, pu)[0]
        if al + ar <= math.pi + 1e-9:
            return False
        # opposite angles past a half turn already imply a convex quad, but
        # predicate noise must never produce an inverted triangle
        return (orient2d(pu, pr, pl, tol) == 1 and orient2d(pr, pv, pl, tol) == 1)
    # MIN_MAX: the quad must be strictly convex for the flip to be legal
    ring = (pu, pr, pv, pl)
    for k in range(4):
        if orient2d(ring[k], ring[(k + 1) % 4], ring[(k + 2) % 4], tol) != 1:
            return False
    before = max(*_angles(pu, pr, pv), *_angles(pu, pv, pl))
    after = max(*_angles(pu, pr, pl), *_angles(pr, pv, pl))
    return after < before - 1e-12


def _flip(mesh: Mesh, eid: EdgeId):
    """Replace the diagonal u-v of its quad by the other diagonal, in place."""
    e = mesh.edges[eid]
    u, cr, v, cl = _quad(mesh, eid)
    tl, tr = e.t_left, e.t_right
    mesh.detach_triangle(tl)
    mesh.detach_triangle(tr)
    del mesh._pair[e.key()]
    e.a, e.b = cr, cl
    mesh._pair[e.key()] = eid
    mesh.add_triangle(u, cr, cl, slot=tl)
    mesh.add_triangle(cr, v, cl, slot=tr)


def swap_edges(mesh: Mesh,
               criterion: SwapCriterion = SwapCriterion.DELAUNAY_MAX_MIN,
               tol: Tolerances = DEFAULT_TOL,
               on_swap: Optional[SwapObserver] = None,
               max_sweeps: int = 1000) -> int:
    """Sweep all interior edges, flipping per the criterion, until stable.

    Returns the total number of flips. `on_swap` runs after each flip with
    the mesh already updated.
    """
    total = 0
    for _ in range(max_sweeps):
        flips = 0
        for eid in range(mesh.nl):
            if _should_swap(mesh, eid, criterion, tol):
                _flip(mesh, eid)
                flips += 1
                if on_swap is not None:
                    on_swap(mesh, eid)
        total += flips
        if flips == 0:
            return total
    warnings.warn(MeshWarning(
        f"edge swapping still active after {max_sweeps} sweeps",
        DiagnosticCode.NON_CONVERGENCE))
    return total


def smooth_mesh(mesh: Mesh, tol_fraction: float = 1e-3,
                max_sweeps: int = 100) -> tuple[Mesh, float]:
    """Relax free nodes to their neighbor average until movement dies out.

    Boundary nodes never move. All updates within one sweep read the
    positions from before the sweep. Convergence means every node moved less
    than tol_fraction times the root mean square edge length (measured once,
    on entry). Returns the mesh and the largest displacement of the last
    sweep.
    """
    if tol_fraction <= 0.0:
        raise ParamError("tol_fraction must be positive")
    fixed = [False] * mesh.nn
    for e in mesh.edges:
        if e.is_boundary:
            fixed[e.a] = True
            fixed[e.b] = True
    free = [n for n in range(mesh.nn) if not fixed[n]]
    if not free:
        warnings.warn(MeshWarning("no free nodes to smooth",
                                  DiagnosticCode.NO_FREE_NODES))
        return mesh, 0.0
    if not mesh.edges:
        return mesh, 0.0
    neighbors: list[list[NodeId]] = [[] for _ in range(mesh.nn)]
    for e in mesh.edges:
        neighbors[e.a].append(e.b)
        neighbors[e.b].append(e.a)
    ms = 0.0
    for e in mesh.edges:
        dx = mesh.points[e.a].x - mesh.points[e.b].x
        dy = mesh.points[e.a].y - mesh.points[e.b].y
        ms += dx * dx + dy * dy
    threshold = tol_fraction * math.sqrt(ms / mesh.nl)
    max_disp = 0.0
    for _ in range(max_sweeps):
        pts = mesh.points
        moved: list[tuple[NodeId, Point2]] = []
        max_disp = 0.0
        for n in free:
            nbrs = neighbors[n]
            if not nbrs:
                continue
            x = sum(pts[m].x for m in nbrs) / len(nbrs)
            y = sum(pts[m].y for m in nbrs) / len(nbrs)
            d = math.hypot(x - pts[n].x, y - pts[n].y)
            if d > max_disp:
                max_disp = d
            moved.append((n, Point2(x, y)))
        for n, p in moved:
            mesh.points[n] = p
        if max_disp < threshold:
            return mesh, max_disp
    warnings.warn(MeshWarning(
        f"smoothing still moving after {max_sweeps} sweeps",
        DiagnosticCode.NON_CONVERGENCE))
    return mesh, max_disp
