"""Independent reference computations the tests check the package against.

Everything here is deliberately written with different formulas and
different arithmetic (fractions, mpmath, brute force) than the package
uses, so agreement between the two is meaningful.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np


def exact_orientation(a, b, c) -> int:
    """Sign of the cross product, in exact rational arithmetic."""
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    cx, cy = Fraction(c[0]), Fraction(c[1])
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def incircle_determinant_sign(a, b, c, d) -> int:
    """Sign of the 4x4 incircle determinant, exact.

    For a counter-clockwise (a, b, c): positive means d lies strictly
    inside the circumcircle, zero means on it, negative outside.
    """
    rows = []
    dx, dy = Fraction(d[0]), Fraction(d[1])
    for p in (a, b, c):
        px, py = Fraction(p[0]) - dx, Fraction(p[1]) - dy
        rows.append((px, py, px * px + py * py))
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = rows
    det = (a1 * (b2 * c3 - b3 * c2)
           - a2 * (b1 * c3 - b3 * c1)
           + a3 * (b1 * c2 - b2 * c1))
    return (det > 0) - (det < 0)


def circumcenter_solve(p1, p2, p3):
    """Circumcenter via the perpendicular-bisector linear system."""
    ax, ay = p1
    bx, by = p2
    cx, cy = p3
    m = np.array([[bx - ax, by - ay], [cx - ax, cy - ay]], dtype=float)
    rhs = 0.5 * np.array([bx * bx - ax * ax + by * by - ay * ay,
                          cx * cx - ax * ax + cy * cy - ay * ay])
    center = np.linalg.solve(m, rhs)
    r2 = float((center[0] - ax) ** 2 + (center[1] - ay) ** 2)
    return float(center[0]), float(center[1]), r2


def empty_circumcircle_violations(mesh, eps: float = 1e-10) -> int:
    """Triangles whose circumcircle strictly contains some other node."""
    pts = np.array([[p.x, p.y] for p in mesh.points])
    bad = 0
    for tri in mesh.triangles:
        i, j, k = tri.nodes
        cx, cy, r2 = circumcenter_solve(pts[i], pts[j], pts[k])
        d2 = (pts[:, 0] - cx) ** 2 + (pts[:, 1] - cy) ** 2
        inside = d2 < r2 * (1.0 - eps)
        inside[[i, j, k]] = False
        if inside.any():
            bad += 1
    return bad


def proper_crossing_pairs(mesh) -> list[tuple[int, int]]:
    """All-pairs scan for edges that properly intersect.

    Straddle test on both segments, strict signs; touching configurations
    do not count. Also reports collinear pairs whose 1-D overlap has
    positive length.
    """
    pts = np.array([[p.x, p.y] for p in mesh.points])
    segs = np.array([[e.a, e.b] for e in mesh.edges])
    n = len(segs)
    out = []
    a = pts[segs[:, 0]]
    b = pts[segs[:, 1]]

    def cross(o, p, q):
        return ((p[..., 0] - o[..., 0]) * (q[..., 1] - o[..., 1])
                - (p[..., 1] - o[..., 1]) * (q[..., 0] - o[..., 0]))

    for i in range(n):
        ai, bi = a[i], b[i]
        d1 = cross(ai[None, :], bi[None, :], a[i + 1:])
        d2 = cross(ai[None, :], bi[None, :], b[i + 1:])
        d3 = cross(a[i + 1:], b[i + 1:], ai[None, :])
        d4 = cross(a[i + 1:], b[i + 1:], bi[None, :])
        proper = (d1 * d2 < 0) & (d3 * d4 < 0)
        for off in np.nonzero(proper)[0]:
            out.append((i, i + 1 + int(off)))
        colin = (d1 == 0) & (d2 == 0) & (d3 == 0) & (d4 == 0)
        for off in np.nonzero(colin)[0]:
            j = i + 1 + int(off)
            lo1, hi1 = sorted((tuple(ai), tuple(bi)))
            lo2, hi2 = sorted((tuple(a[j]), tuple(b[j])))
            if max(lo1, lo2) < min(hi1, hi2):
                out.append((i, j))
    return out


def polygon_area(points) -> float:
    """Shoelace area, positive for counter-clockwise order."""
    s = 0.0
    n = len(points)
    for i in range(n):
        x1, y1 = points[i][0], points[i][1]
        x2, y2 = points[(i + 1) % n][0], points[(i + 1) % n][1]
        s += x1 * y2 - x2 * y1
    return 0.5 * s


def triangle_area(p1, p2, p3) -> float:
    """Unsigned area from the cross product, no shared code with the mesh."""
    return abs((p2[0] - p1[0]) * (p3[1] - p1[1])
               - (p2[1] - p1[1]) * (p3[0] - p1[0])) / 2.0


def mesh_signed_area(mesh) -> float:
    total = 0.0
    for tri in mesh.triangles:
        p1, p2, p3 = (mesh.points[n] for n in tri.nodes)
        total += 0.5 * ((p2.x - p1.x) * (p3.y - p1.y)
                        - (p2.y - p1.y) * (p3.x - p1.x))
    return total


def boundary_polygon_area(mesh) -> float:
    """Region area implied by the boundary loops of a mesh."""
    from trigrid.meshmodel import boundary_loops
    total = 0.0
    for loop in boundary_loops(mesh):
        total += polygon_area([mesh.points[n] for n in loop])
    return total


def triangle_angles(p1, p2, p3) -> list[float]:
    """Interior angles in radians via the law of cosines."""
    out = []
    for o, u, v in ((p1, p2, p3), (p2, p3, p1), (p3, p1, p2)):
        lu = math.dist(o, u)
        lv = math.dist(o, v)
        lw = math.dist(u, v)
        out.append(math.acos(max(-1.0, min(1.0,
                   (lu * lu + lv * lv - lw * lw) / (2 * lu * lv)))))
    return out


def sorted_angle_vector(mesh) -> tuple[float, ...]:
    angles = []
    for tri in mesh.triangles:
        p1, p2, p3 = (mesh.points[n] for n in tri.nodes)
        angles.extend(triangle_angles(p1, p2, p3))
    return tuple(sorted(angles))


def max_angle(mesh) -> float:
    return max(sorted_angle_vector(mesh))


def circular_reference(delta_a, delta_b, beta, xs, ys, x, y) -> float:
    """High-precision evaluation of the center-compressed spacing field."""
    with mpmath.workdps(60):
        r2 = (mpmath.mpf(x) - mpmath.mpf(xs)) ** 2 \
            + (mpmath.mpf(y) - mpmath.mpf(ys)) ** 2
        val = mpmath.mpf(delta_a) + (mpmath.mpf(delta_b) - mpmath.mpf(delta_a)) \
            * mpmath.e ** (-mpmath.mpf(beta) * r2)
        return float(val)


def stripe_reference(delta_a, delta_b, alpha, length, xc, yc, x, y) -> float:
    """High-precision evaluation of the band-graded spacing field."""
    with mpmath.workdps(60):
        dx = mpmath.mpf(x) - mpmath.mpf(xc)
        dy = mpmath.mpf(y) - mpmath.mpf(yc)
        r = mpmath.sqrt(dx * dx + dy * dy)
        angle = mpmath.atan2(dy, dx)
        ys_dist = abs(r * mpmath.sin(angle - mpmath.mpf(alpha)))
        val = mpmath.mpf(delta_a) + mpmath.mpf(delta_b) * ys_dist / mpmath.mpf(length)
        return float(val)


def neighbor_centroid_residual(mesh) -> float:
    """Largest distance from a free node to the mean of its neighbors."""
    boundary = set()
    neighbors = [[] for _ in range(mesh.nn)]
    for e in mesh.edges:
        neighbors[e.a].append(e.b)
        neighbors[e.b].append(e.a)
        if e.is_boundary:
            boundary.add(e.a)
            boundary.add(e.b)
    worst = 0.0
    for n in range(mesh.nn):
        if n in boundary or not neighbors[n]:
            continue
        cx = sum(mesh.points[m].x for m in neighbors[n]) / len(neighbors[n])
        cy = sum(mesh.points[m].y for m in neighbors[n]) / len(neighbors[n])
        worst = max(worst, math.hypot(mesh.points[n].x - cx,
                                      mesh.points[n].y - cy))
    return worst


def min_nearest_neighbor_dist(points) -> float:
    pts = np.array([[p[0], p[1]] for p in points])
    d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2)
    np.fill_diagonal(d2, np.inf)
    return float(np.sqrt(d2.min()))
