"""Low-level geometric predicates and constructions.

All predicates are plain floating point with explicit tolerance bands, not
exact arithmetic. Ties near zero are classified as "degenerate"/"on" and left
to the callers' tie-break rules, so predicate noise never decides a mesh.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .diagnostics import DiagnosticCode, MeshError


class Point2(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Tolerances:
    # zero_strip is an absolute length: points closer than this to a line (or
    # segment overlaps shorter than this) count as touching, not crossing.
    zero_strip: float = 1e-12
    # relative band for the on-circle classification
    incircle_eps: float = 1e-10

    def __post_init__(self):
        if self.zero_strip <= 0 or self.incircle_eps <= 0:
            raise ValueError("tolerances must be positive")

    @classmethod
    def scaled(cls, characteristic_length: float) -> "Tolerances":
        """Tolerances for a problem whose coordinates span roughly the given length."""
        return cls(zero_strip=1e-12 * max(characteristic_length, 1e-300))


DEFAULT_TOL = Tolerances()


class CirclePosition(Enum):
    INSIDE = "inside"
    ON = "on"
    OUTSIDE = "outside"


class Circumcircle(NamedTuple):
    center: Point2
    r2: float
    degenerate: bool


def orient2d(a: Point2, b: Point2, c: Point2, tol: Tolerances = DEFAULT_TOL) -> int:
    """+1 if c is strictly left of the directed line a->b, -1 right, 0 collinear.

    The collinear band is zero_strip measured as point-to-line distance, so the
    cross product is compared against zero_strip * |ab|.
    """
    cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    band = tol.zero_strip * math.hypot(b[0] - a[0], b[1] - a[1])
    if cross > band:
        return 1
    if cross < -band:
        return -1
    return 0


def circumcircle(n1: Point2, n2: Point2, n3: Point2,
                 tol: Tolerances = DEFAULT_TOL) -> Circumcircle:
    """Center and squared radius of the circle through three points.

    Collinear inputs (per orient2d's band) yield degenerate=True; center/r2
    are then unspecified and must not be read.
    """
    if orient2d(n1, n2, n3, tol) == 0:
        return Circumcircle(Point2(math.nan, math.nan), math.nan, True)
    # translate so n1 is the origin: immune to far-from-origin cancellation
    bx = n2[0] - n1[0]
    by = n2[1] - n1[1]
    cx = n3[0] - n1[0]
    cy = n3[1] - n1[1]
    d = 2.0 * (bx * cy - by * cx)
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return Circumcircle(Point2(n1[0] + ux, n1[1] + uy), ux * ux + uy * uy, False)


def incircle_test(a: Point2, b: Point2, c: Point2, d: Point2,
                  tol: Tolerances = DEFAULT_TOL) -> CirclePosition:
    """Classify d against the circumcircle of (a, b, c).

    Implemented as the |d-center|^2 vs r^2 comparison with a relative band, so
    it is consistent with circumcircle() by construction.
    """
    circ = circumcircle(a, b, c, tol)
    if circ.degenerate:
        raise MeshError(DiagnosticCode.DEGENERATE_TRIANGLE,
                        "circle through collinear points is undefined")
    dx = d[0] - circ.center[0]
    dy = d[1] - circ.center[1]
    dist2 = dx * dx + dy * dy
    band = tol.incircle_eps * circ.r2
    if dist2 < circ.r2 - band:
        return CirclePosition.INSIDE
    if dist2 > circ.r2 + band:
        return CirclePosition.OUTSIDE
    return CirclePosition.ON


def signed_area(a: Point2, b: Point2, c: Point2) -> float:
    """Signed triangle area, positive for counter-clockwise order."""
    return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def segment_point_dist(a: Point2, b: Point2, p: Point2) -> float:
    """Distance from p to the closed segment a-b."""
    ux = b[0] - a[0]
    uy = b[1] - a[1]
    L2 = ux * ux + uy * uy
    if L2 == 0.0:
        return math.hypot(p[0] - a[0], p[1] - a[1])
    t = ((p[0] - a[0]) * ux + (p[1] - a[1]) * uy) / L2
    t = min(1.0, max(0.0, t))
    return math.hypot(p[0] - (a[0] + t * ux), p[1] - (a[1] + t * uy))


def edge_cross(a: Point2, b: Point2, p: Point2, q: Point2,
               tol: Tolerances = DEFAULT_TOL) -> int:
    """1 iff the open segments a-b and p-q properly intersect.

    Sharing an endpoint, T-junction touching, and collinear overlap of zero
    length all return 0; collinear overlap of positive length returns 1.
    """
    d1 = orient2d(p, q, a, tol)
    d2 = orient2d(p, q, b, tol)
    d3 = orient2d(a, b, p, tol)
    d4 = orient2d(a, b, q, tol)
    if d1 != d2 and d1 != 0 and d2 != 0 and d3 != d4 and d3 != 0 and d4 != 0:
        return 1
    if d1 == 0 and d2 == 0 and d3 == 0 and d4 == 0:
        # all four endpoints on one line: check 1D interval overlap length
        ux = b[0] - a[0]
        uy = b[1] - a[1]
        norm = math.hypot(ux, uy)
        if norm == 0.0:
            return 0
        ux /= norm
        uy /= norm
        ta0 = 0.0
        ta1 = norm
        tp = (p[0] - a[0]) * ux + (p[1] - a[1]) * uy
        tq = (q[0] - a[0]) * ux + (q[1] - a[1]) * uy
        lo = max(min(ta0, ta1), min(tp, tq))
        hi = min(max(ta0, ta1), max(tp, tq))
        if hi - lo > tol.zero_strip:
            return 1
    return 0
