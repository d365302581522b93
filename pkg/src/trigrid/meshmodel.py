"""Mesh data model: nodes, directed edges with triangle references, triangles.

Edges are directed. The convention every generator relies on: an edge is
*active* while it still awaits a triangle on its stored-left side, i.e. the
region left of a->b is not yet meshed. Boundary edges are stored with the
domain on their left; their right side stays empty forever. Edges created
while a triangle is attached on one side are stored so that the OPEN side is
the stored-left one.

Ids are 0-based everywhere inside the package; 1-based numbering appears only
in `.mg` text and user-facing reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .diagnostics import Diagnostic, DiagnosticCode, MeshError
from .geom import DEFAULT_TOL, Point2, Tolerances, edge_cross, orient2d

NodeId = int
EdgeId = int
TriId = int


@dataclass
class Edge:
    a: NodeId
    b: NodeId
    t_left: Optional[TriId] = None
    t_right: Optional[TriId] = None
    is_boundary: bool = False
    active: bool = False

    def nodes(self) -> tuple[NodeId, NodeId]:
        return (self.a, self.b)

    def key(self) -> tuple[NodeId, NodeId]:
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)


@dataclass
class Triangle:
    nodes: tuple[NodeId, NodeId, NodeId]   # counter-clockwise
    edges: tuple[EdgeId, EdgeId, EdgeId]   # edges[i] joins nodes[i], nodes[(i+1)%3]


class AdjacencyKind(Enum):
    TRI_PER_TRI = 1
    NODE_PER_NODE = 2
    TRI_PER_NODE = 3
    NODE_PER_TRI = 4
    EDGE_PER_NODE = 5
    NODE_PER_EDGE = 6
    TRI_PER_EDGE = 7
    EDGE_PER_TRI = 8


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class Mesh:
    """Mutable during one generator invocation, treated as a snapshot after."""

    def __init__(self):
        self.points: list[Point2] = []
        self.edges: list[Edge] = []
        self.triangles: list[Triangle] = []
        self._pair: dict[tuple[NodeId, NodeId], EdgeId] = {}
        self.warnings: list[Diagnostic] = []

    # -- counts ---------------------------------------------------------
    @property
    def nn(self) -> int:
        return len(self.points)

    @property
    def nl(self) -> int:
        return len(self.edges)

    @property
    def nt(self) -> int:
        return len(self.triangles)

    # -- construction ---------------------------------------------------
    def add_point(self, p: Point2) -> NodeId:
        if not (math.isfinite(p[0]) and math.isfinite(p[1])):
            raise MeshError(DiagnosticCode.BAD_COUNTS,
                            f"non-finite coordinate {p!r}")
        self.points.append(Point2(p[0], p[1]))
        return len(self.points) - 1

    def find_edge(self, a: NodeId, b: NodeId) -> Optional[EdgeId]:
        return self._pair.get((a, b) if a < b else (b, a))

    def add_boundary_edge(self, a: NodeId, b: NodeId) -> EdgeId:
        """Directed boundary edge, meshed region to the left of a->b."""
        if a == b:
            raise MeshError(DiagnosticCode.BAD_COUNTS, "zero-length edge")
        key = (a, b) if a < b else (b, a)
        if key in self._pair:
            raise MeshError(DiagnosticCode.BAD_COUNTS,
                            f"duplicate boundary edge {a}-{b}")
        self.edges.append(Edge(a, b, is_boundary=True, active=True))
        eid = len(self.edges) - 1
        self._pair[key] = eid
        return eid

    def fill_side(self, u: NodeId, v: NodeId, tri: TriId) -> EdgeId:
        """Record that triangle `tri` lies left of u->v, creating the edge if new.

        New edges are stored reversed (v->u) so their open side is stored-left.
        """
        key = (u, v) if u < v else (v, u)
        eid = self._pair.get(key)
        if eid is None:
            self.edges.append(Edge(v, u, t_right=tri, active=True))
            eid = len(self.edges) - 1
            self._pair[key] = eid
            return eid
        e = self.edges[eid]
        if (e.a, e.b) == (u, v):
            if e.t_left is not None:
                raise RuntimeError(f"edge {u}->{v} left side already occupied")
            e.t_left = tri
        else:
            if e.t_right is not None:
                raise RuntimeError(f"edge {v}->{u} right side already occupied")
            e.t_right = tri
        e.active = e.t_left is None
        return eid

    def add_triangle(self, n1: NodeId, n2: NodeId, n3: NodeId,
                     slot: Optional[TriId] = None) -> TriId:
        """Register a CCW triangle, wiring all three edge sides."""
        if slot is None:
            tid = len(self.triangles)
            self.triangles.append(None)  # type: ignore[arg-type]
        else:
            tid = slot
        e1 = self.fill_side(n1, n2, tid)
        e2 = self.fill_side(n2, n3, tid)
        e3 = self.fill_side(n3, n1, tid)
        self.triangles[tid] = Triangle((n1, n2, n3), (e1, e2, e3))
        return tid

    def detach_triangle(self, tid: TriId):
        """Remove the triangle's references from its edges (slot stays)."""
        tri = self.triangles[tid]
        for eid in tri.edges:
            e = self.edges[eid]
            if e.t_left == tid:
                e.t_left = None
            elif e.t_right == tid:
                e.t_right = None
            else:
                raise RuntimeError(f"edge {eid} does not reference triangle {tid}")
            e.active = e.t_left is None

    def active_edges(self) -> list[EdgeId]:
        return [i for i, e in enumerate(self.edges) if e.active]

    def copy(self) -> "Mesh":
        m = Mesh()
        m.points = list(self.points)
        m.edges = [Edge(e.a, e.b, e.t_left, e.t_right, e.is_boundary, e.active)
                   for e in self.edges]
        m.triangles = [Triangle(t.nodes, t.edges) for t in self.triangles]
        m._pair = dict(self._pair)
        m.warnings = list(self.warnings)
        return m

    def same_structure(self, other: "Mesh") -> bool:
        return (self.points == other.points
                and self.edges == other.edges
                and self.triangles == other.triangles)

    def warn(self, code: DiagnosticCode, message: str):
        self.warnings.append(Diagnostic(code, message))

    def __repr__(self) -> str:
        return f"<Mesh nn={self.nn} nl={self.nl} nt={self.nt}>"


# -- connectivity extraction ------------------------------------------------

def adjacency(mesh: Mesh, kind: AdjacencyKind,
              max_per_entity: Optional[int] = None) -> list[list[int]]:
    """Connectivity table for the given kind, one row per entity.

    Rows are ragged for the variable-arity kinds; callers with a fixed-size
    destination pass max_per_entity to fail fast instead of truncating.
    """
    if kind is AdjacencyKind.NODE_PER_TRI:
        table = [list(t.nodes) for t in mesh.triangles]
    elif kind is AdjacencyKind.EDGE_PER_TRI:
        table = [list(t.edges) for t in mesh.triangles]
    elif kind is AdjacencyKind.NODE_PER_EDGE:
        table = [[e.a, e.b] for e in mesh.edges]
    elif kind is AdjacencyKind.TRI_PER_EDGE:
        table = [[t for t in (e.t_left, e.t_right) if t is not None]
                 for e in mesh.edges]
    elif kind is AdjacencyKind.TRI_PER_TRI:
        table = []
        for tid, tri in enumerate(mesh.triangles):
            row = []
            for eid in tri.edges:
                e = mesh.edges[eid]
                other = e.t_right if e.t_left == tid else e.t_left
                if other is not None:
                    row.append(other)
            table.append(row)
    elif kind is AdjacencyKind.NODE_PER_NODE:
        table = [[] for _ in range(mesh.nn)]
        for e in mesh.edges:
            table[e.a].append(e.b)
            table[e.b].append(e.a)
    elif kind is AdjacencyKind.EDGE_PER_NODE:
        table = [[] for _ in range(mesh.nn)]
        for eid, e in enumerate(mesh.edges):
            table[e.a].append(eid)
            table[e.b].append(eid)
    elif kind is AdjacencyKind.TRI_PER_NODE:
        table = [[] for _ in range(mesh.nn)]
        for tid, tri in enumerate(mesh.triangles):
            for n in tri.nodes:
                table[n].append(tid)
    else:  # pragma: no cover - closed enum
        raise MeshError(DiagnosticCode.BAD_COUNTS, f"unknown kind {kind}")
    if max_per_entity is not None:
        for i, row in enumerate(table):
            if len(row) > max_per_entity:
                raise MeshError(
                    DiagnosticCode.CAPACITY_EXCEEDED,
                    f"{kind.name} row {i} holds {len(row)} entries, "
                    f"cap is {max_per_entity}")
    return table


def euler_check(mesh: Mesh, holes: int) -> bool:
    """nn - nl + nt == 1 - holes for a triangulated region with that many holes."""
    return mesh.nn - mesh.nl + mesh.nt == 1 - holes


def boundary_loops(mesh: Mesh) -> list[list[NodeId]]:
    """Node cycles of the boundary edges, following their stored direction."""
    succ: dict[NodeId, NodeId] = {}
    for e in mesh.edges:
        if e.is_boundary:
            succ[e.a] = e.b
    loops = []
    seen: set[NodeId] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        loop = [start]
        seen.add(start)
        cur = succ.get(start)
        while cur is not None and cur != start and cur not in seen:
            loop.append(cur)
            seen.add(cur)
            cur = succ.get(cur)
        loops.append(loop)
    return loops


# -- validation --------------------------------------------------------------

def _crossing_pairs(mesh: Mesh, tol: Tolerances,
                    limit: int = 32) -> list[tuple[EdgeId, EdgeId]]:
    """Edge pairs with edge_cross = 1, found via a uniform bin grid.

    The grid only prunes candidate pairs; every surviving pair still goes
    through edge_cross, so results match the quadratic scan.
    """
    nl = len(mesh.edges)
    if nl < 2:
        return []
    pts = mesh.points
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    total = 0.0
    for e in mesh.edges:
        total += math.hypot(pts[e.a].x - pts[e.b].x, pts[e.a].y - pts[e.b].y)
    cell = max(total / nl, 1e-300)
    nx = max(1, min(512, int((maxx - minx) / cell) + 1))
    ny = max(1, min(512, int((maxy - miny) / cell) + 1))
    sx = nx / max(maxx - minx, 1e-300)
    sy = ny / max(maxy - miny, 1e-300)
    buckets: dict[tuple[int, int], list[EdgeId]] = {}
    boxes = []
    for eid, e in enumerate(mesh.edges):
        pa, pb = pts[e.a], pts[e.b]
        x0, x1 = (pa.x, pb.x) if pa.x <= pb.x else (pb.x, pa.x)
        y0, y1 = (pa.y, pb.y) if pa.y <= pb.y else (pb.y, pa.y)
        boxes.append((x0, x1, y0, y1))
        i0 = min(nx - 1, max(0, int((x0 - minx) * sx)))
        i1 = min(nx - 1, max(0, int((x1 - minx) * sx)))
        j0 = min(ny - 1, max(0, int((y0 - miny) * sy)))
        j1 = min(ny - 1, max(0, int((y1 - miny) * sy)))
        for i in range(i0, i1 + 1):
            for j in range(j0, j1 + 1):
                buckets.setdefault((i, j), []).append(eid)
    hits = []
    tested: set[tuple[EdgeId, EdgeId]] = set()
    for ids in buckets.values():
        for i in range(len(ids)):
            e1 = ids[i]
            b1 = boxes[e1]
            ea = mesh.edges[e1]
            for j in range(i + 1, len(ids)):
                e2 = ids[j]
                pair = (e1, e2) if e1 < e2 else (e2, e1)
                if pair in tested:
                    continue
                tested.add(pair)
                b2 = boxes[e2]
                if b1[1] < b2[0] or b2[1] < b1[0] or b1[3] < b2[2] or b2[3] < b1[2]:
                    continue
                eb = mesh.edges[e2]
                if ea.a in (eb.a, eb.b) or ea.b in (eb.a, eb.b):
                    continue
                if edge_cross(pts[ea.a], pts[ea.b], pts[eb.a], pts[eb.b], tol):
                    hits.append(pair)
                    if len(hits) >= limit:
                        return hits
    return hits


def validate_mesh(mesh: Mesh, tol: Tolerances = DEFAULT_TOL) -> list[Violation]:
    """Global consistency scan; an empty list means the mesh is valid."""
    out: list[Violation] = []
    nn, nl, nt = mesh.nn, mesh.nl, mesh.nt
    for nid, p in enumerate(mesh.points):
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            out.append(Violation("nonfinite_point", f"node {nid} = {p!r}"))
    seen_pairs: dict[tuple[int, int], int] = {}
    for eid, e in enumerate(mesh.edges):
        if not (0 <= e.a < nn and 0 <= e.b < nn) or e.a == e.b:
            out.append(Violation("id_range", f"edge {eid} nodes {e.a},{e.b}"))
            continue
        key = e.key()
        if key in seen_pairs:
            out.append(Violation(
                "duplicate_edge",
                f"edges {seen_pairs[key]} and {eid} both join {key}"))
        else:
            seen_pairs[key] = eid
        for tid in (e.t_left, e.t_right):
            if tid is None:
                continue
            if not 0 <= tid < nt:
                out.append(Violation("id_range", f"edge {eid} triangle ref {tid}"))
            elif eid not in mesh.triangles[tid].edges:
                out.append(Violation(
                    "backref_mismatch",
                    f"edge {eid} references triangle {tid} which does not list it"))
    for tid, tri in enumerate(mesh.triangles):
        ns = tri.nodes
        if len(set(ns)) != 3 or not all(0 <= n < nn for n in ns):
            out.append(Violation("id_range", f"triangle {tid} nodes {ns}"))
            continue
        if orient2d(mesh.points[ns[0]], mesh.points[ns[1]], mesh.points[ns[2]],
                    tol) != 1:
            out.append(Violation("non_ccw_triangle", f"triangle {tid} nodes {ns}"))
        for k in range(3):
            eid = tri.edges[k]
            if not 0 <= eid < nl:
                out.append(Violation("id_range", f"triangle {tid} edge ref {eid}"))
                continue
            e = mesh.edges[eid]
            if {e.a, e.b} != {ns[k], ns[(k + 1) % 3]}:
                out.append(Violation(
                    "backref_mismatch",
                    f"triangle {tid} edge {eid} joins {e.a},{e.b}, expected "
                    f"{ns[k]},{ns[(k + 1) % 3]}"))
            elif tid not in (e.t_left, e.t_right):
                out.append(Violation(
                    "backref_mismatch",
                    f"triangle {tid} not referenced back by its edge {eid}"))
    if not any(v.code in ("id_range", "nonfinite_point") for v in out):
        for e1, e2 in _crossing_pairs(mesh, tol):
            out.append(Violation("edge_crossing", f"edges {e1} and {e2} cross"))
    return out


def finished_mesh_violations(mesh: Mesh) -> list[Violation]:
    """Extra checks that only apply once generation is complete."""
    out = []
    for eid, e in enumerate(mesh.edges):
        n = (e.t_left is not None) + (e.t_right is not None)
        if e.is_boundary and n != 1:
            out.append(Violation(
                "adjacency_count", f"boundary edge {eid} has {n} triangles"))
        if not e.is_boundary and n != 2:
            out.append(Violation(
                "adjacency_count", f"interior edge {eid} has {n} triangles"))
    return out
