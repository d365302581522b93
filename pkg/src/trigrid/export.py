"""Mesh serialization: JSON interchange and SVG rendering.

Both writers format numbers themselves so that equal meshes always produce
byte-identical output. 17 significant digits keep every float exact across
a round trip.
"""

from __future__ import annotations

import json
import math

from .diagnostics import DiagnosticCode, MeshError
from .geom import Point2
from .meshmodel import Edge, Mesh, Triangle


def _f(v: float) -> str:
    return format(float(v), ".17g")


def export_json(mesh: Mesh) -> str:
    """Mesh as a JSON text; missing triangle references appear as -1."""
    parts = ['{"nodes":[']
    parts.append(",".join(f"[{_f(p.x)},{_f(p.y)}]" for p in mesh.points))
    parts.append('],"edges":[')
    parts.append(",".join(
        f"[{e.a},{e.b},{-1 if e.t_left is None else e.t_left},"
        f"{-1 if e.t_right is None else e.t_right},{int(e.is_boundary)}]"
        for e in mesh.edges))
    parts.append('],"triangles":[')
    parts.append(",".join(
        f"[{t.nodes[0]},{t.nodes[1]},{t.nodes[2]}]" for t in mesh.triangles))
    parts.append("]}")
    return "".join(parts)


def import_json(text: str) -> Mesh:
    """Rebuild a mesh from export_json output, rewiring all edge references."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MeshError(DiagnosticCode.BAD_COUNTS,
                        f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or not {"nodes", "edges", "triangles"} <= set(data):
        raise MeshError(DiagnosticCode.BAD_COUNTS,
                        "expected an object with nodes, edges and triangles")
    mesh = Mesh()
    for row in data["nodes"]:
        mesh.add_point(Point2(float(row[0]), float(row[1])))
    for row in data["edges"]:
        a, b, tl, tr, isb = (int(v) for v in row)
        if not (0 <= a < mesh.nn and 0 <= b < mesh.nn) or a == b:
            raise MeshError(DiagnosticCode.BAD_COUNTS,
                            f"edge {a}-{b} references missing nodes")
        key = (a, b) if a < b else (b, a)
        if key in mesh._pair:
            raise MeshError(DiagnosticCode.BAD_COUNTS, f"duplicate edge {a}-{b}")
        e = Edge(a, b,
                 None if tl < 0 else tl,
                 None if tr < 0 else tr,
                 bool(isb))
        e.active = e.t_left is None
        mesh._pair[key] = len(mesh.edges)
        mesh.edges.append(e)
    for ti, row in enumerate(data["triangles"]):
        n1, n2, n3 = (int(v) for v in row)
        eids = []
        for u, v in ((n1, n2), (n2, n3), (n3, n1)):
            eid = mesh.find_edge(u, v)
            if eid is None:
                raise MeshError(DiagnosticCode.BAD_COUNTS,
                                f"triangle {ti} edge {u}-{v} is missing")
            eids.append(eid)
        mesh.triangles.append(Triangle((n1, n2, n3), tuple(eids)))
    for eid, e in enumerate(mesh.edges):
        for tid in (e.t_left, e.t_right):
            if tid is not None and not 0 <= tid < mesh.nt:
                raise MeshError(DiagnosticCode.BAD_COUNTS,
                                f"edge {eid} references missing triangle {tid}")
    return mesh


def render_svg(mesh: Mesh, stroke: str = "#607080",
               boundary_stroke: str = "#c03030") -> str:
    """One line element per edge; boundary edges drawn wider and in color.

    The viewBox covers the mesh with a 5% margin and the y axis is flipped
    so that the drawing matches the mesh coordinate system.
    """
    if mesh.nn == 0:
        return ('<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1 1">'
                "</svg>\n")
    xs = [p.x for p in mesh.points]
    ys = [p.y for p in mesh.points]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    w = maxx - minx
    h = maxy - miny
    margin = 0.05 * max(w, h, 1e-12)
    vb = (minx - margin, -(maxy + margin), w + 2 * margin, h + 2 * margin)
    thin = 0.0015 * max(w + 2 * margin, h + 2 * margin)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_f(vb[0])} {_f(vb[1])} {_f(vb[2])} {_f(vb[3])}">',
        # mesh y grows upward, svg y grows downward
        '<g transform="scale(1,-1)">',
    ]
    for e in mesh.edges:
        pa = mesh.points[e.a]
        pb = mesh.points[e.b]
        color = boundary_stroke if e.is_boundary else stroke
        width = 2.0 * thin if e.is_boundary else thin
        out.append(
            f'<line x1="{_f(pa.x)}" y1="{_f(pa.y)}" '
            f'x2="{_f(pb.x)}" y2="{_f(pb.y)}" '
            f'stroke="{color}" stroke-width="{_f(width)}" '
            'stroke-linecap="round"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
