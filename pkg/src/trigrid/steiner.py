"""Refinement meshing: triangulate the boundary nodes, then grow the interior.

The boundary discretization is triangulated as-is, then rounds of node
insertion, edge swapping and optional smoothing run until one insertion
sweep finds nothing left to split. The result honors the spacing field
without ever moving or losing a boundary node.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .boundary import DiscretizedBoundary
from .delaunay import DelaunayMode, delaunay_mesh
from .diagnostics import DiagnosticCode, MeshError, ParamError
from .geom import DEFAULT_TOL, Tolerances
from .meshmodel import Mesh, _crossing_pairs
from .refine import SwapCriterion, insert_nodes, smooth_mesh, swap_edges
from .spacing import SpacingField


@dataclass(frozen=True)
class SteinerOptions:
    factor: float = 1.0          # size slack: split above factor * ideal area
    smoothing: bool = True       # relax free nodes between rounds
    final_edge_check: bool = True
    max_rounds: int = 100

    def __post_init__(self):
        if self.factor <= 0.0:
            raise ParamError("factor must be positive")
        if self.max_rounds < 1:
            raise ParamError("max_rounds must be at least 1")


def steiner_mesh(boundary: DiscretizedBoundary, spacing: SpacingField,
                 options: SteinerOptions = SteinerOptions(),
                 tol: Tolerances = DEFAULT_TOL,
                 max_nodes: Optional[int] = None) -> Mesh:
    """Mesh the domain by iterative refinement of its boundary triangulation.

    On return no triangle exceeds the size test used for insertion, unless
    the round cap was hit, which leaves a warning on the mesh.
    """
    mesh = delaunay_mesh(boundary=boundary, mode=DelaunayMode.WITH_BOUNDARIES,
                         tol=tol)
    saturated = False
    for _ in range(options.max_rounds):
        inserted = insert_nodes(mesh, spacing, options.factor, tol=tol)
        if inserted == 0:
            saturated = True
            break
        if max_nodes is not None and mesh.nn > max_nodes:
            raise MeshError(DiagnosticCode.NODE_BUDGET_EXCEEDED,
                            f"node budget {max_nodes} exceeded")
        swap_edges(mesh, SwapCriterion.DELAUNAY_MAX_MIN, tol=tol)
        if options.smoothing:
            smooth_mesh(mesh)
    if not saturated:
        mesh.warn(DiagnosticCode.CHECK_MESH_WARNING,
                  f"refinement stopped at the {options.max_rounds}-round cap "
                  "with oversized triangles left")
    if options.final_edge_check:
        pairs = _crossing_pairs(mesh, tol, limit=1)
        if pairs:
            e1, e2 = pairs[0]
            raise MeshError(DiagnosticCode.EDGE_CROSSING_DETECTED,
                            f"edges {e1} and {e2} cross in the finished mesh")
    return mesh
