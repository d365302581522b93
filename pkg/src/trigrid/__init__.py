"""trigrid: unstructured triangular mesh generation for planar domains.

Three generators over a shared mesh model: plain Delaunay triangulation of a
node set, advancing-front meshing driven by a spacing field, and refinement
meshing that grows interior nodes until the spacing is met. Plus boundary
parsing, quality histograms, JSON/SVG export, a CLI and a local HTTP service.
"""

from .advancing_front import (FrontStrategy, advancing_front_mesh,
                              ideal_vertex, select_candidates)
from .boundary import (BoundarySegment, DiscretizedBoundary, Domain,
                       discretize_boundary, format_mg, min_angle_node,
                       min_y_node, parse_mg, point_in_domain, polyline_sample,
                       spline_sample)
from .delaunay import DelaunayMode, delaunay_mesh
from .diagnostics import (Diagnostic, DiagnosticCode, MeshError, MeshWarning,
                          OrientationError, ParamError, ParseError)
from .export import export_json, import_json, render_svg
from .geom import (CirclePosition, Circumcircle, Point2, Tolerances,
                   circumcircle, edge_cross, incircle_test, orient2d,
                   segment_point_dist, signed_area)
from .meshmodel import (AdjacencyKind, Edge, Mesh, Triangle, Violation,
                        adjacency, boundary_loops, euler_check,
                        finished_mesh_violations, validate_mesh)
from .pipeline import MeshMethod, MeshParams, MeshResult, run_mesh
from .quality import (Histogram, HistogramKind, histogram_report,
                      mesh_histogram, mesh_statistics, quality_report)
from .refine import (InsertStrategy, SwapCriterion, insert_nodes, smooth_mesh,
                     swap_edges)
from .spacing import (Circular, SpacingField, Stripe, Uniform, eval_spacing,
                      format_spacing, parse_spacing)
from .steiner import SteinerOptions, steiner_mesh

__version__ = "0.1.0"

__all__ = [
    "AdjacencyKind", "BoundarySegment", "CirclePosition", "Circular",
    "Circumcircle", "DelaunayMode", "Diagnostic", "DiagnosticCode",
    "DiscretizedBoundary", "Domain", "Edge", "FrontStrategy", "Histogram",
    "HistogramKind", "InsertStrategy", "Mesh", "MeshError", "MeshMethod",
    "MeshParams", "MeshResult", "MeshWarning", "OrientationError",
    "ParamError", "ParseError", "Point2", "SpacingField", "SteinerOptions",
    "Stripe", "SwapCriterion", "Tolerances", "Triangle", "Uniform",
    "Violation", "adjacency", "advancing_front_mesh", "boundary_loops",
    "circumcircle", "delaunay_mesh", "discretize_boundary", "edge_cross",
    "euler_check", "eval_spacing", "export_json", "finished_mesh_violations",
    "format_mg", "format_spacing", "histogram_report", "ideal_vertex",
    "import_json", "incircle_test", "insert_nodes", "mesh_histogram",
    "mesh_statistics", "min_angle_node", "min_y_node", "orient2d", "parse_mg",
    "parse_spacing", "point_in_domain", "polyline_sample", "quality_report",
    "render_svg", "run_mesh", "segment_point_dist", "select_candidates",
    "signed_area", "smooth_mesh", "spline_sample", "steiner_mesh",
    "swap_edges", "validate_mesh", "__version__",
]
