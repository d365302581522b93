import math
import warnings

import pytest

from trigrid.boundary import discretize_boundary, parse_mg
from trigrid.delaunay import DelaunayMode, delaunay_mesh
from trigrid.diagnostics import DiagnosticCode, MeshError, ParamError
from trigrid.meshmodel import euler_check, validate_mesh
from trigrid.refine import SwapCriterion, swap_edges
from trigrid.spacing import Circular, Uniform, parse_spacing
from trigrid.steiner import SteinerOptions, steiner_mesh

from conftest import CORPUS, corpus_spacing, corpus_text
from oracles import (boundary_polygon_area, mesh_signed_area,
                     proper_crossing_pairs, triangle_area)

SQUARE_MG = """SEGMENT
4
1 2 2 0
1 0.0 0.0
2 1.0 0.0
2 2 3 0
1 1.0 0.0
2 1.0 1.0
3 2 4 0
1 1.0 1.0
2 0.0 1.0
4 2 1 0
1 0.0 1.0
2 0.0 0.0
ENDRC
"""


def square_boundary(delta):
    return discretize_boundary(parse_mg(SQUARE_MG), Uniform(delta))


class TestOptions:
    def test_bad_factor_rejected(self):
        with pytest.raises(ParamError):
            SteinerOptions(factor=0.0)
        with pytest.raises(ParamError):
            SteinerOptions(factor=-2.0)

    def test_bad_round_cap_rejected(self):
        with pytest.raises(ParamError):
            SteinerOptions(max_rounds=0)


class TestMeshing:
    def test_coarse_square_is_plain_triangulation(self):
        spacing = Uniform(2.0)
        b = square_boundary(2.0)
        m = steiner_mesh(b, spacing)
        ref = delaunay_mesh(boundary=b, mode=DelaunayMode.WITH_BOUNDARIES)
        swap_edges(ref, SwapCriterion.DELAUNAY_MAX_MIN)
        assert (m.nn, m.nl, m.nt) == (ref.nn, ref.nl, ref.nt)
        assert m.nn == 4  # nothing to insert: the first sweep found no work

    def test_fine_square_respects_the_area_bound(self):
        delta = 0.2
        spacing = Uniform(delta)
        m = steiner_mesh(square_boundary(delta), spacing)
        assert validate_mesh(m) == []
        limit = 1.05 * (math.sqrt(3) / 4) * delta * delta
        for t in m.triangles:
            pa, pb, pc = (m.points[i] for i in t.nodes)
            assert triangle_area(pa, pb, pc) <= limit

    def test_larger_factor_means_fewer_nodes(self):
        delta = 0.2
        spacing = Uniform(delta)
        tight = steiner_mesh(square_boundary(delta), spacing,
                             SteinerOptions(factor=1.0))
        loose = steiner_mesh(square_boundary(delta), spacing,
                             SteinerOptions(factor=3.0))
        assert loose.nn < tight.nn

    def test_area_conserved(self):
        delta = 0.2
        m = steiner_mesh(square_boundary(delta), Uniform(delta))
        assert mesh_signed_area(m) == pytest.approx(1.0, abs=1e-9)

    def test_boundary_nodes_survive_untouched(self):
        delta = 0.25
        b = square_boundary(delta)
        m = steiner_mesh(b, Uniform(delta))
        for i, p in enumerate(b.mesh.points):
            assert m.points[i] == p

    def test_smoothing_off_keeps_inserted_nodes_in_place(self):
        delta = 0.4
        spacing = Uniform(delta)
        plain = steiner_mesh(square_boundary(delta), spacing,
                             SteinerOptions(smoothing=False))
        assert validate_mesh(plain) == []
        assert mesh_signed_area(plain) == pytest.approx(1.0, abs=1e-9)

    def test_round_cap_leaves_warning_on_mesh(self):
        delta = 0.05
        spacing = Uniform(delta)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            m = steiner_mesh(square_boundary(delta), spacing,
                             SteinerOptions(max_rounds=1))
        assert any(w.code is DiagnosticCode.CHECK_MESH_WARNING
                   for w in m.warnings)

    def test_node_budget_enforced(self):
        with pytest.raises(MeshError) as err:
            steiner_mesh(square_boundary(0.05), Uniform(0.05), max_nodes=50)
        assert err.value.code is DiagnosticCode.NODE_BUDGET_EXCEEDED

    def test_graded_field_grades_the_mesh(self):
        spacing = Circular(0.3, 0.05, 4.0, 0.5, 0.5)
        m = steiner_mesh(square_boundary(0.3), spacing)
        assert validate_mesh(m) == []
        assert proper_crossing_pairs(m) == []
        near = [e for e in m.edges
                if math.hypot((m.points[e.a].x + m.points[e.b].x) / 2 - 0.5,
                              (m.points[e.a].y + m.points[e.b].y) / 2 - 0.5)
                < 0.2]
        lengths = [math.hypot(m.points[e.a].x - m.points[e.b].x,
                              m.points[e.a].y - m.points[e.b].y)
                   for e in near]
        assert lengths and max(lengths) < 0.3

    @pytest.mark.parametrize("name", sorted(CORPUS))
    def test_corpus_domains(self, name):
        dom = parse_mg(corpus_text(name))
        spacing = parse_spacing(corpus_spacing(name))
        b = discretize_boundary(dom, spacing)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            m = steiner_mesh(b, spacing)
        assert validate_mesh(m) == []
        assert proper_crossing_pairs(m) == []
        assert euler_check(m, holes=b.holes)
        assert mesh_signed_area(m) == pytest.approx(
            boundary_polygon_area(b.mesh), abs=1e-9 * abs(boundary_polygon_area(b.mesh)))
