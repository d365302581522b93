import math
import random
import warnings

import pytest

from trigrid.diagnostics import DiagnosticCode, MeshWarning
from trigrid.geom import Point2
from trigrid.meshmodel import (Mesh, euler_check, finished_mesh_violations,
                               validate_mesh)
from trigrid.refine import (InsertStrategy, SwapCriterion, insert_nodes,
                            smooth_mesh, swap_edges)
from trigrid.spacing import Uniform

from conftest import grid_mesh, square_mesh
from oracles import (empty_circumcircle_violations, max_angle,
                     mesh_signed_area, neighbor_centroid_residual,
                     sorted_angle_vector)


def one_triangle(a=(0, 0), b=(3, 0), c=(0, 3)) -> Mesh:
    m = Mesh()
    for x, y in (a, b, c):
        m.add_point(Point2(float(x), float(y)))
    m.add_boundary_edge(0, 1)
    m.add_boundary_edge(1, 2)
    m.add_boundary_edge(2, 0)
    m.add_triangle(0, 1, 2)
    return m


def quad_mesh(corners, diagonal=(0, 2)) -> Mesh:
    """Two triangles over a quad given CCW, split by the chosen diagonal."""
    m = Mesh()
    for x, y in corners:
        m.add_point(Point2(float(x), float(y)))
    for i in range(4):
        m.add_boundary_edge(i, (i + 1) % 4)
    i, k = diagonal
    j, l = (i + 1) % 4, (k + 1) % 4
    m.add_triangle(i, j, k)
    m.add_triangle(k, l, i)
    return m


class TestInsert:
    def test_big_triangle_gets_centroid_node(self):
        m = one_triangle()
        added = insert_nodes(m, Uniform(0.5))
        assert added == 1
        assert m.points[3] == Point2(1.0, 1.0)
        assert (m.nn, m.nl, m.nt) == (4, 6, 3)
        assert validate_mesh(m) == []

    def test_fine_enough_mesh_is_left_alone(self):
        m = one_triangle()
        before = m.copy()
        assert insert_nodes(m, Uniform(10.0)) == 0
        assert m.same_structure(before)

    def test_both_square_halves_split(self):
        m = square_mesh()
        added = insert_nodes(m, Uniform(0.1))
        assert added == 2
        assert (m.nn, m.nt) == (6, 6)
        assert euler_check(m, holes=0)
        assert mesh_signed_area(m) == pytest.approx(1.0, abs=1e-12)

    def test_single_sweep_ignores_new_triangles(self):
        # the split children are still oversized for this spacing, but one
        # call only visits the triangles that existed when it started
        m = one_triangle()
        assert insert_nodes(m, Uniform(0.5)) == 1
        assert insert_nodes(m, Uniform(0.5)) == 3

    def test_factor_scales_the_area_threshold(self):
        δ = 0.5
        m = one_triangle()
        # area 4.5; threshold factor * (sqrt(3)/4) δ² ≈ factor * 0.108
        assert insert_nodes(m, Uniform(δ), factor=50.0) == 0

    def test_other_strategies_not_available(self):
        for strategy in (InsertStrategy.CIRCUMCENTER,
                         InsertStrategy.DELTA_FROM_VERTICES):
            with pytest.raises(NotImplementedError):
                insert_nodes(one_triangle(), Uniform(0.5), strategy=strategy)


class TestSwap:
    def test_cocircular_quad_never_swaps(self):
        for criterion in SwapCriterion:
            m = quad_mesh([(0, 0), (2, 0), (2, 1), (0, 1)])
            assert swap_edges(m, criterion) == 0

    def test_bad_diagonal_swapped_once(self):
        m = quad_mesh([(0, 0), (1, 0), (1.2, 1), (0, 2)], diagonal=(1, 3))
        assert empty_circumcircle_violations(m) > 0
        swaps = swap_edges(m, SwapCriterion.DELAUNAY_MAX_MIN)
        assert swaps == 1
        assert empty_circumcircle_violations(m) == 0
        assert validate_mesh(m) == []

    def test_good_diagonal_kept(self):
        m = quad_mesh([(0, 0), (1, 0), (1.2, 1), (0, 2)], diagonal=(0, 2))
        assert swap_edges(m, SwapCriterion.DELAUNAY_MAX_MIN) == 0

    def test_nonconvex_quad_left_alone(self):
        # reflex corner at node 2; the only valid diagonal passes through it
        # and flipping it would turn the pair inside out
        m = quad_mesh([(0, 0), (2, 0), (0.4, 0.4), (0, 2)], diagonal=(0, 2))
        for criterion in SwapCriterion:
            assert swap_edges(m.copy(), criterion) == 0

    def test_boundary_edges_never_swap(self):
        m = square_mesh()
        boundary = {(e.a, e.b) for e in m.edges if e.is_boundary}
        swap_edges(m, SwapCriterion.DELAUNAY_MAX_MIN)
        assert boundary == {(e.a, e.b) for e in m.edges if e.is_boundary}

    def test_angle_vector_grows_at_every_swap(self):
        rng = random.Random(4)
        m = grid_mesh(5, 5, jitter=0.25, rng=rng)
        history = [sorted_angle_vector(m)]
        swap_edges(m, SwapCriterion.DELAUNAY_MAX_MIN,
                   on_swap=lambda mm, eid: history.append(sorted_angle_vector(mm)))
        assert len(history) > 1
        for older, newer in zip(history, history[1:]):
            assert newer > older
        assert empty_circumcircle_violations(m) == 0

    def test_min_max_reduces_the_largest_angle(self):
        m = quad_mesh([(0, 0), (1, 0), (1.2, 1), (0, 2)], diagonal=(1, 3))
        worst = max_angle(m)
        assert swap_edges(m, SwapCriterion.MIN_MAX) == 1
        assert max_angle(m) < worst

    def test_sweep_cap_warns(self):
        rng = random.Random(9)
        m = grid_mesh(4, 4, jitter=0.25, rng=rng)
        with pytest.warns(MeshWarning) as rec:
            swap_edges(m, SwapCriterion.DELAUNAY_MAX_MIN, max_sweeps=1)
        assert rec.list[0].message.code is DiagnosticCode.NON_CONVERGENCE


class TestSmooth:
    def square_with_center(self, at=(0.3, 0.3)) -> Mesh:
        m = Mesh()
        for x, y in [(0, 0), (1, 0), (1, 1), (0, 1)]:
            m.add_point(Point2(float(x), float(y)))
        m.add_point(Point2(*at))
        for i in range(4):
            m.add_boundary_edge(i, (i + 1) % 4)
        for i in range(4):
            m.add_triangle(i, (i + 1) % 4, 4)
        return m

    def test_offset_center_node_settles_at_the_middle(self):
        m = self.square_with_center((0.3, 0.3))
        out, residual = smooth_mesh(m)
        assert out.points[4].x == pytest.approx(0.5, abs=1e-6)
        assert out.points[4].y == pytest.approx(0.5, abs=1e-6)
        assert residual <= 1e-3 * 1.0  # under tol_fraction of edge scale

    def test_boundary_nodes_bit_identical(self):
        m = self.square_with_center((0.28, 0.41))
        before = [m.points[i] for i in range(4)]
        out, _ = smooth_mesh(m)
        for i in range(4):
            assert out.points[i].x == before[i].x
            assert out.points[i].y == before[i].y

    def test_no_free_nodes_warns_and_returns_zero(self):
        m = square_mesh()
        with pytest.warns(MeshWarning) as rec:
            out, moved = smooth_mesh(m)
        assert rec.list[0].message.code is DiagnosticCode.NO_FREE_NODES
        assert moved == 0.0
        assert out.same_structure(m)

    def test_interior_nodes_end_at_neighbor_centroids(self):
        rng = random.Random(12)
        m = grid_mesh(6, 6, jitter=0.2, rng=rng)
        out, _ = smooth_mesh(m, tol_fraction=1e-6, max_sweeps=5000)
        assert neighbor_centroid_residual(out) < 1e-4

    def test_connectivity_untouched(self):
        rng = random.Random(3)
        m = grid_mesh(5, 4, jitter=0.2, rng=rng)
        tris = [t.nodes for t in m.triangles]
        out, _ = smooth_mesh(m)
        assert [t.nodes for t in out.triangles] == tris
        assert finished_mesh_violations(out) == []

    def test_sweep_cap_warns(self):
        # coupled free nodes: Jacobi keeps creeping, never exactly zero
        rng = random.Random(7)
        m = grid_mesh(5, 5, jitter=0.2, rng=rng)
        with pytest.warns(MeshWarning) as rec:
            smooth_mesh(m, tol_fraction=1e-15, max_sweeps=2)
        assert any(r.message.code is DiagnosticCode.NON_CONVERGENCE
                   for r in rec.list)


class TestPipelineCombination:
    def test_insert_then_swap_then_smooth_keeps_area(self):
        m = square_mesh()
        for _ in range(3):
            if insert_nodes(m, Uniform(0.3)) == 0:
                break
            swap_edges(m, SwapCriterion.DELAUNAY_MAX_MIN)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            m, _ = smooth_mesh(m)
        assert validate_mesh(m) == []
        assert mesh_signed_area(m) == pytest.approx(1.0, abs=1e-9)
