import math
import random
from pathlib import Path

import pytest

from trigrid.geom import Point2
from trigrid.meshmodel import Mesh

DATA = Path(__file__).parent / "data"

CORPUS = {
    "rectangle": ("rectangle.mg", "uniform:4"),
    "channel": ("channel.mg", "uniform:0.12"),
    "airfoil": ("airfoil.mg", "uniform:0.05"),
    "annulus": ("annulus.mg", "uniform:0.35"),
}


def corpus_text(name: str) -> str:
    return (DATA / CORPUS[name][0]).read_text(encoding="utf-8")


def corpus_spacing(name: str) -> str:
    return CORPUS[name][1]


@pytest.fixture
def rect_text() -> str:
    return corpus_text("rectangle")


def square_mesh() -> Mesh:
    """Unit square split by the 0-2 diagonal, boundary flagged, both CCW."""
    m = Mesh()
    for x, y in ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)):
        m.add_point(Point2(x, y))
    for a, b in ((0, 1), (1, 2), (2, 3), (3, 0)):
        m.add_boundary_edge(a, b)
    m.add_triangle(0, 1, 2)
    m.add_triangle(0, 2, 3)
    return m


def fan_square_mesh() -> Mesh:
    """Unit square with a center node joined to all four corners."""
    m = Mesh()
    for x, y in ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.5, 0.5)):
        m.add_point(Point2(x, y))
    for a, b in ((0, 1), (1, 2), (2, 3), (3, 0)):
        m.add_boundary_edge(a, b)
    for a, b in ((0, 1), (1, 2), (2, 3), (3, 0)):
        m.add_triangle(a, b, 4)
    return m


def grid_mesh(nx: int, ny: int, jitter: float = 0.0,
              rng: random.Random | None = None) -> Mesh:
    """Structured diagonal-split grid on [0,nx]x[0,ny], optional interior jitter."""
    rng = rng or random.Random(0)
    m = Mesh()
    for j in range(ny + 1):
        for i in range(nx + 1):
            x, y = float(i), float(j)
            if jitter and 0 < i < nx and 0 < j < ny:
                x += rng.uniform(-jitter, jitter)
                y += rng.uniform(-jitter, jitter)
            m.add_point(Point2(x, y))

    def nid(i, j):
        return j * (nx + 1) + i

    for i in range(nx):
        m.add_boundary_edge(nid(i, 0), nid(i + 1, 0))
    for j in range(ny):
        m.add_boundary_edge(nid(nx, j), nid(nx, j + 1))
    for i in range(nx, 0, -1):
        m.add_boundary_edge(nid(i, ny), nid(i - 1, ny))
    for j in range(ny, 0, -1):
        m.add_boundary_edge(nid(0, j), nid(0, j - 1))
    for j in range(ny):
        for i in range(nx):
            m.add_triangle(nid(i, j), nid(i + 1, j), nid(i + 1, j + 1))
            m.add_triangle(nid(i, j), nid(i + 1, j + 1), nid(i, j + 1))
    return m


def equilateral_strip_mesh(cols: int, side: float = 1.0) -> Mesh:
    """One row of upward/downward equilateral triangles, side `side`."""
    m = Mesh()
    h = side * math.sqrt(3.0) / 2.0
    bottom = [m.add_point(Point2(i * side, 0.0)) for i in range(cols + 1)]
    top = [m.add_point(Point2((i + 0.5) * side, h)) for i in range(cols)]
    for i in range(cols):
        m.add_boundary_edge(bottom[i], bottom[i + 1])
    m.add_boundary_edge(bottom[cols], top[cols - 1])
    for i in range(cols - 1, 0, -1):
        m.add_boundary_edge(top[i], top[i - 1])
    m.add_boundary_edge(top[0], bottom[0])
    for i in range(cols):
        m.add_triangle(bottom[i], bottom[i + 1], top[i])
        if i + 1 <= cols - 1:
            m.add_triangle(bottom[i + 1], top[i + 1], top[i])
    return m
