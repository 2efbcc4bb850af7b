"""Graph families with canonical embeddings and outer anchors."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from scipy.spatial import Delaunay

from .errors import BadParameter
from .plane_graph import PlaneGraph, from_coordinates

FAMILIES = ("grid", "tri", "cycle", "path", "random", "net5", "hex19")


def square_grid(n: int) -> PlaneGraph:
    """``n x n`` grid; vertex ``r*n + c``.  The walk starts at a corner."""
    if n < 1:
        raise BadParameter("square grid needs n >= 1")
    pts = [(c, -r) for r in range(n) for c in range(n)]
    edges = []
    for r in range(n):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < n:
                edges.append((v, v + n))
    return from_coordinates(pts, edges, anchor=(0, n) if n > 1 else None)


def triangular_grid(n: int) -> PlaneGraph:
    """Triangular grid with ``n`` vertices per side, rows numbered from the apex.

    The walk starts at the apex, so thirds of the peripheral walk are exactly
    the three sides of the triangle.
    """
    if n < 1:
        raise BadParameter("triangular grid needs n >= 1")
    ids = {}
    pts = []
    for r in range(n):
        for c in range(r + 1):
            ids[r, c] = len(pts)
            pts.append((c - r / 2, -r * math.sqrt(3) / 2))
    edges = []
    for (r, c), v in ids.items():
        if c < r:
            edges.append((v, ids[r, c + 1]))
        if r + 1 < n:
            edges.append((v, ids[r + 1, c]))
            edges.append((v, ids[r + 1, c + 1]))
    return from_coordinates(pts, edges, anchor=(0, 1) if n > 1 else None)


def cycle(n: int) -> PlaneGraph:
    """``C_n`` with vertex ``t`` at walk position ``t``."""
    if n < 3:
        raise BadParameter("cycle needs n >= 3")
    pts = [(math.cos(2 * math.pi * t / n), math.sin(2 * math.pi * t / n)) for t in range(n)]
    return from_coordinates(pts, [(t, (t + 1) % n) for t in range(n)], anchor=(0, 1))


def path(n: int) -> PlaneGraph:
    if n < 1:
        raise BadParameter("path needs n >= 1")
    return from_coordinates([(t, 0) for t in range(n)], [(t, t + 1) for t in range(n - 1)])


def _random_points(n, rng):
    return rng.random((n, 2))


def random_triangulation(n: int, seed: int = 0) -> PlaneGraph:
    """Delaunay triangulation of ``n`` uniform random points (deterministic in ``seed``)."""
    if n < 3:
        raise BadParameter("random triangulation needs n >= 3")
    rng = np.random.default_rng(seed)
    pts = _random_points(n, rng)
    return from_coordinates(pts.tolist(), _delaunay_edges(pts))


def _delaunay_edges(pts):
    tri = Delaunay(pts)
    edges = set()
    for a, b, c in tri.simplices:
        for u, v in ((a, b), (b, c), (a, c)):
            edges.add((min(u, v), max(u, v)))
    return sorted((int(u), int(v)) for u, v in edges)


def random_plane_graph(n: int, seed: int = 0, keep: float = 0.5) -> PlaneGraph:
    """Connected spanning subgraph of a random triangulation.

    A random spanning tree is always kept; every other edge survives with
    probability ``keep``.
    """
    if n < 1:
        raise BadParameter("n must be positive")
    rng = np.random.default_rng(seed)
    if n < 3:
        return path(n)
    pts = _random_points(n, rng)
    edges = _delaunay_edges(pts)
    order = rng.permutation(len(edges))
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for i in order:
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append((u, v))
        elif rng.random() < keep:
            chosen.append((u, v))
    return from_coordinates(pts.tolist(), sorted(chosen))


def _split_segments(points, segments):
    """Edges of a drawing given as straight segments through collinear points."""
    edges = set()
    for p, q in segments:
        (x0, y0), (x1, y1) = p, q
        on = []
        for i, (x, y) in enumerate(points):
            cross = (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0)
            if cross != 0:
                continue
            span = (x1 - x0) ** 2 + (y1 - y0) ** 2
            t = Fraction((x - x0) * (x1 - x0) + (y - y0) * (y1 - y0), span)
            if 0 <= t <= 1:
                on.append((t, i))
        on.sort()
        for (_, a), (_, b) in zip(on, on[1:]):
            edges.add((min(a, b), max(a, b)))
    return sorted(edges)


def five_vertex_net() -> PlaneGraph:
    """Square ``a b c d`` with diagonal ``b-d`` subdivided by ``e``.

    Ids: a=0, b=1, c=2, d=3, e=4.  The walk is ``a, b, c, d, a``, so the frame
    ``(W, 1, 2)`` has sides {a, b}, {b, c}, {c, d, a}.
    """
    pts = [(0, 2), (2, 2), (2, 0), (0, 0), (1, 1)]
    # mirrored so the counterclockwise walk visits a, b, c, d in order
    pts = [(-x, y) for x, y in pts]
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (1, 4)]
    return from_coordinates(pts, edges, anchor=(0, 1))


# x in units of sqrt(3)/2, y in halves
_HEX_POINTS = [
    (0, 2), (0, 4), (0, 6), (1, 1), (1, 3), (1, 5), (1, 7), (2, 0), (2, 2), (2, 4),
    (2, 6), (2, 8), (3, 1), (3, 3), (3, 5), (3, 7), (4, 2), (4, 4), (4, 6),
]
_HEX_SEGMENTS = [
    ((2, 0), (0, 2)), ((0, 2), (0, 6)), ((0, 6), (2, 8)), ((2, 8), (4, 6)),
    ((4, 6), (4, 2)), ((4, 2), (2, 0)),
    ((0, 2), (2, 4)), ((2, 4), (4, 2)),
    ((1, 1), (3, 3)), ((3, 3), (3, 7)),
    ((1, 7), (1, 3)), ((1, 3), (3, 1)),
    ((2, 8), (2, 4)),
    ((0, 4), (2, 6)), ((2, 6), (4, 4)),
]


def hex_patch() -> PlaneGraph:
    """The 19-vertex hexagonal patch used as the worked search-tree example.

    Anchored at the bottom corner so that the thirds frame ``(W, 4, 8)``
    gives the blue, red and yellow sides used in the tests.
    """
    pts = [(-a, b) for a, b in _HEX_POINTS]
    edges = _split_segments(_HEX_POINTS, _HEX_SEGMENTS)
    idx = {p: i for i, p in enumerate(_HEX_POINTS)}
    return from_coordinates(pts, edges, anchor=(idx[2, 0], idx[1, 1]))


def generate(family: str, n: int | None = None, seed: int = 0) -> PlaneGraph:
    if family in ("grid", "square_grid"):
        return square_grid(_need(n))
    if family in ("tri", "triangular_grid"):
        return triangular_grid(_need(n))
    if family == "cycle":
        return cycle(_need(n))
    if family in ("random", "random_triangulation"):
        return random_triangulation(_need(n), seed)
    if family == "path":
        return path(_need(n))
    if family == "net5":
        return five_vertex_net()
    if family == "hex19":
        return hex_patch()
    raise BadParameter(f"unknown family {family!r}")


def _need(n):
    if n is None:
        raise BadParameter("this family needs a size parameter")
    return int(n)
