"""Minimum net covers through 0/1 shortest paths in the face graph.

Arc ``u -> v`` of the doubled face graph costs 1 when ``v`` is an original
vertex and 0 when it is a face vertex, so a path's cost counts the original
vertices it enters.  For every candidate root the cost of reaching each side
is summed, plus the root's own weight; the cheapest root and its three
shortest paths give a vine whose original vertices form a minimum cover.

Two routes compute the side distances ``b, r, y`` for all roots:

``"per_source"``
    one 0/1 BFS per root, scanning the side vertex sets (quadratic).
``"sweep"``
    one multi-source BFS per side with vertex weights.  Because arc costs
    are terminal-vertex weights, ``dist(x, y) = D(x, y) - w(x)`` where ``D``
    is the symmetric vertex-weighted distance, hence
    ``b(x) = D(blue, x) - w(x)``.  Linear per call; identical values.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .frame_net import Frame3
from .plane_graph import FaceGraph, PlaneGraph, build_face_graph

INF = float("inf")


@dataclass(frozen=True)
class WeightedDigraph:
    """Doubled face graph: arcs both ways along every edge, cost = terminal weight."""

    succ: tuple[tuple[int, ...], ...]
    weight: tuple[int, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.succ)

    @property
    def num_arcs(self) -> int:
        return sum(len(s) for s in self.succ)

    def arc_weight(self, u: int, v: int) -> int:
        return self.weight[v]


def directed_face_graph(fg: FaceGraph) -> WeightedDigraph:
    return WeightedDigraph(fg.graph.rotation, tuple(int(o) for o in fg.origin))


@dataclass(frozen=True)
class DistanceRow:
    source: int
    dist: tuple
    parent: tuple  # -1 for the source and unreachable vertices


@dataclass(frozen=True)
class VineTree:
    root: int
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]  # blue, red, yellow
    vertices: frozenset
    cost: int

    @property
    def terminals(self):
        return tuple(p[-1] for p in self.paths)


@dataclass(frozen=True)
class NetCoverResult:
    order: int
    cover: frozenset
    vine: frozenset
    center: int
    d_center: int
    tree: VineTree = field(repr=False)
    face_graph: FaceGraph = field(repr=False, compare=False)


def _bfs01(succ, weight, dist):
    # seeds must leave the deque in nondecreasing distance order
    dq = deque(sorted((v for v, dv in enumerate(dist) if dv != INF), key=dist.__getitem__))
    while dq:
        u = dq.popleft()
        du = dist[u]
        for v in succ[u]:
            nd = du + weight[v]
            if nd < dist[v]:
                dist[v] = nd
                if weight[v]:
                    dq.append(v)
                else:
                    dq.appendleft(v)
    return dist


def sssp_01(d: WeightedDigraph, source: int) -> DistanceRow:
    """Exact 0/1-weighted distances from ``source``; predecessors tie-broken by id."""
    dist = [INF] * d.num_vertices
    dist[source] = 0
    _bfs01(d.succ, d.weight, dist)
    parent = [-1] * d.num_vertices
    for v in range(d.num_vertices):
        if v == source or dist[v] == INF:
            continue
        want = dist[v] - d.weight[v]
        parent[v] = min(u for u in d.succ[v] if dist[u] == want)
    return DistanceRow(source, tuple(dist), tuple(parent))


def _vertex_weighted_from(d: WeightedDigraph, sources):
    dist = [INF] * d.num_vertices
    for s in sources:
        dist[s] = d.weight[s]
    return _bfs01(d.succ, d.weight, dist)


def side_distances(d: WeightedDigraph, frame: Frame3, method: str = "sweep"):
    """Lists ``b, r, y``: cost from every vertex to the nearest vertex of each side."""
    sides = frame.sides
    nv = d.num_vertices
    if method == "sweep":
        out = []
        for side in sides:
            dv = _vertex_weighted_from(d, side)
            out.append([dv[x] - d.weight[x] for x in range(nv)])
        return tuple(out)
    if method == "per_source":
        side_lists = [sorted(s) for s in sides]
        b, r, y = [0] * nv, [0] * nv, [0] * nv
        for i in range(nv):
            dist = [INF] * nv
            dist[i] = 0
            _bfs01(d.succ, d.weight, dist)
            b[i] = min(dist[u] for u in side_lists[0])
            r[i] = min(dist[u] for u in side_lists[1])
            y[i] = min(dist[u] for u in side_lists[2])
        return b, r, y
    raise ValueError(f"unknown method {method!r}")


def extract_vine_tree(row: DistanceRow, frame: Frame3, fg: FaceGraph) -> VineTree:
    """Three shortest paths from ``row.source`` to the sides; the nearest
    terminal and every predecessor are chosen by smallest id among ties."""
    paths = []
    for side in frame.sides:
        target = min(side, key=lambda u: (row.dist[u], u))
        p = [target]
        while p[-1] != row.source:
            p.append(row.parent[p[-1]])
        paths.append(tuple(reversed(p)))
    verts = frozenset().union(*paths)
    cost = sum(1 for v in verts if fg.origin[v])
    return VineTree(row.source, tuple(paths), verts, cost)


def net_alg(g: PlaneGraph, frame: Frame3, method: str = "sweep", fg: FaceGraph | None = None):
    """Minimum cover of the net of ``g`` framed by ``frame``.

    Returns ``(NetCoverResult, VineTree)``.
    """
    if fg is None:
        fg = build_face_graph(g)
    d = directed_face_graph(fg)
    b, r, y = side_distances(d, frame, method)
    best, center = INF, -1
    for i in range(d.num_vertices):
        di = b[i] + r[i] + y[i] + d.weight[i]
        if di < best:  # strict: the first (smallest id) minimum wins
            best, center = di, i
    row = sssp_01(d, center)
    tree = extract_vine_tree(row, frame, fg)
    cover = frozenset(v for v in tree.vertices if fg.origin[v])
    if len(cover) != best:
        raise AssertionError(f"vine cost {len(cover)} differs from optimum {best}")
    res = NetCoverResult(len(cover), cover, tree.vertices, center, int(best), tree, fg)
    return res, tree


def net_order(g: PlaneGraph, frame: Frame3, method: str = "sweep") -> int:
    return net_alg(g, frame, method)[0].order
