"""Embedded planar graphs given by rotation systems.

A vertex's rotation lists its neighbours in counterclockwise order.  Faces are
traced with the face on the right of every dart: the successor of the dart
``x -> v`` is ``v -> w`` where ``w`` follows ``x`` counterclockwise around
``v``.  Under this convention the unbounded face is walked with the graph on
its left, and the face owning the corner ``(x -> v, v -> w)`` occupies the
angular sector swept counterclockwise from ``x`` to ``w`` at ``v``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import EmbeddingInvalid, EmptySubgraph


@dataclass(frozen=True)
class FaceWalk:
    """Closed boundary walk ``(u_0, ..., u_n)`` of one face, ``u_n == u_0``.

    A face of an isolated vertex has ``n == 0`` and ``vertices == (v,)``.
    """

    face_id: int
    vertices: tuple[int, ...]
    unbounded: bool = False

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def darts(self):
        vs = self.vertices
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]


@dataclass(frozen=True)
class _Faces:
    walks: tuple[FaceWalk, ...]
    dart_face: dict


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    """Simple connected plane graph over dense ids ``0..n-1``.

    ``anchor`` is a dart ``(u, v)`` on the unbounded face; the peripheral walk
    starts ``u, v, ...``.  It is ``None`` only for the single-vertex graph.
    ``labels[i]`` is an external id for vertex ``i`` (identity when omitted);
    subgraphs carry the labels of the graph they were cut from.
    """

    rotation: tuple[tuple[int, ...], ...]
    anchor: tuple[int, int] | None = None
    labels: tuple[int, ...] | None = None
    check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        rot = tuple(tuple(int(x) for x in r) for r in self.rotation)
        object.__setattr__(self, "rotation", rot)
        if self.anchor is not None:
            object.__setattr__(self, "anchor", (int(self.anchor[0]), int(self.anchor[1])))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        if self.check:
            self._validate()

    def _validate(self):
        n = len(self.rotation)
        if n == 0:
            raise EmbeddingInvalid("graph has no vertices")
        if self.labels is not None and len(self.labels) != n:
            raise EmbeddingInvalid("labels length does not match vertex count")
        for v, nbrs in enumerate(self.rotation):
            if len(set(nbrs)) != len(nbrs):
                raise EmbeddingInvalid(f"parallel edges at vertex {v}")
            for u in nbrs:
                if u == v:
                    raise EmbeddingInvalid(f"loop at vertex {v}")
                if not 0 <= u < n:
                    raise EmbeddingInvalid(f"vertex {v} has unknown neighbour {u}")
        adj = self.adjacency
        for v in range(n):
            for u in adj[v]:
                if v not in adj[u]:
                    raise EmbeddingInvalid(f"edge {v}-{u} missing from rotation of {u}")
        if not is_connected(self.rotation):
            raise EmbeddingInvalid("graph is not connected")
        m = self.num_edges
        if n >= 3 and m > 3 * n - 6:
            raise EmbeddingInvalid(f"{m} edges exceed 3n-6 for n={n}")
        if m == 0:
            if self.anchor is not None:
                raise EmbeddingInvalid("single-vertex graph cannot carry an anchor dart")
        else:
            if self.anchor is None:
                raise EmbeddingInvalid("outer face anchor is required")
            u, v = self.anchor
            if not (0 <= u < n and v in adj[u]):
                raise EmbeddingInvalid(f"anchor {self.anchor} is not a dart")
        # Euler's formula is checked when faces are traced.
        self.faces  # noqa: B018

    # -- basic structure -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rotation)

    def __len__(self):
        return len(self.rotation)

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(r) for r in self.rotation)

    @cached_property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def edges(self):
        for u, nbrs in enumerate(self.rotation):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def has_edge(self, u, v) -> bool:
        return v in self.adjacency[u]

    def label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]

    @cached_property
    def index_of(self) -> dict:
        """Map from label to local vertex id."""
        if self.labels is None:
            return {v: v for v in range(self.n)}
        return {lab: v for v, lab in enumerate(self.labels)}

    @cached_property
    def _position(self) -> tuple[dict, ...]:
        return tuple({u: i for i, u in enumerate(r)} for r in self.rotation)

    def ccw_next(self, v: int, x: int) -> int:
        """Neighbour following ``x`` counterclockwise around ``v``."""
        r = self.rotation[v]
        return r[(self._position[v][x] + 1) % len(r)]

    def cw_next(self, v: int, x: int) -> int:
        r = self.rotation[v]
        return r[(self._position[v][x] - 1) % len(r)]

    def next_dart(self, u: int, v: int) -> tuple[int, int]:
        return (v, self.ccw_next(v, u))

    # -- faces -----------------------------------------------------------

    @cached_property
    def faces(self) -> _Faces:
        return _trace(self)

    @property
    def outer_face(self) -> FaceWalk:
        return self.faces.walks[0]

    @property
    def outer_walk(self) -> tuple[int, ...]:
        return self.faces.walks[0].vertices

    def relabel(self, labels) -> "PlaneGraph":
        return PlaneGraph(self.rotation, self.anchor, tuple(labels), check=False)

    def with_anchor(self, anchor) -> "PlaneGraph":
        if anchor is not None and self.faces.dart_face.get(tuple(anchor)) != 0:
            raise EmbeddingInvalid(f"dart {anchor} is not on the unbounded face")
        return PlaneGraph(self.rotation, anchor, self.labels, check=False)

    def __eq__(self, other):
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return (
            self.rotation == other.rotation
            and self.anchor == other.anchor
            and tuple(map(self.label, range(self.n))) == tuple(map(other.label, range(other.n)))
        )

    def __hash__(self):
        return hash((self.rotation, self.anchor))


def is_connected(rotation: Sequence[Sequence[int]]) -> bool:
    n = len(rotation)
    if n == 0:
        return False
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for u in rotation[v]:
            if not seen[u]:
                seen[u] = True
                count += 1
                stack.append(u)
    return count == n


def _trace(g: PlaneGraph) -> _Faces:
    n = g.n
    if g.num_edges == 0:
        if n != 1:
            raise EmbeddingInvalid("edgeless graph must be a single vertex")
        return _Faces((FaceWalk(0, (0,), True),), {})
    dart_face = {}
    walks = []

    def walk_from(start, fid):
        verts = [start[0]]
        d = start
        while True:
            if d in dart_face:
                raise EmbeddingInvalid(f"face traversal from {start} does not close")
            dart_face[d] = fid
            verts.append(d[1])
            d = g.next_dart(*d)
            if d == start:
                return tuple(verts)

    walks.append(FaceWalk(0, walk_from(g.anchor, 0), True))
    for u in range(n):
        for v in g.rotation[u]:
            if (u, v) not in dart_face:
                fid = len(walks)
                walks.append(FaceWalk(fid, walk_from((u, v), fid), False))
    if n - g.num_edges + len(walks) != 2:
        raise EmbeddingInvalid(
            f"Euler check failed: v={n}, e={g.num_edges}, f={len(walks)}"
        )
    return _Faces(tuple(walks), dart_face)


def trace_faces(g: PlaneGraph) -> list[FaceWalk]:
    """All face walks of ``g``; index 0 is the unbounded face."""
    return list(g.faces.walks)


# -- face graph -------------------------------------------------------------


@dataclass(frozen=True)
class FaceGraph:
    """The source graph plus one vertex per bounded face.

    Original vertices keep their ids ``0..n-1``; the vertex of bounded face
    ``f`` gets id ``n + f - 1`` (face 0 is the unbounded face).
    """

    graph: PlaneGraph
    source: PlaneGraph
    origin: tuple[bool, ...]
    back_map: dict

    @property
    def n_original(self) -> int:
        return self.source.n

    def weight(self, v: int) -> int:
        return 1 if self.origin[v] else 0

    def face_vertex(self, face_id: int) -> int:
        return self.source.n + face_id - 1


def build_face_graph(g: PlaneGraph, check: bool = False) -> FaceGraph:
    n = g.n
    walks = g.faces.walks
    dart_face = g.faces.dart_face
    nf = len(walks) - 1
    # v_f attaches at the corner of each vertex's first visit along f's walk
    attach = set()
    for f in range(1, nf + 1):
        vs = walks[f].vertices
        seen = set()
        for i in range(len(vs) - 1):
            if vs[i] not in seen:
                seen.add(vs[i])
                attach.add((vs[i - 1] if i else vs[-2], vs[i]))
    rotation = []
    for v in range(n):
        row = []
        for x in g.rotation[v]:
            row.append(x)
            # corner (x -> v, v -> ccw_next) belongs to the face of dart x -> v
            if (x, v) in attach:
                row.append(n + dart_face[(x, v)] - 1)
        rotation.append(tuple(row))
    for f in range(1, nf + 1):
        seen = set()
        first = []
        for u in walks[f].vertices[:-1]:
            if u not in seen:
                seen.add(u)
                first.append(u)
        # the bounded face is walked clockwise around its interior
        rotation.append(tuple(reversed(first)))
    fg = PlaneGraph(tuple(rotation), g.anchor, None, check=check)
    origin = (True,) * n + (False,) * nf
    back = {n + f - 1: f for f in range(1, nf + 1)}
    return FaceGraph(fg, g, origin, back)


# -- subgraphs ----------------------------------------------------------------


def components(rotation, keep: Iterable[int]) -> list[list[int]]:
    """Connected components of the subgraph induced on ``keep``.

    Components are ordered by smallest vertex; each is sorted.
    """
    keep = set(keep)
    out = []
    seen = set()
    for s in sorted(keep):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for u in rotation[v]:
                if u in keep and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        out.append(sorted(comp))
    return out


def corner_neighbor(g: PlaneGraph, v: int, x: int, member) -> int | None:
    """First neighbour of ``v`` in ``member`` scanning clockwise from ``x``.

    The direction just counterclockwise of ``x`` at ``v`` lies in the corner
    of ``g[member]`` that starts at the returned neighbour.
    """
    r = g.rotation[v]
    i = g._position[v][x]
    d = len(r)
    for step in range(d):
        u = r[(i - step) % d]
        if u in member:
            return u
    return None


def outer_reference(g: PlaneGraph, member) -> tuple[int, int] | None:
    """A corner ``(v, x)`` of ``g`` whose sector lies in the outer face of
    ``g[member]`` (``member`` connected): ``v`` is in ``member`` and the sector
    just counterclockwise of ``x`` around ``v`` belongs to the unbounded face.
    """
    walk = g.outer_walk
    nw = len(walk) - 1
    if nw == 0:
        return None
    for t in range(nw):
        if walk[t] in member:
            return (walk[t], walk[t - 1] if t > 0 else walk[nw - 1])
    # member is strictly inside: reach it from the boundary through deleted vertices
    start = sorted(set(walk[:-1]))
    seen = set(start)
    queue = deque(start)
    while queue:
        c = queue.popleft()
        for h in g.rotation[c]:
            if h in member:
                return (h, c)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    raise EmbeddingInvalid("subgraph is unreachable from the outer face")


def _restrict(g: PlaneGraph, comp: list[int]):
    local = {v: i for i, v in enumerate(comp)}
    rot = tuple(tuple(local[u] for u in g.rotation[v] if u in local) for v in comp)
    labels = tuple(g.label(v) for v in comp)
    return local, rot, labels


def induced_subgraph(g: PlaneGraph, keep: Iterable[int]) -> list[PlaneGraph]:
    """Components of ``g[keep]`` with inherited embeddings.

    Each component's unbounded face is the face of the inherited embedding
    that contains the unbounded face of ``g``.  Labels are inherited so that
    vertices can be traced back to the original graph.
    """
    keep = set(keep)
    if not keep:
        raise EmptySubgraph("cannot take the subgraph induced on an empty set")
    out = []
    for comp in components(g.rotation, keep):
        member = set(comp)
        local, rot, labels = _restrict(g, comp)
        anchor = None
        if any(rot):
            v, x = outer_reference(g, member)
            p0 = corner_neighbor(g, v, x, member)
            lv = local[v]
            r = rot[lv]
            w = r[(r.index(local[p0]) + 1) % len(r)]
            anchor = (lv, w)
        out.append(PlaneGraph(rot, anchor, labels, check=False))
    return out


# -- construction from straight-line drawings -------------------------------


def from_coordinates(points, edges, anchor=None, labels=None) -> PlaneGraph:
    """Plane graph of a straight-line drawing.

    Rotations are the neighbours sorted by angle.  The unbounded face is found
    at the lowest-leftmost vertex; ``anchor`` may pick another dart on it.
    """
    n = len(points)
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)

    def ang(v, u):
        return math.atan2(points[u][1] - points[v][1], points[u][0] - points[v][0]) % (2 * math.pi)

    rotation = tuple(tuple(sorted(nbrs[v], key=lambda u: ang(v, u))) for v in range(n))
    if not any(rotation):
        return PlaneGraph(rotation, None, labels)
    v = min(range(n), key=lambda i: (points[i][0], points[i][1]))
    r = rotation[v]
    # the sector around direction pi belongs to the unbounded face
    below = [u for u in r if ang(v, u) < math.pi]
    x = below[-1] if below else r[-1]
    w = r[(r.index(x) + 1) % len(r)]
    g = PlaneGraph(rotation, (v, w), labels)
    if anchor is not None:
        g = g.with_anchor(anchor)
        g._validate()
    return g
