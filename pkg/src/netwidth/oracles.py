"""Brute-force references for net order, treewidth and the cover theorem.

Everything here enumerates vertex subsets as bitmasks and shares no code
path with the fast algorithms it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .decomposition import TreeDecomposition, decomposition_from_ordering, graph_adjacency
from .errors import TooLarge
from .frame_net import Frame3
from .plane_graph import PlaneGraph, build_face_graph


@dataclass(frozen=True)
class OracleLimits:
    net_order: int = 12
    treewidth: int = 15
    cover_theorem: int = 10
    cover_size: int = 4


LIMITS = OracleLimits()


def _masks(adj):
    n = len(adj)
    return [sum(1 << u for u in adj[v]) for v in range(n)]


def _connected(mask, nbr):
    if not mask:
        return False
    low = mask & -mask
    comp = low
    frontier = low
    while frontier:
        grow = 0
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            grow |= nbr[b.bit_length() - 1]
        grow &= mask & ~comp
        comp |= grow
        frontier = grow
    return comp == mask


def _side_masks(frame: Frame3):
    return [sum(1 << v for v in side) for side in frame.sides]


def vine_masks(g: PlaneGraph, frame: Frame3):
    """Every vine of ``frame`` in ``g`` as a bitmask (exhaustive)."""
    nbr = _masks(g.rotation)
    sb, sr, sy = _side_masks(frame)
    out = []
    for mask in range(1, 1 << g.n):
        if mask & sb and mask & sr and mask & sy and _connected(mask, nbr):
            out.append(mask)
    return out


def minimal_vines(g: PlaneGraph, frame: Frame3, limit: int | None = None):
    """Inclusion-minimal vines, as sorted tuples of vertices."""
    limit = LIMITS.net_order if limit is None else limit
    if g.n > limit:
        raise TooLarge(g.n, limit)
    return [_members(m) for m in _minimal(vine_masks(g, frame))]


def _minimal(masks):
    keep = []
    for m in sorted(masks, key=lambda x: (bin(x).count("1"), x)):
        if not any(k & m == k for k in keep):
            keep.append(m)
    return keep


def _members(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def brute_net_order(g: PlaneGraph, frame: Frame3, limit: int | None = None):
    """Exact ``(order, cover)`` by hitting all minimal vines.

    Covers are tried by increasing size in lexicographic order, so the cover
    returned is the lexicographically smallest minimum one.
    """
    limit = LIMITS.net_order if limit is None else limit
    if g.n > limit:
        raise TooLarge(g.n, limit)
    family = _minimal(vine_masks(g, frame))
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            cm = sum(1 << v for v in combo)
            if all(m & cm for m in family):
                return size, frozenset(combo)
    raise AssertionError("the full vertex set always covers")


def brute_treewidth(graph, limit: int | None = None):
    """Exact treewidth and an optimal decomposition.

    Dynamic programming over the set of already-eliminated vertices: the
    cost of eliminating ``v`` after ``S`` is the number of vertices outside
    ``S + v`` reachable from ``v`` through ``S``.  States whose cost reaches
    a greedy upper bound are dropped.
    """
    limit = LIMITS.treewidth if limit is None else limit
    adj = graph_adjacency(graph)
    verts = sorted(adj)
    n = len(verts)
    if n > limit:
        raise TooLarge(n, limit)
    if n == 0:
        return -1, TreeDecomposition([], [])
    idx = {v: i for i, v in enumerate(verts)}
    nbr = [sum(1 << idx[u] for u in adj[v]) for v in verts]
    ub_order = _min_degree_order(adj)
    ub = decomposition_from_ordering(adj, ub_order).width
    full = (1 << n) - 1

    def q(s, v):
        inside = s | (1 << v)
        comp = 1 << v
        frontier = comp
        while frontier:
            grow = 0
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                grow |= nbr[b.bit_length() - 1]
            grow &= s & ~comp
            comp |= grow
            frontier = grow
        reach = 0
        c = comp
        while c:
            b = c & -c
            c ^= b
            reach |= nbr[b.bit_length() - 1]
        return bin(reach & ~inside).count("1")

    layer = {0: -1}
    back = {}
    for _ in range(n):
        nxt = {}
        for s, val in layer.items():
            for v in range(n):
                if s >> v & 1:
                    continue
                w = max(val, q(s, v))
                if w >= ub:
                    continue
                s2 = s | (1 << v)
                if w < nxt.get(s2, ub):
                    nxt[s2] = w
                    back[s2] = (s, v)
        layer = nxt
        if not layer:
            break
    if full in layer:
        tw = layer[full]
        order = []
        s = full
        while s:
            s, v = back[s]
            order.append(verts[v])
        order.reverse()
    else:
        tw, order = ub, ub_order
    td = decomposition_from_ordering(adj, order)
    assert td.width == tw
    return tw, td


def _min_degree_order(adj):
    adj = {v: set(nb) for v, nb in adj.items()}
    order = []
    while adj:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        nbrs = adj.pop(v)
        for a in nbrs:
            adj[a] |= nbrs - {a}
            adj[a].discard(v)
        order.append(v)
    return order


def covers_net(vines, c) -> bool:
    cm = sum(1 << v for v in c)
    return all(m & cm for m in vines)


def has_face_vine_within(g: PlaneGraph, frame: Frame3, c) -> bool:
    """Is there a face-graph vine ``Y`` with ``Y`` restricted to ``g`` inside ``c``?

    Such a ``Y`` exists iff some component of the face graph restricted to
    ``c`` plus all face vertices meets every side, since a connected
    superset of a vine is a vine.
    """
    fg = build_face_graph(g)
    allowed = set(c) | set(range(g.n, fg.graph.n))
    sides = frame.sides
    seen = set()
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for u in fg.graph.rotation[v]:
                if u in allowed and u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        if all(comp & side for side in sides):
            return True
    return False


def check_min_cover_theorem(g: PlaneGraph, frame: Frame3, limits: OracleLimits = LIMITS) -> bool:
    """Exhaustively check: ``C`` covers the net in ``g`` iff some face-graph
    vine has all its original vertices in ``C``, for every ``|C| <= cover_size``."""
    if g.n > limits.cover_theorem:
        raise TooLarge(g.n, limits.cover_theorem)
    vines = vine_masks(g, frame)
    for size in range(min(limits.cover_size, g.n) + 1):
        for c in combinations(range(g.n), size):
            if covers_net(vines, c) != has_face_vine_within(g, frame, c):
                return False
    return True
