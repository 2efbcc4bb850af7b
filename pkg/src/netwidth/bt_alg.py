"""Breadth-first search tree of net covers, the constant KB, and the
tree decomposition of width at most ``4*KB - 1`` read off the search tree."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .decomposition import TreeDecomposition, validate_tree_decomposition
from .errors import EmbeddingInvalid, RecolorContradiction, ValidationFailure
from .frame_net import COLORS, Color, Frame3, default_frame
from .net_alg import NetCoverResult, net_alg
from .plane_graph import PlaneGraph, corner_neighbor, induced_subgraph

__all__ = [
    "BTConfig",
    "SearchNode",
    "DecompositionTree",
    "bt_alg",
    "recolor_child",
    "build_decomposition",
    "validate_tree_decomposition",
    "iter_nodes",
]


@dataclass(frozen=True)
class BTConfig:
    method: str = "sweep"  # side-distance route for net_alg
    check_invariants: bool = True  # three-cover and outer-face assertions per node


@dataclass(eq=False)
class SearchNode:
    """One node of the search tree.  ``graph.labels`` and ``cover`` use the
    vertex ids of the input graph."""

    id: tuple
    graph: PlaneGraph
    frame: Frame3
    cover: frozenset = frozenset()
    children: list = field(default_factory=list)
    pruned: bool = False
    net: NetCoverResult | None = field(default=None, repr=False)

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.graph.label(v) for v in range(self.graph.n))

    def __repr__(self):
        return (
            f"SearchNode(id={self.id}, n={self.graph.n}, cover={sorted(self.cover)}, "
            f"children={[c.id for c in self.children]}, pruned={self.pruned})"
        )


def iter_nodes(root: SearchNode):
    """Nodes in breadth-first order (the order the search processed them)."""
    queue = deque([root])
    while queue:
        node = queue.popleft()
        yield node
        queue.extend(node.children)


def bt_alg(g0: PlaneGraph, initial_frame: Frame3 | None = None, config: BTConfig = BTConfig()):
    """Run the search on a connected plane graph; returns ``(kb, root)``."""
    g0 = PlaneGraph(g0.rotation, g0.anchor, None, check=False)
    frame0 = default_frame(g0) if initial_frame is None else initial_frame
    root = SearchNode((0,), g0, frame0)
    bestlow = -1
    owner = {}
    queue = deque([root])
    while queue:
        node = queue.popleft()
        g = node.graph
        if config.check_invariants:
            _check_three_covers(g0, node, owner)
        if g.n < bestlow:
            node.cover = node.vertices
            node.pruned = True
        else:
            res, _ = net_alg(g, node.frame, config.method)
            node.net = res
            node.cover = frozenset(g.label(v) for v in res.cover)
            bestlow = max(bestlow, res.order)
            rest = set(range(g.n)) - res.cover
            for q, comp in enumerate(induced_subgraph(g, rest) if rest else [], start=1):
                if config.check_invariants:
                    _check_outer_face(g, node.frame, res.cover, comp)
                frame = recolor_child(node, comp)
                if frame.n:
                    comp = comp.with_anchor((frame.walk[0], frame.walk[1]))
                child = SearchNode(node.id + (q,), comp, frame)
                node.children.append(child)
                queue.append(child)
        for v in node.cover:
            owner[v] = node.id
    return bestlow, root


def _check_three_covers(g0, node, owner):
    inside = node.vertices
    touching = set()
    for v in inside:
        for u in g0.rotation[v]:
            if u not in inside:
                touching.add(owner[u])
    if len(touching) > 3:
        raise AssertionError(
            f"node {node.id} touches {len(touching)} earlier cover sets: {sorted(touching)}"
        )


def _check_outer_face(g, frame, cover, comp):
    """Every component vertex facing the cover or lying on the parent's
    peripheral walk must lie on the component's peripheral walk."""
    local = [g.index_of[comp.label(h)] for h in range(comp.n)]
    on_parent_walk = set(frame.walk)
    need = {
        h
        for h, v in enumerate(local)
        if v in on_parent_walk or any(u in cover for u in g.rotation[v])
    }
    missing = need - set(comp.outer_walk)
    if missing:
        raise EmbeddingInvalid(
            f"outer face of child misses vertices {sorted(comp.label(h) for h in missing)}"
        )


def recolor_child(parent: SearchNode, component: PlaneGraph) -> Frame3:
    """Frame of a child component consistent with the parent's colours.

    Every corner of the component's peripheral walk that contains corners
    of the parent's walk keeps the parent's colours there.  Following the
    component's walk, the parent walk indices seen advance one step at a
    time except at a single gap ``S`` from ``e1`` to ``e2``: either an
    uncoloured stretch of the component's walk, or one corner where the
    parent walk left through deleted vertices and came back.  ``S`` receives
    the missing colours:

    * one missing: all of ``S`` gets it;
    * two missing: ``S`` gets the first of them (blue < red < yellow) and
      whichever endpoint keeps the sides in blue-red-yellow order gets the
      other;
    * nothing coloured: everything blue, the smallest vertex also red and
      yellow.
    """
    g, f, h = parent.graph, parent.frame, component
    walk = h.outer_walk
    m = len(walk) - 1
    if m == 0:
        return Frame3(walk, 0, 0)
    to_parent = [g.index_of[h.label(x)] for x in range(h.n)]
    member = {p: x for x, p in enumerate(to_parent)}
    dart_pos = {(walk[p], walk[p + 1]): p for p in range(m)}

    # parent walk corners -> (component walk position, ccw offset in the corner)
    pw, n = f.walk, f.n
    found = []
    for t in range(n):
        v = pw[t]
        if v not in member:
            continue
        x = pw[t - 1] if t else pw[n - 1]
        p0 = corner_neighbor(g, v, x, member)
        try:
            p = (dart_pos[(member[p0], member[v])] + 1) % m
        except KeyError:
            raise RecolorContradiction(
                f"parent corner at {g.label(v)} is not on the child's outer face"
            ) from None
        deg = len(g.rotation[v])
        offset = (g._position[v][x] - g._position[v][p0]) % deg
        found.append((p, offset, t))

    if not found:
        first = min(range(m), key=lambda p: (walk[p], p))
        final = [{Color.BLUE} for _ in range(m)]
        final[first] = set(COLORS)
        return _frame_from_positions(walk, final)

    found.sort()
    colors = [set() for _ in range(m)]
    for p, _, t in found:
        colors[p] |= f.index_colors(t)
    parent_darts = {(pw[t], pw[t + 1]) for t in range(n)}

    def inherited(p):
        return (to_parent[walk[p]], to_parent[walk[p + 1]]) in parent_darts

    gaps = []
    for i, (p, _, t) in enumerate(found):
        if i + 1 < len(found) and found[i + 1][0] == p:
            gaps.append([p])  # excursion of the parent walk inside one corner
            continue
        q, _, t2 = found[(i + 1) % len(found)]
        if q == (p + 1) % m and t2 == (t + 1) % n and inherited(p):
            continue
        span = [p]
        while True:
            span.append((span[-1] + 1) % m)
            if span[-1] == q:
                break
        gaps.append(span)
    if len(gaps) != 1:
        raise RecolorContradiction(
            f"coloured vertices of child {[h.label(x) for x in walk]} are not one subwalk"
        )
    span = gaps[0]
    e1, e2 = span[0], span[-1]
    present = set().union(*colors)
    missing = [c for c in COLORS if c not in present]
    final = [set(c) for c in colors]
    if not missing:
        raise RecolorContradiction("child component carries all three colours")
    if len(missing) == 1:
        for p in span:
            final[p].add(missing[0])
    else:
        (x,) = present
        first, other = missing
        for p in span:
            final[p].add(first)
        # the other colour goes where the cyclic order blue -> red -> yellow needs it
        final[e1 if first == x.successor().successor() else e2].add(other)
    return _frame_from_positions(walk, final)


def _runs(seq, color, start, m):
    """Ends ``e >= start`` such that ``seq[start..e]`` all carry ``color``."""
    e = start
    while e < m - 1 and color in seq[e + 1]:
        e += 1
    ends = [e]
    if e == m - 1 and start <= m - 1 and color in seq[m]:
        ends.append(m)
    return ends


def _frame_from_positions(walk, colors) -> Frame3:
    m = len(colors)
    starts = [p for p in range(m) if Color.BLUE in colors[p] and Color.YELLOW in colors[p]]
    for s in starts:
        seq = [colors[(s + t) % m] for t in range(m + 1)]
        rotated = walk[s:m] + walk[:s] + (walk[s],)
        for j in _runs(seq, Color.BLUE, 0, m):
            if Color.RED not in seq[j]:
                continue
            for k in _runs(seq, Color.RED, j, m) if j < m else [m]:
                frame = Frame3(rotated, j, k)
                if all(frame.index_colors(t) == seq[t] for t in range(m)):
                    return frame
    raise RecolorContradiction(f"colouring {colors} is not a 3-frame")


@dataclass
class DecompositionTree(TreeDecomposition):
    """Tree decomposition whose tree is the search tree.

    ``node_ids[t]`` is the search-tree id of bag ``t``.
    """

    kb: int = 0
    node_ids: list = field(default_factory=list)

    @property
    def width_bound(self) -> int:
        return 4 * self.kb - 1


def build_decomposition(root: SearchNode, g: PlaneGraph, kb: int | None = None, validate: bool = True):
    """Bags ``C_i`` plus every vertex outside ``G_i`` with a neighbour in ``G_i``."""
    nodes = list(iter_nodes(root))
    if kb is None:
        kb = max(len(x.cover) for x in nodes if not x.pruned)
    index = {x.id: t for t, x in enumerate(nodes)}
    bags, edges = [], []
    for t, x in enumerate(nodes):
        inside = x.vertices
        boundary = {u for v in inside for u in g.rotation[v] if u not in inside}
        bags.append(x.cover | boundary)
        edges.extend((t, index[c.id]) for c in x.children)
    td = DecompositionTree(bags, edges, kb=kb, node_ids=[x.id for x in nodes])
    if validate:
        check = validate_tree_decomposition(g, td)
        if not check.ok:
            raise ValidationFailure("search tree bags are not a tree decomposition", check.problems)
        if td.width > td.width_bound:
            raise ValidationFailure(f"width {td.width} exceeds 4*KB-1 = {td.width_bound}")
    return td
