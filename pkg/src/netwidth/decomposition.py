"""Tree decompositions and their validation."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field


@dataclass
class TreeDecomposition:
    """Bags indexed by tree node ``0..len(bags)-1`` plus the tree's edges."""

    bags: list
    edges: list

    def __post_init__(self):
        self.bags = [frozenset(b) for b in self.bags]
        self.edges = [tuple(e) for e in self.edges]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @property
    def num_bags(self) -> int:
        return len(self.bags)


@dataclass
class TDCheck:
    ok: bool
    width: int
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def graph_adjacency(graph) -> dict:
    """Adjacency sets from a PlaneGraph, a sequence of neighbour lists or a mapping."""
    if hasattr(graph, "rotation"):
        return {v: set(r) for v, r in enumerate(graph.rotation)}
    if isinstance(graph, dict):
        return {v: set(nb) for v, nb in graph.items()}
    return {v: set(nb) for v, nb in enumerate(graph)}


def validate_tree_decomposition(graph, td: TreeDecomposition) -> TDCheck:
    """Check that ``td`` is a tree decomposition of ``graph``.

    Uses the inverse-map form: every vertex's set of bags is nonempty and
    connected in the tree, and the bag sets of adjacent vertices meet.
    """
    adj = graph_adjacency(graph)
    problems = []
    nb = len(td.bags)
    if nb == 0:
        return TDCheck(False, -1, ["decomposition has no bags"])
    tree_adj = defaultdict(set)
    for a, b in td.edges:
        if not (0 <= a < nb and 0 <= b < nb) or a == b:
            problems.append(f"bad tree edge {a}-{b}")
            continue
        tree_adj[a].add(b)
        tree_adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        t = stack.pop()
        for s in tree_adj[t]:
            if s not in seen:
                seen.add(s)
                stack.append(s)
    if len(td.edges) != nb - 1 or len(seen) != nb:
        problems.append("tree: bag graph is not a tree")

    where = defaultdict(set)
    for t, bag in enumerate(td.bags):
        for u in bag:
            if u not in adj:
                problems.append(f"bag {t} holds unknown vertex {u}")
            where[u].add(t)
    # a node subset of a tree is connected iff it spans |nodes| - 1 tree edges
    inner = defaultdict(int)
    for a, b in td.edges:
        if 0 <= a < nb and 0 <= b < nb:
            for u in td.bags[a] & td.bags[b]:
                inner[u] += 1
    for u in sorted(adj):
        if not where[u]:
            problems.append(f"vertex {u}: in no bag")
        elif inner[u] != len(where[u]) - 1:
            problems.append(f"vertex {u}: bags {sorted(where[u])} are not connected in the tree")
    for u in sorted(adj):
        for v in sorted(adj[u]):
            if u < v and not (where[u] & where[v]):
                problems.append(f"edge {u}-{v}: no bag holds both endpoints")
    return TDCheck(not problems, td.width, problems)


def decomposition_from_ordering(graph, order) -> TreeDecomposition:
    """Decomposition from an elimination ordering (first eliminated first)."""
    adj = {v: set(nb) for v, nb in graph_adjacency(graph).items()}
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    higher = []
    for v in order:
        nbrs = adj[v]
        bags.append(frozenset(nbrs | {v}))
        higher.append(nbrs)
        for a in nbrs:
            adj[a] |= nbrs - {a}
            adj[a].discard(v)
        del adj[v]
    edges = []
    roots = []
    for i, nbrs in enumerate(higher):
        if nbrs:
            edges.append((i, min(pos[u] for u in nbrs)))
        else:
            roots.append(i)
    # components of the graph give separate trees; chain their roots
    edges.extend(zip(roots, roots[1:]))
    return TreeDecomposition(bags, edges)
