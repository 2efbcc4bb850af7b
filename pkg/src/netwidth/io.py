"""Text formats for embedded graphs and tree decompositions.

Embedded graph (ids 1-based in the file, 0-based in memory)::

    c comment
    p pgr <n> <m>
    r <v> <neighbours of v in counterclockwise order>
    o <u> <v>          dart on the unbounded face, one per component

A component without an ``o`` line takes its longest face walk as the
unbounded face.  Tree decompositions use the PACE layout::

    s td <bags> <width+1> <n>
    b <id> <vertices>
    <id> <id>          tree edges
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .decomposition import TreeDecomposition
from .errors import FormatError
from .plane_graph import PlaneGraph, components


@dataclass
class EmbeddedGraph:
    """Contents of a graph file: one rotation system, possibly disconnected."""

    rotation: tuple
    anchors: list = field(default_factory=list)
    comments: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def components(self) -> list[PlaneGraph]:
        """Connected components as plane graphs labelled with file ids (0-based)."""
        out = []
        for comp in components(self.rotation, range(self.n)):
            local = {v: i for i, v in enumerate(comp)}
            rot = tuple(tuple(local[u] for u in self.rotation[v]) for v in comp)
            mine = [(local[u], local.get(v, -1)) for u, v in self.anchors if u in local]
            if len(mine) > 1:
                raise FormatError(f"component of vertex {comp[0] + 1} has {len(mine)} anchor lines")
            anchor = mine[0] if mine else _longest_face_anchor(rot)
            out.append(PlaneGraph(rot, anchor, tuple(comp)))
        return out


def _longest_face_anchor(rot):
    if not any(rot):
        return None
    probe = PlaneGraph(rot, (0, rot[0][0]), None, check=False)
    best = max(probe.faces.walks, key=lambda w: (w.length, -w.face_id))
    return best.darts()[0]


def from_plane_graph(g: PlaneGraph) -> EmbeddedGraph:
    return EmbeddedGraph(g.rotation, [g.anchor] if g.anchor is not None else [])


def from_components(parts) -> EmbeddedGraph:
    """Disjoint union of labelled plane graphs (labels are file ids)."""
    n = sum(p.n for p in parts)
    rotation = [None] * n
    anchors = []
    for p in parts:
        for v in range(p.n):
            rotation[p.label(v)] = tuple(p.label(u) for u in p.rotation[v])
        if p.anchor is not None:
            anchors.append((p.label(p.anchor[0]), p.label(p.anchor[1])))
    if any(r is None for r in rotation):
        raise FormatError("component labels do not cover 0..n-1")
    return EmbeddedGraph(tuple(rotation), sorted(anchors))


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> EmbeddedGraph:
    header = None
    rotation = {}
    anchors = []
    comments = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tok = line.split()
        if not tok:
            continue
        kind = tok[0]
        if kind == "c":
            comments.append(line[1:].strip())
        elif kind == "p":
            if header is not None:
                raise FormatError(f"line {lineno}: second header")
            if len(tok) != 4 or tok[1] != "pgr":
                raise FormatError(f"line {lineno}: header must be 'p pgr <n> <m>'")
            header = _ints(tok[2:], lineno)
        elif header is None:
            raise FormatError(f"line {lineno}: content before the 'p pgr' header")
        elif kind == "r":
            vals = _ints(tok[1:], lineno)
            if not vals:
                raise FormatError(f"line {lineno}: 'r' needs a vertex")
            v, *nbrs = vals
            if v in rotation:
                raise FormatError(f"line {lineno}: vertex {v} listed twice")
            rotation[v] = nbrs
        elif kind == "o":
            vals = _ints(tok[1:], lineno)
            if len(vals) != 2:
                raise FormatError(f"line {lineno}: 'o' needs two vertices")
            anchors.append(tuple(vals))
        else:
            raise FormatError(f"line {lineno}: unknown line type {kind!r}")
    if header is None:
        raise FormatError("missing 'p pgr' header")
    n, m = header
    if n < 1:
        raise FormatError("graph needs at least one vertex")
    for v, nbrs in rotation.items():
        for x in (v, *nbrs):
            if not 1 <= x <= n:
                raise FormatError(f"vertex {x} outside 1..{n}")
    for a in anchors:
        for x in a:
            if not 1 <= x <= n:
                raise FormatError(f"anchor vertex {x} outside 1..{n}")
    rot = tuple(tuple(u - 1 for u in rotation.get(v, ())) for v in range(1, n + 1))
    eg = EmbeddedGraph(rot, [(u - 1, v - 1) for u, v in anchors], comments)
    if sum(len(r) for r in rot) != 2 * m:
        raise FormatError(f"header says {m} edges but rotations list {sum(map(len, rot)) / 2:g}")
    return eg


def format_graph(eg: EmbeddedGraph) -> str:
    lines = [f"c {c}" if c else "c" for c in eg.comments]
    lines.append(f"p pgr {eg.n} {eg.num_edges}")
    for v, r in enumerate(eg.rotation):
        lines.append(" ".join(["r", str(v + 1), *(str(u + 1) for u in r)]))
    for u, v in eg.anchors:
        lines.append(f"o {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> EmbeddedGraph:
    return parse_graph(Path(path).read_text())


def write_graph(path, g) -> None:
    eg = from_plane_graph(g) if isinstance(g, PlaneGraph) else g
    Path(path).write_text(format_graph(eg))


def parse_td(text: str) -> TreeDecomposition:
    header = None
    bags = {}
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tok = line.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "s":
            if header is not None:
                raise FormatError(f"line {lineno}: second solution line")
            if len(tok) != 5 or tok[1] != "td":
                raise FormatError(f"line {lineno}: solution line must be 's td <bags> <width+1> <n>'")
            header = _ints(tok[2:], lineno)
        elif header is None:
            raise FormatError(f"line {lineno}: content before the 's td' line")
        elif tok[0] == "b":
            vals = _ints(tok[1:], lineno)
            if not vals:
                raise FormatError(f"line {lineno}: 'b' needs a bag id")
            if not 1 <= vals[0] <= header[0]:
                raise FormatError(f"line {lineno}: bag id {vals[0]} outside 1..{header[0]}")
            if vals[0] in bags:
                raise FormatError(f"line {lineno}: bag {vals[0]} listed twice")
            bags[vals[0]] = [u - 1 for u in vals[1:]]
        else:
            vals = _ints(tok, lineno)
            if len(vals) != 2:
                raise FormatError(f"line {lineno}: tree edge needs two bag ids")
            edges.append((vals[0] - 1, vals[1] - 1))
    if header is None:
        raise FormatError("missing 's td' line")
    nb, size, _ = header
    if len(bags) != nb:
        raise FormatError(f"header promises {nb} bags, found {len(bags)}")
    td = TreeDecomposition([bags[i] for i in range(1, nb + 1)], edges)
    if td.width + 1 != size:
        raise FormatError(f"header says largest bag has {size} vertices, body has {td.width + 1}")
    return td


def format_td(td: TreeDecomposition, n: int) -> str:
    lines = [f"s td {td.num_bags} {td.width + 1} {n}"]
    for i, bag in enumerate(td.bags, start=1):
        lines.append(" ".join(["b", str(i), *(str(u + 1) for u in sorted(bag))]))
    for a, b in td.edges:
        lines.append(f"{a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def read_td(path) -> TreeDecomposition:
    return parse_td(Path(path).read_text())


def write_td(path, td: TreeDecomposition, n: int) -> None:
    Path(path).write_text(format_td(td, n))
