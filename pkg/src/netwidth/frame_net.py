"""3-frames on peripheral walks, vines and net covers."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import IndexOutOfRange
from .plane_graph import PlaneGraph, components


class Color(enum.IntEnum):
    BLUE = 0
    RED = 1
    YELLOW = 2

    def successor(self) -> "Color":
        return Color((self + 1) % 3)


COLORS = (Color.BLUE, Color.RED, Color.YELLOW)


@dataclass(frozen=True)
class Frame3:
    """A closed peripheral walk ``(u_0, ..., u_n)`` split at indices ``j <= k``.

    Sides are ``blue = u_0..u_j``, ``red = u_j..u_k``, ``yellow = u_k..u_n``.
    Indices, not vertices, define the split because the walk may revisit
    cut vertices; a vertex's colour set is the union over its occurrences.
    """

    walk: tuple[int, ...]
    j: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "walk", tuple(self.walk))
        if not self.walk or self.walk[0] != self.walk[-1]:
            raise IndexOutOfRange("frame walk must be closed")
        if not 0 <= self.j <= self.k <= self.n:
            raise IndexOutOfRange(f"need 0 <= j <= k <= n, got j={self.j}, k={self.k}, n={self.n}")

    @property
    def n(self) -> int:
        return len(self.walk) - 1

    def index_colors(self, t: int) -> frozenset:
        """Colours at walk index ``t`` (index 0 and ``n`` are the same point)."""
        out = set()
        for s in {t, self.n} if t == 0 else {t}:
            if s <= self.j:
                out.add(Color.BLUE)
            if self.j <= s <= self.k:
                out.add(Color.RED)
            if s >= self.k:
                out.add(Color.YELLOW)
        return frozenset(out)

    @cached_property
    def sides(self) -> tuple[frozenset, frozenset, frozenset]:
        w = self.walk
        return (
            frozenset(w[: self.j + 1]),
            frozenset(w[self.j : self.k + 1]),
            frozenset(w[self.k :]),
        )

    @property
    def blue(self) -> frozenset:
        return self.sides[0]

    @property
    def red(self) -> frozenset:
        return self.sides[1]

    @property
    def yellow(self) -> frozenset:
        return self.sides[2]

    @cached_property
    def vertex_colors(self) -> dict:
        out = {}
        for c, side in zip(COLORS, self.sides):
            for v in side:
                out.setdefault(v, set()).add(c)
        return {v: frozenset(cs) for v, cs in out.items()}

    def colors_of(self, v) -> frozenset:
        return self.vertex_colors.get(v, frozenset())


def make_frame(g: PlaneGraph, j: int, k: int) -> Frame3:
    return Frame3(g.outer_walk, j, k)


def default_frame(g: PlaneGraph) -> Frame3:
    """Thirds rule: ``j = n // 3`` and ``k = 2n // 3`` on the peripheral walk."""
    n = len(g.outer_walk) - 1
    return make_frame(g, n // 3, 2 * n // 3)


def meets_all_sides(frame: Frame3, vertices: Iterable[int]) -> bool:
    b, r, y = frame.sides
    found_b = found_r = found_y = False
    for v in vertices:
        found_b = found_b or v in b
        found_r = found_r or v in r
        found_y = found_y or v in y
        if found_b and found_r and found_y:
            return True
    return False


def is_connected_set(g: PlaneGraph, x) -> bool:
    x = set(x)
    if not x:
        return False
    return len(components(g.rotation, x)) == 1


def is_vine(g: PlaneGraph, frame: Frame3, x) -> bool:
    x = set(x)
    return bool(x) and meets_all_sides(frame, x) and is_connected_set(g, x)


def verify_cover(g: PlaneGraph, frame: Frame3, c) -> bool:
    """True iff no component of ``g - c`` meets all three sides.

    A component meeting all sides is itself a vine avoiding ``c``; and any
    vine avoiding ``c`` lies inside one component.
    """
    c = set(c)
    rest = set(range(g.n)) - c
    return not any(meets_all_sides(frame, comp) for comp in components(g.rotation, rest))


def crosses(walk, p, q) -> bool:
    """Whether index pairs ``p`` and ``q`` cross in ``walk``.

    They cross when they can be written ``a <= b <= c <= d`` with
    ``p = (a, c)`` and ``q = (b, d)``, up to swapping the pairs.
    """
    n = len(walk) - 1
    for i in (*p, *q):
        if not 0 <= i <= n:
            raise IndexOutOfRange(f"index {i} outside walk of length {n}")
    a, c = sorted(p)
    b, d = sorted(q)
    return (a <= b <= c <= d) or (b <= a <= d <= c)


@dataclass(frozen=True)
class CoverCertificate:
    """A cover together with a face-graph vine whose original part it contains."""

    cover: frozenset
    witness_vine: frozenset

    @property
    def order(self) -> int:
        return len(self.cover)
