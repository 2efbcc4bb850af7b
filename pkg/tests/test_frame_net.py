import pytest
from hypothesis import given, settings, strategies as st

from conftest import framed_graphs
from netwidth.errors import IndexOutOfRange
from netwidth.frame_net import (
    Color,
    Frame3,
    crosses,
    default_frame,
    is_vine,
    make_frame,
    verify_cover,
)
from netwidth.generators import cycle, five_vertex_net, path, square_grid, triangular_grid
from netwidth.oracles import minimal_vines

A, B, C, D, E = range(5)


def five_vertex_frame():
    g = five_vertex_net()
    return g, make_frame(g, 1, 2)


def test_five_vertex_net_sides():
    g, f = five_vertex_frame()
    assert f.sides == ({A, B}, {B, C}, {C, D, A})


def test_five_vertex_net_minimal_vines():
    g, f = five_vertex_frame()
    assert sorted(minimal_vines(g, f)) == sorted([(A, B), (B, C), (A, C, D), (B, D, E)])


def test_is_vine():
    g, f = five_vertex_frame()
    assert is_vine(g, f, {B, D, E})
    assert not is_vine(g, f, {E})
    assert not is_vine(g, f, set())


def test_make_frame_examples():
    g = cycle(15)
    f = make_frame(g, 5, 10)
    assert f.blue == set(range(0, 6)) and f.red == set(range(5, 11))
    assert f.yellow == set(range(10, 15)) | {0}
    t = triangular_grid(6)
    f = make_frame(t, 5, 10)
    assert len(f.blue) == len(f.red) == len(f.yellow) == 6
    f = make_frame(square_grid(3), 0, 0)
    assert f.blue == f.red == {f.walk[0]}
    assert f.yellow == set(f.walk)
    with pytest.raises(IndexOutOfRange):
        make_frame(g, 10, 5)
    with pytest.raises(IndexOutOfRange):
        make_frame(g, 0, 16)


def test_default_frame():
    f = default_frame(cycle(15))
    assert (f.j, f.k) == (5, 10)
    f = default_frame(path(2))
    assert (f.n, f.j, f.k) == (2, 0, 1)
    f = default_frame(square_grid(6))
    assert (f.n, f.j, f.k) == (20, 6, 13)


def test_index_colors_wrap():
    f = make_frame(cycle(6), 2, 4)
    assert f.index_colors(0) == {Color.BLUE, Color.YELLOW}
    assert f.index_colors(2) == {Color.BLUE, Color.RED}
    assert f.index_colors(3) == {Color.RED}
    assert Color.YELLOW.successor() is Color.BLUE


def test_verify_cover_c15(c15):
    g, f = c15
    assert verify_cover(g, f, {5, 10})
    assert not verify_cover(g, f, {5})
    assert verify_cover(g, f, set(range(15)))


def test_crosses():
    w = tuple(range(15)) + (0,)
    assert crosses(w, (0, 7), (5, 12))
    assert not crosses(w, (0, 4), (5, 12))
    assert crosses(w, (5, 5), (5, 10))
    with pytest.raises(IndexOutOfRange):
        crosses(w, (0, 16), (1, 2))


def test_frame_requires_closed_walk():
    with pytest.raises(IndexOutOfRange):
        Frame3((0, 1, 2), 0, 1)


@settings(max_examples=300, deadline=None)
@given(framed_graphs(max_n=9))
def test_sides_cover_walk(gf):
    g, f = gf
    assert all(f.sides)
    assert set().union(*f.sides) == set(f.walk)


@settings(max_examples=150, deadline=None)
@given(framed_graphs(max_n=8))
def test_vines_pairwise_intersect(gf):
    g, f = gf
    vines = minimal_vines(g, f)
    for i, x in enumerate(vines):
        for y in vines[i:]:
            # disjoint vines would give a K_{3,3} minor with the outer face
            assert set(x) & set(y)


@settings(max_examples=300, deadline=None)
@given(framed_graphs(max_n=10), st.data())
def test_verify_cover_monotone(gf, data):
    g, f = gf
    c = data.draw(st.sets(st.integers(0, g.n - 1)))
    extra = data.draw(st.sets(st.integers(0, g.n - 1)))
    if verify_cover(g, f, c):
        assert verify_cover(g, f, c | extra)
