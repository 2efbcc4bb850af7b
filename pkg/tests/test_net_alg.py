from itertools import product

from hypothesis import given, settings, strategies as st

from conftest import framed_graphs, plane_graphs
from netwidth.frame_net import Frame3, crosses, is_vine, make_frame, verify_cover
from netwidth.generators import cycle, five_vertex_net, path, square_grid, triangular_grid
from netwidth.net_alg import (
    WeightedDigraph,
    directed_face_graph,
    extract_vine_tree,
    net_alg,
    side_distances,
    sssp_01,
)
from netwidth.plane_graph import build_face_graph, components


def test_sssp_examples():
    fg = build_face_graph(square_grid(2))
    row = sssp_01(directed_face_graph(fg), 4)
    assert row.dist[:4] == (1, 1, 1, 1)

    c = cycle(15)
    plain = WeightedDigraph(c.rotation, (1,) * 15)
    assert sssp_01(plain, 0).dist[7] == 7

    fg = build_face_graph(c)
    vf = fg.face_vertex(1)
    assert sssp_01(directed_face_graph(fg), vf).dist[:15] == (1,) * 15


def test_digraph_arcs():
    fg = build_face_graph(triangular_grid(4))
    d = directed_face_graph(fg)
    assert d.num_arcs == 2 * fg.graph.num_edges
    assert {d.arc_weight(u, v) for u in range(d.num_vertices) for v in d.succ[u]} == {0, 1}


def test_c15_order_two(c15):
    g, f = c15
    res, tree = net_alg(g, f)
    assert res.order == 2 == res.d_center
    assert verify_cover(g, f, res.cover)
    assert verify_cover(g, f, {5, 10})
    # smallest-id center: c_0 sits on blue and yellow, one step reaches red
    assert res.center == 0 and res.cover == {0, 5}


def test_c15_face_vertex_is_not_optimal(c15):
    # from the face vertex every side costs one original vertex
    g, f = c15
    fg = build_face_graph(g)
    b, r, y = side_distances(directed_face_graph(fg), f)
    vf = fg.face_vertex(1)
    assert b[vf] + r[vf] + y[vf] == 3


def test_five_vertex_net_order():
    g = five_vertex_net()
    res, _ = net_alg(g, make_frame(g, 1, 2))
    assert res.order == 2


def test_triangular_grid_orders():
    for n in range(1, 9):
        g = triangular_grid(n)
        res, _ = net_alg(g, Frame3(g.outer_walk, n - 1, 2 * (n - 1)))
        assert res.order == n


def test_single_vertex_tree():
    g = path(1)
    f = make_frame(g, 0, 0)
    res, tree = net_alg(g, f)
    assert tree.vertices == {0} and tree.cost == 1
    row = sssp_01(directed_face_graph(build_face_graph(g)), 0)
    assert extract_vine_tree(row, f, build_face_graph(g)).paths == ((0,), (0,), (0,))


@settings(max_examples=300, deadline=None)
@given(framed_graphs(max_n=12))
def test_sweep_matches_per_source(gf):
    g, f = gf
    d = directed_face_graph(build_face_graph(g))
    assert side_distances(d, f, "sweep") == side_distances(d, f, "per_source")


@settings(max_examples=300, deadline=None)
@given(framed_graphs(max_n=12))
def test_result_is_vine_and_cover(gf):
    g, f = gf
    res, tree = net_alg(g, f)
    fg = res.face_graph
    face_frame = Frame3(fg.graph.outer_walk, f.j, f.k)
    assert is_vine(fg.graph, face_frame, res.vine)
    assert res.cover == {v for v in res.vine if v < g.n}
    assert verify_cover(g, f, res.cover)
    for side, p in zip(f.sides, tree.paths):
        assert p[0] == tree.root and p[-1] in side


@settings(max_examples=100, deadline=None)
@given(framed_graphs(max_n=12))
def test_deterministic(gf):
    g, f = gf
    a, _ = net_alg(g, f)
    b, _ = net_alg(g, f)
    assert (a.cover, a.vine, a.center) == (b.cover, b.vine, b.center)


def _path_in_face_graph_avoiding(fg, x, u, v):
    seen, stack = {u}, [u]
    while stack:
        s = stack.pop()
        for t in fg.graph.rotation[s]:
            if t not in x and t not in seen:
                seen.add(t)
                stack.append(t)
    return v in seen


def _crossing_path_in(g, x, u, v):
    walk = g.outer_walk
    occ = {}
    for i, w in enumerate(walk):
        occ.setdefault(w, []).append(i)
    for comp in components(g.rotation, x):
        on_walk = [w for w in comp if w in occ]
        for a, b in product(on_walk, repeat=2):
            for ia, ib, iu, iv in product(occ[a], occ[b], occ[u], occ[v]):
                if crosses(walk, (ia, ib), (iu, iv)):
                    return True
    return False


@settings(max_examples=400, deadline=None)
@given(plane_graphs(max_n=10), st.data())
def test_face_path_criterion(g, data):
    walk_vs = sorted(set(g.outer_walk))
    x = data.draw(st.sets(st.sampled_from(range(g.n))))
    free = [w for w in walk_vs if w not in x]
    if len(free) < 2:
        return
    u, v = data.draw(st.lists(st.sampled_from(free), min_size=2, max_size=2, unique=True))
    fg = build_face_graph(g)
    assert _path_in_face_graph_avoiding(fg, x, u, v) == (not _crossing_path_in(g, x, u, v))
