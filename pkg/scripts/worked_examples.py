"""Recompute the small worked examples: the five-vertex net, the 15-cycle,
the triangular grid orders and the 19-vertex search tree."""

from netwidth.bt_alg import bt_alg, build_decomposition, iter_nodes
from netwidth.frame_net import Frame3, make_frame, verify_cover
from netwidth.generators import cycle, five_vertex_net, hex_patch, triangular_grid
from netwidth.net_alg import net_alg
from netwidth.oracles import brute_net_order, minimal_vines


def small_net():
    g = five_vertex_net()
    f = make_frame(g, 1, 2)
    names = "abcde"
    print("five-vertex net")
    print("  sides:", [sorted(names[v] for v in s) for s in f.sides])
    print("  minimal vines:", ["".join(names[v] for v in m) for m in minimal_vines(g, f)])
    order, cover = brute_net_order(g, f)
    print("  order:", net_alg(g, f)[0].order, "oracle:", order, "cover:", "".join(names[v] for v in sorted(cover)))


def fifteen_cycle():
    g = cycle(15)
    f = make_frame(g, 5, 10)
    res, _ = net_alg(g, f)
    print("15-cycle, frame (5, 10)")
    print("  order:", res.order, "cover:", sorted(f"c{v}" for v in res.cover))
    print("  {c5, c10} covers:", verify_cover(g, f, {5, 10}))


def triangular_orders():
    print("triangular grids, one side per grid side")
    for n in range(1, 11):
        g = triangular_grid(n)
        print(f"  n={n}: order {net_alg(g, Frame3(g.outer_walk, n - 1, 2 * (n - 1)))[0].order}")


def search_tree():
    g = hex_patch()
    kb, root = bt_alg(g)
    td = build_decomposition(root, g, kb)
    print(f"19-vertex patch: KB = {kb}, width {td.width} <= {4 * kb - 1}")
    for node in iter_nodes(root):
        tag = " (pruned)" if node.pruned else ""
        print(f"  G{node.id}: {node.graph.n} vertices, cover {sorted(node.cover)}{tag}")


if __name__ == "__main__":
    small_net()
    fifteen_cycle()
    triangular_orders()
    search_tree()
