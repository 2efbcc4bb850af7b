from netwidth.decomposition import (
    TreeDecomposition,
    decomposition_from_ordering,
    validate_tree_decomposition,
)
from netwidth.generators import square_grid
from netwidth.oracles import brute_treewidth


def test_trivial_decomposition():
    g = square_grid(3)
    check = validate_tree_decomposition(g, TreeDecomposition([range(9)], []))
    assert check.ok and check.width == 8


def test_missing_vertex_named():
    g = square_grid(3)
    check = validate_tree_decomposition(g, TreeDecomposition([range(8)], []))
    assert not check
    assert "vertex 8: in no bag" in check.problems


def test_disconnected_bags_reported():
    path3 = [[1], [0, 2], [1]]
    td = TreeDecomposition([{0, 1}, {2}, {1, 2}], [(0, 1), (1, 2)])
    check = validate_tree_decomposition(path3, td)
    assert not check.ok
    assert any(p.startswith("vertex 1: bags") for p in check.problems)


def test_not_a_tree():
    path3 = [[1], [0, 2], [1]]
    td = TreeDecomposition([{0, 1}, {1, 2}, {1}], [(0, 1), (1, 2), (2, 0)])
    assert "tree: bag graph is not a tree" in validate_tree_decomposition(path3, td).problems


def test_edge_uncovered():
    path3 = [[1], [0, 2], [1]]
    td = TreeDecomposition([{0}, {1, 2}], [(0, 1)])
    assert validate_tree_decomposition(path3, td).problems == ["edge 0-1: no bag holds both endpoints"]


def test_oracle_grid3():
    tw, td = brute_treewidth(square_grid(3))
    assert tw == 3 and validate_tree_decomposition(square_grid(3), td).ok


def test_ordering_handles_components():
    two_edges = {0: {1}, 1: {0}, 2: {3}, 3: {2}}
    td = decomposition_from_ordering(two_edges, [0, 1, 2, 3])
    assert validate_tree_decomposition(two_edges, td).ok
