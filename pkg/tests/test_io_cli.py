import json

import pytest
from hypothesis import given, settings

from conftest import plane_graphs
from netwidth import io
from netwidth.cli import main, render
from netwidth.errors import EmbeddingInvalid, FormatError
from netwidth.generators import square_grid, triangular_grid
from netwidth.oracles import brute_treewidth


@settings(max_examples=200, deadline=None)
@given(plane_graphs(max_n=14))
def test_graph_round_trip(g):
    text = io.format_graph(io.from_plane_graph(g))
    eg = io.parse_graph(text)
    assert io.format_graph(eg) == text
    (back,) = eg.components()
    assert back.rotation == g.rotation and back.anchor == g.anchor


def test_td_round_trip():
    tw, td = brute_treewidth(square_grid(3))
    text = io.format_td(td, 9)
    assert io.format_td(io.parse_td(text), 9) == text


def test_disconnected_components():
    eg = io.parse_graph("p pgr 5 2\nr 1 2\nr 2 1\nr 3\nr 4 5\nr 5 4\no 4 5\n")
    parts = eg.components()
    assert [p.labels for p in parts] == [(0, 1), (2,), (3, 4)]
    assert parts[2].anchor == (0, 1)
    assert io.from_components(parts).rotation == eg.rotation


def test_anchor_fallback_picks_longest_face():
    g = triangular_grid(3)
    text = io.format_graph(io.EmbeddedGraph(g.rotation))
    (back,) = io.parse_graph(text).components()
    assert len(back.outer_walk) - 1 == 6


@pytest.mark.parametrize(
    "text",
    [
        "r 1 2\n",
        "p pgr 2\n",
        "p pgr 2 1\nr 1 2\nr 2 1\nq\n",
        "p pgr 2 1\nr 1 3\nr 2 1\n",
        "p pgr 2 2\nr 1 2\nr 2 1\no 1 2\n",
        "p pgr 2 1\nr 1 x\n",
    ],
)
def test_graph_format_errors(text):
    with pytest.raises(FormatError):
        io.parse_graph(text)


def test_bad_anchor():
    with pytest.raises(EmbeddingInvalid):
        io.parse_graph("p pgr 3 1\nr 1 2\nr 2 1\nr 3\no 1 3\n").components()


@pytest.mark.parametrize(
    "text",
    ["b 1 1\n", "s td 1 2 2\nb 1 1 2\nb 2 1\n", "s td 2 2 2\nb 1 1 2\n", "s td 1 3 2\nb 1 1 2\n"],
)
def test_td_format_errors(text):
    with pytest.raises(FormatError):
        io.parse_td(text)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_gen_and_net_order(tmp_path, capsys):
    f = tmp_path / "c15.pgr"
    assert run(capsys, "gen", "cycle", 15, "--out", f)[0] == 0
    code, out, _ = run(capsys, "net-order", f, "--frame", "5,10", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["order"] == 2 and rep["cover_verified"]
    code, out, _ = run(capsys, "gen", "tri", 6)
    f.write_text(out)
    assert io.parse_graph(out).n == 21
    rep = json.loads(run(capsys, "net-order", f, "--json")[1])
    assert rep["order"] == 6
    f.write_text(run(capsys, "gen", "path", 2)[1])
    assert json.loads(run(capsys, "net-order", f, "--json")[1])["order"] == 1


def test_cli_bounds(tmp_path, capsys):
    f = tmp_path / "g.pgr"
    f.write_text(run(capsys, "gen", "grid", 6)[1])
    rep = json.loads(run(capsys, "bounds", f, "--json")[1])
    kb = rep["KB"]
    assert 2 <= kb <= 7
    assert rep["TW"] == [kb - 1, 4 * kb - 1] and rep["BN"] == [kb, 4 * kb] == rep["lambda"]
    f.write_text(run(capsys, "gen", "path", 1)[1])
    rep = json.loads(run(capsys, "bounds", f, "--json")[1])
    assert rep["KB"] == 1 and rep["TW"] == [0, 3]
    f.write_text(run(capsys, "gen", "hex19")[1])
    assert json.loads(run(capsys, "bounds", f, "--json")[1])["KB"] == 5


def test_cli_text_mirrors_json(tmp_path, capsys):
    f = tmp_path / "g.pgr"
    f.write_text(run(capsys, "gen", "tri", 5)[1])
    for cmd in ("bounds", "net-order"):
        text = run(capsys, cmd, f)[1]
        rep = json.loads(run(capsys, cmd, f, "--json")[1])
        assert text == render(rep, False)
        assert [line.split(":")[0] for line in text.splitlines()] == list(rep)


def test_cli_decompose_and_verify(tmp_path, capsys):
    g, td = tmp_path / "g.pgr", tmp_path / "g.td"
    for family, n in (("path", 5), ("grid", 4), ("path", 1)):
        g.write_text(run(capsys, "gen", family, n)[1])
        code, out, _ = run(capsys, "decompose", g, "--out", td, "--json")
        rep = json.loads(out)
        assert code == 0 and rep["width"] <= rep["width_bound"]
        code, out, _ = run(capsys, "verify", g, td)
        assert code == 0 and f"width: {rep['width']}" in out
        assert json.loads(run(capsys, "bounds", g, "--json")[1])["KB"] == rep["KB"]
    assert io.read_td(td).num_bags == 1


def test_cli_verify_failures(tmp_path, capsys):
    g, td = tmp_path / "g.pgr", tmp_path / "g.td"
    g.write_text(run(capsys, "gen", "grid", 3)[1])
    td.write_text("s td 1 8 9\nb 1 1 2 3 4 5 6 7 8\n")
    code, out, _ = run(capsys, "verify", g, td)
    assert code == 1 and "vertex 9: in no bag" in out
    td.write_text("nonsense\n")
    assert run(capsys, "verify", g, td)[0] == 2
    # oracle decomposition of grid(3)
    tw, opt = brute_treewidth(square_grid(3))
    io.write_td(td, opt, 9)
    code, out, _ = run(capsys, "verify", g, td)
    assert code == 0 and "width: 3" in out


def test_cli_oracle(tmp_path, capsys):
    f = tmp_path / "g.pgr"
    f.write_text(run(capsys, "gen", "grid", 3)[1])
    assert json.loads(run(capsys, "oracle", "treewidth", f, "--json")[1])["treewidth"] == 3
    f.write_text(run(capsys, "gen", "net5")[1])
    rep = json.loads(run(capsys, "oracle", "net-order", f, "--frame", "1,2", "--json")[1])
    assert rep["order"] == 2
    f.write_text(run(capsys, "gen", "path", 6)[1])
    assert json.loads(run(capsys, "oracle", "treewidth", f, "--json")[1])["treewidth"] == 1
    f.write_text(run(capsys, "gen", "grid", 5)[1])
    code, _, err = run(capsys, "oracle", "treewidth", f, "--limit", 10)
    assert code == 2 and "limit is 10" in err


def test_cli_input_errors(tmp_path, capsys):
    f = tmp_path / "g.pgr"
    f.write_text(run(capsys, "gen", "cycle", 6)[1])
    assert run(capsys, "net-order", f, "--frame", "4,2")[0] == 2
    assert run(capsys, "net-order", f, "--frame", "x")[0] == 2
    assert run(capsys, "bounds", tmp_path / "missing.pgr")[0] == 2
    f.write_text("p pgr 3 1\nr 1 2\nr 2 1\nr 3\n")
    assert run(capsys, "net-order", f, "--frame", "0,1")[0] == 2
