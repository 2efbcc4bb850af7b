"""Command-line front end.

Every command prints a report of ``key: value`` lines, or the same fields as
JSON with ``--json``.  Vertex ids in reports and files are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .bt_alg import BTConfig, bt_alg, build_decomposition
from .decomposition import TreeDecomposition, validate_tree_decomposition
from .errors import (
    BadParameter,
    EmbeddingInvalid,
    FormatError,
    IndexOutOfRange,
    NetwidthError,
    TooLarge,
    ValidationFailure,
)
from .frame_net import Frame3, default_frame, make_frame, verify_cover
from .generators import generate
from .net_alg import net_alg
from .oracles import LIMITS, brute_net_order, brute_treewidth

EXIT_OK, EXIT_INVALID, EXIT_INPUT = 0, 1, 2


def _ids(g, vs):
    return sorted(g.label(v) + 1 for v in vs)


def parse_frame(frame_arg: str):
    """``"thirds"`` or ``"j,k"``; returns ``None`` for thirds."""
    if frame_arg == "thirds":
        return None
    try:
        j, k = (int(x) for x in frame_arg.split(","))
    except ValueError:
        raise BadParameter(f"frame must be 'thirds' or 'j,k', got {frame_arg!r}") from None
    return j, k


def _frame(g, frame_arg) -> Frame3:
    return default_frame(g) if frame_arg is None else make_frame(g, *frame_arg)


def _load(path):
    return io.read_graph(path).components()


def _check_frame_arg(parts, frame_arg):
    if frame_arg is not None and len(parts) > 1:
        raise BadParameter("an explicit frame needs a connected graph; use thirds")


# -- commands -----------------------------------------------------------------


def cmd_gen(args):
    g = generate(args.family, args.n, args.seed)
    eg = io.from_plane_graph(g)
    size = "" if args.n is None else f" {args.n}"
    eg.comments = [f"netwidth gen {args.family}{size} seed={args.seed}"]
    text = io.format_graph(eg)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        return {"family": args.family, "vertices": g.n, "edges": g.num_edges, "file": args.out}
    sys.stdout.write(text)
    return None


def cmd_net_order(args):
    parts = _load(args.file)
    frame_arg = parse_frame(args.frame)
    _check_frame_arg(parts, frame_arg)
    rows = []
    for g in parts:
        frame = _frame(g, frame_arg)
        res, _ = net_alg(g, frame)
        rows.append(
            {
                "vertices": g.n,
                "walk_length": frame.n,
                "frame": [frame.j, frame.k],
                "order": res.order,
                "cover": _ids(g, res.cover),
                "vine_size": len(res.vine),
                "vine_face_vertices": len(res.vine) - len(res.cover),
                "cover_verified": verify_cover(g, frame, res.cover),
            }
        )
    if len(rows) == 1:
        return rows[0]
    return {"components": rows, "order": max(r["order"] for r in rows)}


def _run_bt(g, frame_arg):
    return bt_alg(g, _frame(g, frame_arg), BTConfig())


def _intervals(kb):
    return {
        "KB": kb,
        "BN": [kb, 4 * kb],
        "TW": [kb - 1, 4 * kb - 1],
        "lambda": [kb, 4 * kb],
    }


def cmd_bounds(args):
    parts = _load(args.file)
    frame_arg = parse_frame(args.frame)
    _check_frame_arg(parts, frame_arg)
    kbs = [_run_bt(g, frame_arg)[0] for g in parts]
    report = {"vertices": sum(g.n for g in parts), "components": len(parts), "component_KB": kbs}
    report.update(_intervals(max(kbs)))
    return report


def decompose(parts, frame_arg=None):
    """Tree decomposition of a (possibly disconnected) graph in file ids.

    Components are decomposed separately and their roots chained.
    """
    bags, edges, roots, kbs = [], [], [], []
    for g in parts:
        kb, root = _run_bt(g, frame_arg)
        td = build_decomposition(root, g, kb)
        off = len(bags)
        roots.append(off)
        bags.extend(frozenset(g.label(v) for v in bag) for bag in td.bags)
        edges.extend((a + off, b + off) for a, b in td.edges)
        kbs.append(kb)
    edges.extend(zip(roots, roots[1:]))
    return TreeDecomposition(bags, edges), max(kbs)


def cmd_decompose(args):
    parts = _load(args.file)
    frame_arg = parse_frame(args.frame)
    _check_frame_arg(parts, frame_arg)
    td, kb = decompose(parts, frame_arg)
    n = sum(g.n for g in parts)
    full = io.from_components(parts)
    check = validate_tree_decomposition(list(full.rotation), td)
    if not check.ok:
        raise ValidationFailure("decomposition failed validation", check.problems)
    text = io.format_td(td, n)
    report = {"KB": kb, "width": td.width, "width_bound": 4 * kb - 1, "bags": td.num_bags}
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        report["file"] = args.out
        return report
    sys.stdout.write(text)
    return None


def cmd_verify(args):
    eg = io.read_graph(args.graph)
    td = io.read_td(args.td)
    # 1-based ids in the diagnostics
    adj = {v + 1: {u + 1 for u in r} for v, r in enumerate(eg.rotation)}
    shifted = TreeDecomposition([{u + 1 for u in b} for b in td.bags], td.edges)
    check = validate_tree_decomposition(adj, shifted)
    report = {"valid": check.ok, "width": td.width, "bags": td.num_bags}
    if not check.ok:
        report["problems"] = check.problems
    return report


def cmd_oracle(args):
    eg = io.read_graph(args.file)
    if args.what == "treewidth":
        limit = LIMITS.treewidth if args.limit is None else args.limit
        tw, td = brute_treewidth(list(eg.rotation), limit)
        return {"treewidth": tw, "BN": tw + 1, "bags": td.num_bags}
    limit = LIMITS.net_order if args.limit is None else args.limit
    parts = eg.components()
    frame_arg = parse_frame(args.frame)
    _check_frame_arg(parts, frame_arg)
    rows = []
    for g in parts:
        frame = _frame(g, frame_arg)
        order, cover = brute_net_order(g, frame, limit)
        rows.append({"vertices": g.n, "frame": [frame.j, frame.k], "order": order, "cover": _ids(g, cover)})
    if len(rows) == 1:
        return rows[0]
    return {"components": rows, "order": max(r["order"] for r in rows)}


# -- output -------------------------------------------------------------------


def _text(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return " ".join(_text(v) for v in value) if value else "-"
    return str(value)


def render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2) + "\n"
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            for i, row in enumerate(value, start=1):
                lines.append(f"{key}[{i}]:")
                lines.extend(f"  {k}: {_text(v)}" for k, v in row.items())
        elif key == "problems":
            lines.append(f"{key}:")
            lines.extend(f"  {p}" for p in value)
        else:
            lines.append(f"{key}: {_text(value)}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="netwidth", description="Treewidth bounds for plane graphs from three-sided brambles.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, frame=True):
        sp.add_argument("--json", action="store_true", help="machine-readable report")
        if frame:
            sp.add_argument("--frame", default="thirds", help="'thirds' (default) or 'j,k' walk indices")

    sp = sub.add_parser("gen", help="write a generated plane graph")
    sp.add_argument("family", choices=["grid", "tri", "cycle", "path", "random", "net5", "hex19"])
    sp.add_argument("n", nargs="?", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    common(sp, frame=False)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("net-order", help="minimum net cover for a frame")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_net_order)

    sp = sub.add_parser("bounds", help="KB and the implied intervals")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("decompose", help="tree decomposition of width at most 4KB-1")
    sp.add_argument("file")
    sp.add_argument("--out")
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("verify", help="check a tree decomposition file")
    sp.add_argument("graph")
    sp.add_argument("td")
    common(sp, frame=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="brute-force reference values")
    sp.add_argument("what", choices=["net-order", "treewidth"])
    sp.add_argument("file")
    sp.add_argument("--limit", type=int, help="largest vertex count to attempt")
    common(sp)
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except (FormatError, EmbeddingInvalid, BadParameter, IndexOutOfRange, TooLarge, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        for p in exc.problems:
            print(f"  {p}", file=sys.stderr)
        return EXIT_INVALID
    except NetwidthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if report is not None:
        sys.stdout.write(render(report, args.json))
    if args.command == "verify" and not report["valid"]:
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
