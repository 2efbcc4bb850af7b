"""Runtime of the search and decomposition on square grids.

Prints one row per grid size and the log-log slope of runtime against the
vertex count.
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass

import numpy as np

from netwidth.bt_alg import BTConfig, bt_alg, build_decomposition
from netwidth.generators import square_grid


@dataclass(frozen=True)
class ScalingConfig:
    sizes: tuple = (8, 16, 24, 32, 40, 50)
    repeat: int = 3
    check_invariants: bool = False


def run(cfg: ScalingConfig):
    rows = []
    for n in cfg.sizes:
        g = square_grid(n)
        best = float("inf")
        for _ in range(cfg.repeat):
            start = time.perf_counter()
            kb, root = bt_alg(g, config=BTConfig(check_invariants=cfg.check_invariants))
            td = build_decomposition(root, g, kb)
            best = min(best, time.perf_counter() - start)
        rows.append({"n": n, "vertices": g.n, "KB": kb, "width": td.width, "bags": td.num_bags, "seconds": round(best, 4)})
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sizes", type=int, nargs="+", default=list(ScalingConfig.sizes))
    p.add_argument("--repeat", type=int, default=ScalingConfig.repeat)
    p.add_argument("--csv", help="also write the table here")
    args = p.parse_args()
    rows = run(ScalingConfig(tuple(args.sizes), args.repeat))
    w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), delimiter="\t")
    w.writeheader()
    w.writerows(rows)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            out = csv.DictWriter(fh, fieldnames=list(rows[0]))
            out.writeheader()
            out.writerows(rows)
    if len(rows) > 1:
        x = np.log([r["vertices"] for r in rows])
        y = np.log([max(r["seconds"], 1e-6) for r in rows])
        print(f"runtime ~ |V|^{np.polyfit(x, y, 1)[0]:.2f}")


if __name__ == "__main__":
    main()
