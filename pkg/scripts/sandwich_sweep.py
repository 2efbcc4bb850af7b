"""KB against exact treewidth on random small plane graphs."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from netwidth.bt_alg import bt_alg
from netwidth.generators import random_plane_graph
from netwidth.oracles import brute_treewidth


@dataclass(frozen=True)
class SweepConfig:
    graphs: int = 300
    max_n: int = 12
    seed: int = 0


def run(cfg: SweepConfig):
    rng = random.Random(cfg.seed)
    pairs = Counter()
    violations = 0
    for _ in range(cfg.graphs):
        g = random_plane_graph(rng.randint(1, cfg.max_n), rng.randrange(10**9), keep=rng.random())
        kb, _ = bt_alg(g)
        tw, _ = brute_treewidth(g)
        pairs[kb, tw] += 1
        violations += not (kb <= tw + 1 and tw <= 4 * kb - 1)
    return pairs, violations


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--graphs", type=int, default=SweepConfig.graphs)
    p.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = p.parse_args()
    pairs, violations = run(SweepConfig(args.graphs, args.max_n, args.seed))
    print("KB\tTW\tcount")
    for (kb, tw), c in sorted(pairs.items()):
        print(f"{kb}\t{tw}\t{c}")
    print(f"violations: {violations}")


if __name__ == "__main__":
    main()
