"""Solve random placement instances and write a few of them in the instance syntax.

    python3 scripts/random_instances.py --count 50 --max-n 10 --out /tmp/instances
"""

import argparse
import random
import time
from pathlib import Path

from scsp.generators import PlacementConfig, random_placement
from scsp.solver import SearchConfig, solve


def to_text(p) -> str:
    net = p.network
    lines = ["vars " + " ".join(net.names[1:])]
    for (i, j), r in sorted(p.labels.items()):
        a, b = net.names[i], net.names[j]
        lines.append(f"{a} : {r}" if j == 0 else f"{a} {b} : {r}")
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--decoys", type=float, default=0.3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=None, help="directory for .scsp files")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
    tally = {}
    t0 = time.perf_counter()
    for k in range(args.count):
        cfg = PlacementConfig(n=rng.randint(3, args.max_n), decoys=args.decoys, coincide=0.1)
        p = random_placement(cfg, rng)
        res = solve(p.network, SearchConfig(seed=k))
        tally[res.status.value] = tally.get(res.status.value, 0) + 1
        print(f"{k:3d} n={cfg.n:2d} {res.status.value:13s} nodes={res.stats.nodes} lp={res.stats.lp_calls}")
        if args.out:
            (args.out / f"inst{k:03d}.scsp").write_text(to_text(p))
    print(f"{tally} in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
