"""Path-consistency work against network size on satisfiable basic networks.

    python3 scripts/holes_scaling.py --sizes 4 8 16 32 --per-size 3
"""

import argparse
import random
import time

import numpy as np

from scsp.generators import placement_bsp
from scsp.network import path_consistency


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 16, 32])
    ap.add_argument("--per-size", type=int, default=3)
    ap.add_argument("--grid", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'n':>4} {'relax':>10} {'|H|':>6} {'|H+|':>6} {'max upd':>8} {'relax/(|H| n^3)':>16} {'sec':>7}")
    per_hole = []
    for n in args.sizes:
        rows = []
        for _ in range(args.per_size):
            net, _ = placement_bsp(n, rng, grid=args.grid)
            t0 = time.perf_counter()
            st = path_consistency(net).stats
            rows.append((st.relaxations, st.holes_count, st.holes_plus_count,
                         st.max_edge_updates, time.perf_counter() - t0))
        r, h, hp, mu, dt = (float(np.mean(c)) for c in zip(*rows))
        per_hole.append(np.mean([a / max(b, 1) for a, b, *_ in rows]))
        print(f"{n:>4} {r:>10.0f} {h:>6.1f} {hp:>6.1f} {mu:>8.1f} {r / max(h, 1) / n**3:>16.4f} {dt:>7.2f}")
    if len(args.sizes) > 1:
        slope = np.polyfit(np.log(args.sizes), np.log(per_hole), 1)[0]
        print(f"log-log slope of relaxations/|H| against n: {slope:.2f}")


if __name__ == "__main__":
    main()
