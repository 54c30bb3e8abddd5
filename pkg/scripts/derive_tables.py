"""Print both cardinal composition tables and compare them with lattice sampling."""

import argparse
import itertools

from scsp.cardinal import SYMBOLS, derive_table, format_table, to_relation
from scsp.relations import member


def sampled(calculus: str, radius: int) -> dict:
    rel = {s: to_relation(s, calculus) for s in SYMBOLS}
    offsets = list(itertools.product(range(-radius, radius + 1), repeat=2))

    def atom(d):
        return next(s for s in SYMBOLS if member(d, (0, 0), rel[s]))

    cls = {d: atom(d) for d in offsets}
    out = {}
    for d1, d2 in itertools.product(offsets, offsets):
        key = cls[d1], cls[d2]
        out.setdefault(key, set()).add(atom((d1[0] + d2[0], d1[1] + d2[1])))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--radius", type=int, default=4, help="integer offsets in [-r, r]^2")
    args = ap.parse_args()
    for calc in ("cone", "proj"):
        table = derive_table(calc)
        print(f"== {calc}")
        print(format_table(table))
        obs = sampled(calc, args.radius)
        loose = [(k, len(table[k]) - len(obs.get(k, ()))) for k in table if set(table[k]) != obs.get(k, set())]
        unsound = [k for k in table if not obs.get(k, set()) <= table[k]]
        print(f"cells wider than the lattice sample: {len(loose)}; unsound cells: {len(unsound)}")
        if loose:
            print("  " + ", ".join(f"{a}.{b}(+{d})" for (a, b), d in sorted(loose, key=lambda t: t[0])))
        print(f"sampled N.S = {sorted(obs[('N', 'S')])}")
        print()


if __name__ == "__main__":
    main()
