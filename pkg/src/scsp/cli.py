"""``scsp check|solve|table``.

Exit codes: 0 consistent (or PC-consistent so far), 1 inconsistent, 2 search
limit, 64 usage error, 65 instance parse error.

``--json`` prints one object instead of the text report::

    {"status": "CONSISTENT" | "INCONSISTENT" | "LIMIT" | "PC-CONSISTENT-SO-FAR",
     "witness": {"<var>": [x, y], ...} | null,
     "edge": ["<var>", "<var>"] | null,
     "stats": {...}}
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .cardinal import CALCULI, derive_table, format_atoms, format_table
from .lp import LPConfig
from .solver import (
    EPS_POINT,
    PCVerdict,
    SearchConfig,
    Verdict,
    check_pc_only,
    solve,
)
from .relations import EPS_MEM, member
from .syntax import ParseError, parse_instance

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_LIMIT = 2
EXIT_USAGE = 64
EXIT_PARSE = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="scsp", description="Directional constraint networks over planar points.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(q):
        q.add_argument("file", help="instance file, or - for stdin")
        q.add_argument("--json", action="store_true", help="machine-readable report")
        q.add_argument("--stats", action="store_true", help="append search statistics")

    c = sub.add_parser("check", help="path consistency only")
    common(c)
    s = sub.add_parser("solve", help="complete search with witness")
    common(s)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--steps", type=int, default=None, help="node limit")
    s.add_argument("--time-ms", type=int, default=None, help="wall-clock limit")
    s.add_argument("--parallel", type=int, default=0, metavar="N", help="threads over root branches")
    s.add_argument("--shuffle", action="store_true", help="try disjuncts in seeded random order")
    s.add_argument("--dump-lp", nargs="?", const="-", default=None, metavar="FILE",
                   help="write every leaf system (default: stderr)")
    s.add_argument("--verify", action="store_true",
                   help="re-check the witness against the constraints as written")
    t = sub.add_parser("table", help="derived composition table of a cardinal calculus")
    t.add_argument("calculus", choices=CALCULI)
    t.add_argument("--json", action="store_true")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _fmt(v: float) -> str:
    v = 0.0 if v == 0 else v  # no "-0"
    return f"{v:.12g}"


def _emit(args, payload: dict, lines: list, out) -> None:
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _cmd_check(args, out) -> int:
    inst = parse_instance(_read(args.file))
    net = inst.network
    verdict, edge = check_pc_only(net)
    if verdict is PCVerdict.SO_FAR:
        _emit(args, {"status": verdict.value, "witness": None, "edge": None, "stats": {}},
              [verdict.value], out)
        return EXIT_OK
    names = [net.names[v] for v in edge] if edge else None
    line = "INCONSISTENT" + (f" (edge {names[0]},{names[1]})" if names else "")
    _emit(args, {"status": "INCONSISTENT", "witness": None, "edge": names, "stats": {}}, [line], out)
    return EXIT_INCONSISTENT


def _cmd_solve(args, out) -> int:
    inst = parse_instance(_read(args.file))
    net = inst.network
    for name, value in (("--steps", args.steps), ("--time-ms", args.time_ms)):
        if value is not None and value < 0:
            raise _UsageError(f"{name} must be nonnegative")
    cfg = SearchConfig(
        disjunct_order="shuffled" if args.shuffle else "canonical",
        max_steps=args.steps,
        time_limit=None if args.time_ms is None else args.time_ms / 1000.0,
        seed=args.seed,
        parallel=args.parallel,
        lp=LPConfig(),
    )
    res = solve(net, cfg, dump_lp=args.dump_lp is not None)
    if args.dump_lp is not None:
        text = "\n".join(f"# leaf {k}\n{sys_.dump()}" for k, sys_ in enumerate(res.leaf_systems))
        if args.dump_lp == "-":
            sys.stderr.write(text + "\n")
        else:
            with open(args.dump_lp, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    status = res.status
    if status is Verdict.CONSISTENT and args.verify:
        for i, j, r in inst.constraints:
            if i != j and not member(res.witness[i], res.witness[j], r, EPS_MEM, EPS_POINT):
                sys.stderr.write(f"witness violates {net.names[i]} {net.names[j]} : {r}\n")
                status = Verdict.LIMIT
                break
    stats = vars(res.stats).copy()
    lines = [status.value]
    witness = None
    if status is Verdict.CONSISTENT:
        witness = {name: [res.witness[k][0], res.witness[k][1]] for k, name in enumerate(net.names)}
        lines += [f"var {name} = ({_fmt(x)}, {_fmt(y)})" for name, (x, y) in witness.items()]
    if args.stats:
        lines.append("# " + " ".join(f"{k}={v}" for k, v in stats.items()))
    _emit(args, {"status": status.value, "witness": witness, "edge": None, "stats": stats}, lines, out)
    return {Verdict.CONSISTENT: EXIT_OK, Verdict.INCONSISTENT: EXIT_INCONSISTENT,
            Verdict.LIMIT: EXIT_LIMIT}[status]


def _cmd_table(args, out) -> int:
    table = derive_table(args.calculus)
    if args.json:
        cells = {f"{a},{b}": format_atoms(v) for (a, b), v in table.items()}
        out.write(json.dumps(cells, sort_keys=True) + "\n")
    else:
        out.write(format_table(table) + "\n")
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as e:
        sys.stderr.write(f"scsp: {e}\n")
        return EXIT_USAGE
    handler = {"check": _cmd_check, "solve": _cmd_solve, "table": _cmd_table}[args.command]
    try:
        return handler(args, out)
    except ParseError as e:
        sys.stderr.write(f"{getattr(args, 'file', '-')}:{e}\n")
        return EXIT_PARSE
    except _UsageError as e:
        sys.stderr.write(f"scsp: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        sys.stderr.write(f"scsp: {e}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
