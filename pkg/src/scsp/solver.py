"""Complete search: path consistency at every node, Simplex at basic leaves."""

from __future__ import annotations

import enum
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .lp import LPConfig, Status, simplex_feasible, translate_bsp, witness_points
from .network import SCSPNetwork, basic_refinements, path_consistency
from .relations import EPS_MEM, is_basic, member

log = logging.getLogger(__name__)

# coincident points in a float witness
EPS_POINT = 1e-6


class Verdict(enum.Enum):
    CONSISTENT = "CONSISTENT"
    INCONSISTENT = "INCONSISTENT"
    LIMIT = "LIMIT"


@dataclass(frozen=True)
class SearchConfig:
    edge_order: str = "min-disjuncts"  # or "lexicographic"
    disjunct_order: str = "canonical"  # or "shuffled"
    max_steps: Optional[int] = None
    time_limit: Optional[float] = None  # seconds
    seed: int = 0
    parallel: int = 0
    lp: LPConfig = field(default_factory=LPConfig)

    def __post_init__(self):
        if self.max_steps is not None and self.max_steps < 0:
            raise ValueError("max_steps must be nonnegative")
        if self.time_limit is not None and self.time_limit < 0:
            raise ValueError("time_limit must be nonnegative")


@dataclass
class SearchStats:
    nodes: int = 0
    pc_calls: int = 0
    lp_calls: int = 0
    ill_leaves: int = 0


@dataclass
class SolveOutcome:
    status: Verdict
    witness: Optional[list] = None
    stats: SearchStats = field(default_factory=SearchStats)
    leaf_systems: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.status is Verdict.CONSISTENT


class _Limit(Exception):
    pass


def verify_witness(net: SCSPNetwork, points, eps_point: float = EPS_POINT) -> bool:
    """Check every label of ``net`` on concrete coordinates."""
    for i, j in net.edges():
        if not member(points[i], points[j], net.matrix[i][j], EPS_MEM, eps_point):
            return False
    return True


def _pick_edge(net: SCSPNetwork, cfg: SearchConfig):
    best = None
    for i, j in net.edges():
        label = net.matrix[i][j]
        if label.is_universal or is_basic(label):
            continue
        if cfg.edge_order == "lexicographic":
            return i, j
        k = len(basic_refinements(label))
        if best is None or k < best[0]:
            best = (k, (i, j))
    return None if best is None else best[1]


class _Search:
    def __init__(self, original: SCSPNetwork, cfg: SearchConfig, dump_lp: bool = False):
        self.original = original
        self.cfg = cfg
        self.stats = SearchStats()
        self.rng = random.Random(cfg.seed)
        self.deadline = None if cfg.time_limit is None else time.monotonic() + cfg.time_limit
        self.dump_lp = dump_lp
        self.systems = []

    def _tick(self) -> None:
        self.stats.nodes += 1
        if self.cfg.max_steps is not None and self.stats.nodes > self.cfg.max_steps:
            raise _Limit
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Limit

    def _branches(self, net: SCSPNetwork, edge):
        i, j = edge
        options = basic_refinements(net.matrix[i][j])
        if self.cfg.disjunct_order == "shuffled":
            self.rng.shuffle(options)
        return options

    def _leaf(self, net: SCSPNetwork):
        self.stats.lp_calls += 1
        sys = translate_bsp(net)
        if self.dump_lp:
            self.systems.append(sys)
        res = simplex_feasible(sys, self.cfg.lp)
        if res.status is Status.NUMERICALLY_ILL:
            log.warning("simplex was numerically ill at a leaf; treating it as unresolved")
            self.stats.ill_leaves += 1
            return None
        if not res.feasible:
            return None
        points = witness_points(res, net.n)
        if not verify_witness(self.original, points):
            log.warning("leaf witness failed re-verification; treating it as unresolved")
            self.stats.ill_leaves += 1
            return None
        return points

    def run(self, net: SCSPNetwork):
        """Depth-first search on copies of ``net``; returns a witness or None."""
        self._tick()
        self.stats.pc_calls += 1
        if not path_consistency(net):
            return None
        edge = _pick_edge(net, self.cfg)
        if edge is None:
            return self._leaf(net)
        for option in self._branches(net, edge):
            child = net.copy()
            if child.add_constraint(*edge, option):
                found = self.run(child)
                if found is not None:
                    return found
        return None


def _finish(search: _Search, witness) -> SolveOutcome:
    if witness is not None:
        status = Verdict.CONSISTENT
    elif search.stats.ill_leaves:
        status = Verdict.LIMIT
    else:
        status = Verdict.INCONSISTENT
    return SolveOutcome(status, witness, search.stats, search.systems)


def solve(net: SCSPNetwork, cfg: SearchConfig = SearchConfig(), dump_lp: bool = False) -> SolveOutcome:
    """Decide consistency of ``net``; a Consistent outcome carries verified coordinates."""
    if net.inconsistent:
        return SolveOutcome(Verdict.INCONSISTENT)
    if cfg.parallel > 1:
        return _solve_parallel(net, cfg, dump_lp)
    search = _Search(net, cfg, dump_lp)
    try:
        witness = search.run(net.copy())
    except _Limit:
        return SolveOutcome(Verdict.LIMIT, None, search.stats, search.systems)
    return _finish(search, witness)


def _solve_parallel(net: SCSPNetwork, cfg: SearchConfig, dump_lp: bool) -> SolveOutcome:
    # root branches run on independent copies; the lowest consistent index wins
    root = _Search(net, cfg, dump_lp)
    work = net.copy()
    try:
        root._tick()
    except _Limit:
        return SolveOutcome(Verdict.LIMIT, None, root.stats)
    root.stats.pc_calls += 1
    if not path_consistency(work):
        return _finish(root, None)
    edge = _pick_edge(work, cfg)
    if edge is None:
        return _finish(root, root._leaf(work))
    children = []
    for option in root._branches(work, edge):
        child = work.copy()
        if child.add_constraint(*edge, option):
            children.append(child)

    def branch(child):
        s = _Search(net, cfg, dump_lp)
        try:
            return s, s.run(child), False
        except _Limit:
            return s, None, True

    with ThreadPoolExecutor(max_workers=cfg.parallel) as pool:
        results = list(pool.map(branch, children))
    limited = False
    for s, _, hit in results:
        root.stats.nodes += s.stats.nodes
        root.stats.pc_calls += s.stats.pc_calls
        root.stats.lp_calls += s.stats.lp_calls
        root.stats.ill_leaves += s.stats.ill_leaves
        root.systems += s.systems
        limited |= hit
    for _, witness, _ in results:
        if witness is not None:
            return _finish(root, witness)
    if limited:
        return SolveOutcome(Verdict.LIMIT, None, root.stats, root.systems)
    return _finish(root, None)


class PCVerdict(enum.Enum):
    SO_FAR = "PC-CONSISTENT-SO-FAR"
    INCONSISTENT = "INCONSISTENT"


def check_pc_only(net: SCSPNetwork):
    """One path-consistency pass on a copy; returns the verdict and the failing edge."""
    if net.inconsistent:
        return PCVerdict.INCONSISTENT, net.bad_edge
    res = path_consistency(net.copy())
    if res:
        return PCVerdict.SO_FAR, None
    return PCVerdict.INCONSISTENT, res.edge
