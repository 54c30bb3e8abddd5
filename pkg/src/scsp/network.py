"""Constraint networks over planar points and path consistency."""

from __future__ import annotations

import copy
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .angle import ONE, ZERO, add_pi
from .relations import (
    EMPTY,
    Arc,
    EQ_ONLY,
    UNIVERSAL,
    Relation,
    compose,
    converse,
    intersect,
    is_basic,
    is_convex,
    ray,
    single_arc,
)

ORIGIN = "origin"


class InconsistentNetwork(Exception):
    pass


@dataclass
class PCStats:
    edge_updates: dict = field(default_factory=dict)
    queue_pops: int = 0
    relaxations: int = 0
    holes_count: int = 0
    holes_plus_count: int = 0

    @property
    def max_edge_updates(self) -> int:
        return max(self.edge_updates.values(), default=0)

    @property
    def total_updates(self) -> int:
        return sum(self.edge_updates.values())


@dataclass
class PCResult:
    ok: bool
    stats: PCStats
    edge: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


class SCSPNetwork:
    """``n`` point variables; variable 0 is the fixed origin of the plane.

    ``matrix[i][j]`` constrains the pair ``(x_i, x_j)``: ``x_i`` lies in the
    relation's sectors as seen from ``x_j``.  The converse property
    ``matrix[j][i] == converse(matrix[i][j])`` holds after every mutation.
    """

    def __init__(self, n: int, names: Optional[Sequence[str]] = None):
        if n < 1:
            raise ValueError("a network needs at least the origin variable")
        self.n = n
        if names is None:
            names = [ORIGIN] + [f"x{i}" for i in range(1, n)]
        if len(names) != n:
            raise ValueError("one name per variable")
        self.names = list(names)
        self.matrix = [[EQ_ONLY if i == j else UNIVERSAL for j in range(n)] for i in range(n)]
        self.inconsistent = False
        self.bad_edge: Optional[tuple] = None

    def copy(self) -> "SCSPNetwork":
        other = copy.copy(self)
        other.matrix = [row[:] for row in self.matrix]
        other.names = self.names[:]
        return other

    def index(self, name: str) -> int:
        return self.names.index(name)

    def edges(self):
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)]

    def __getitem__(self, ij) -> Relation:
        i, j = ij
        return self.matrix[i][j]

    def _set(self, i: int, j: int, r: Relation) -> None:
        self.matrix[i][j] = r
        self.matrix[j][i] = converse(r)
        if r.is_empty:
            self.inconsistent = True
            if self.bad_edge is None:
                self.bad_edge = (min(i, j), max(i, j))

    def add_constraint(self, i: int, j: int, r: Relation) -> bool:
        """Intersect ``r`` into edge ``(i, j)``; False if the edge became empty."""
        for v in (i, j):
            if not 0 <= v < self.n:
                raise IndexError(f"variable {v} out of range 0..{self.n - 1}")
        if i == j:
            if not r.eq:
                self.inconsistent = True
                self.bad_edge = (i, i)
                raise InconsistentNetwork(f"self-constraint on {self.names[i]} excludes equality")
            return True
        new = intersect(self.matrix[i][j], r)
        self._set(i, j, new)
        return not new.is_empty

    def add_unary(self, i: int, r: Relation) -> bool:
        if i == 0:
            raise ValueError("unary constraints on the origin are meaningless")
        return self.add_constraint(i, 0, r)

    def __str__(self) -> str:
        lines = []
        for i, j in self.edges():
            if not self.matrix[i][j].is_universal:
                lines.append(f"{self.names[i]} {self.names[j]} : {self.matrix[i][j]}")
        return "\n".join(lines)


def network_new(n: int) -> SCSPNetwork:
    return SCSPNetwork(n)


def holes(net: SCSPNetwork) -> frozenset:
    """Every sector endpoint appearing in some label."""
    out = set()
    for i, j in net.edges():
        out |= net.matrix[i][j].angles()
    return frozenset(out)


def holes_plus(net: SCSPNetwork) -> frozenset:
    h = holes(net)
    out = frozenset(h | {add_pi(a) for a in h})
    assert len(out) <= 2 * len(h)
    return out


def path_consistency(
    net: SCSPNetwork,
    check: Optional[Callable[[int, int, Relation], None]] = None,
) -> PCResult:
    """Tighten every label to ``B_ij & (B_ik o B_kj)`` until nothing changes.

    Runs a FIFO worklist of edges seeded with all non-universal labels.  On an
    empty label it stops and reports that edge.  ``check`` is called on every
    tightened label, for instrumentation.
    """
    n = net.n
    m = net.matrix
    h = holes(net)
    stats = PCStats(holes_count=len(h), holes_plus_count=len(h | {add_pi(a) for a in h}))
    for i, j in net.edges():
        if m[i][j].is_empty:
            return PCResult(False, stats, (i, j))
    queue = deque((i, j) for i, j in net.edges() if not m[i][j].is_universal)
    queued = set(queue)

    def relax(i: int, k: int, j: int) -> bool:
        # B_ij <- B_ij & (B_ik o B_kj)
        stats.relaxations += 1
        old = m[i][j]
        new = intersect(old, compose(m[i][k], m[k][j]))
        if new == old:
            return True
        net._set(i, j, new)
        key = (min(i, j), max(i, j))
        stats.edge_updates[key] = stats.edge_updates.get(key, 0) + 1
        if check is not None:
            check(i, j, new)
        if new.is_empty:
            return False
        if key not in queued:
            queued.add(key)
            queue.append(key)
        return True

    while queue:
        i, j = queue.popleft()
        queued.discard((i, j))
        stats.queue_pops += 1
        for k in range(n):
            if k == i or k == j:
                continue
            if not relax(i, j, k):
                return PCResult(False, stats, (min(i, k), max(i, k)))
            if not relax(k, i, j):
                return PCResult(False, stats, (min(k, j), max(k, j)))
    return PCResult(True, stats)


def closure_check(allowed_angles: frozenset):
    """Checker asserting labels stay convex and reuse only ``allowed_angles``."""

    def check(i: int, j: int, r: Relation) -> None:
        if not is_convex(r):
            raise AssertionError(f"label ({i},{j}) = {r} left the convex class")
        extra = r.angles() - allowed_angles
        if extra:
            raise AssertionError(f"label ({i},{j}) = {r} introduced new angles {sorted(extra)}")

    return check


def is_bsp(net: SCSPNetwork) -> bool:
    return all(is_basic(net.matrix[i][j]) for i, j in net.edges())


def _open_half(lo) -> Relation:
    return Relation.from_arcs([Arc(lo, add_pi(lo), False, False)])


def _pieces(r: Relation) -> list:
    """Vertex-free basic pieces covering the arcs of ``r``."""
    out = []
    for arc in r.arcs():
        if arc.full:
            out += [_open_half(ZERO), ray(ZERO), _open_half(ONE), ray(ONE)]
            continue
        if arc.span < 1:
            out.append(Relation.from_arcs([arc]))
            continue
        lo, lo_closed = arc.lo, arc.lo_closed
        if arc.span == 2:
            # everything except the ray at lo
            out += [_open_half(lo), ray(add_pi(lo)), _open_half(add_pi(lo))]
            continue
        if arc.span > 1:
            # basic part up to the antipode of hi, then a half-plane
            mid = add_pi(arc.hi)
            out.append(Relation.from_arcs([Arc(lo, mid, lo_closed, False)]))
            lo, lo_closed = mid, True
        out.append(_open_half(lo))
        if lo_closed:
            out.append(ray(lo))
        if arc.hi_closed:
            out.append(ray(add_pi(lo)))
    return out


def basic_refinements(r: Relation) -> list:
    """Basic relations whose union is exactly ``r``.

    Already-basic labels come back unsplit.  Otherwise the arcs are cut
    into vertex-free basic pieces and the vertex is attached to a piece
    that can carry it, or kept as a separate eq-only disjunct.
    """
    if is_basic(r):
        return [r]
    pieces = _pieces(r)
    eq_left = r.eq
    if r.eq:
        # a closed sector, or closed half-plane, can absorb the vertex
        for idx, p in enumerate(pieces):
            with_eq = Relation(p.breaks, p.marks, True)
            arc = single_arc(p)
            if arc is not None and arc.lo_closed and arc.hi_closed and is_basic(with_eq):
                pieces[idx] = with_eq
                eq_left = False
                break
    pieces.sort(key=_order_key)
    if eq_left:
        pieces.append(EQ_ONLY)
    return pieces


def _order_key(r: Relation):
    arc = single_arc(r)
    return (arc.lo, arc.span, not arc.lo_closed)


def edge_disjuncts(r: Relation) -> int:
    return len(basic_refinements(r))


__all__ = [
    "SCSPNetwork",
    "PCStats",
    "PCResult",
    "InconsistentNetwork",
    "network_new",
    "path_consistency",
    "holes",
    "holes_plus",
    "closure_check",
    "is_bsp",
    "basic_refinements",
    "EMPTY",
]
