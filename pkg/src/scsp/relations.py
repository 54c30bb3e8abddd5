"""Direction relations between planar points and their algebra.

A :class:`Relation` denotes a set of point pairs ``(x, y)``: either ``x = y``
(admitted iff ``eq``) or ``x != y`` with the direction of ``x - y`` lying in a
union of angular arcs.  Arcs are stored as a circular partition of ``[0, 2)``
into breakpoints and the open gaps between them, each marked in or out.  The
partition is kept minimal, so two relations are equal iff they denote the
same set.

Composition goes through the five-atom half-plane calculi: each convex arc is
written as the intersection of two half-plane atom sets and atom pairs are
looked up in a fixed composition table.
"""

from __future__ import annotations

import enum
import math
import warnings
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional, Sequence

import numpy as np

from .angle import (
    Angle,
    acwi,
    add_pi,
    circ_add,
    circ_sub,
    format_angle,
    from_radians_float,
)

EPS_MEM = 1e-9  # half-turns


class MalformedBasicConstraint(ValueError):
    """A basic sector must span strictly less than a half-turn."""


@dataclass(frozen=True, order=True)
class Arc:
    lo: Angle
    hi: Angle
    lo_closed: bool = True
    hi_closed: bool = True
    full: bool = False

    @property
    def span(self) -> Fraction:
        if self.full:
            return Fraction(2)
        if self.lo == self.hi:
            # a lone ray, or everything but one ray
            return Fraction(0) if self.lo_closed else Fraction(2)
        return circ_sub(self.hi, self.lo)

    @property
    def is_basic(self) -> bool:
        return self.span < 1

    @property
    def is_ray(self) -> bool:
        return self.span == 0

    def contains(self, g: Angle) -> bool:
        if self.full:
            return True
        if self.lo == self.hi and not self.lo_closed:
            return g != self.lo
        return acwi(g, self)

    def __str__(self) -> str:
        if self.full:
            return "[0, 2pi)"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{format_angle(self.lo)}, {format_angle(self.hi)}{right}"


def _gap_mid(p: Angle, q: Angle) -> Angle:
    span = circ_sub(q, p) or Fraction(2)
    return circ_add(p, span / 2)


@dataclass(frozen=True)
class Relation:
    """Canonical relation; build with the module constructors, not directly.

    ``marks[2k]`` tells whether the ray at ``breaks[k]`` is included and
    ``marks[2k+1]`` whether the open gap after it is.  With no breakpoints
    ``marks`` is a single flag for the whole circle.
    """

    breaks: tuple = ()
    marks: tuple = (False,)
    eq: bool = False

    # -- construction -----------------------------------------------------

    @staticmethod
    def _canonical(breaks: Sequence[Angle], marks: Sequence[bool], eq: bool) -> "Relation":
        n = len(breaks)
        if n == 0:
            return Relation((), (bool(marks[0]),), eq)
        keep = [
            k for k in range(n)
            if not (marks[2 * k - 1] == marks[2 * k] == marks[2 * k + 1])
        ]
        if not keep:
            return Relation((), (bool(marks[0]),), eq)
        new_breaks = []
        new_marks = []
        for k in keep:
            new_breaks.append(breaks[k])
            new_marks.append(bool(marks[2 * k]))
            # gaps across dropped breaks all share one mark
            new_marks.append(bool(marks[2 * k + 1]))
        return Relation(tuple(new_breaks), tuple(new_marks), eq)

    @staticmethod
    def _from_predicate(breaks: Iterable[Angle], inside, eq: bool) -> "Relation":
        bs = sorted(set(breaks))
        if not bs:
            return Relation((), (bool(inside(Fraction(0))),), eq)
        marks = []
        for k, p in enumerate(bs):
            marks.append(inside(p))
            marks.append(inside(_gap_mid(p, bs[(k + 1) % len(bs)])))
        return Relation._canonical(bs, marks, eq)

    @staticmethod
    def from_arcs(arcs: Iterable[Arc], eq: bool = False) -> "Relation":
        arcs = list(arcs)
        if any(a.full for a in arcs):
            return Relation((), (True,), eq)
        pts = [p for a in arcs for p in (a.lo, a.hi)]
        return Relation._from_predicate(pts, lambda g: any(a.contains(g) for a in arcs), eq)

    # -- queries ------------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.eq and not self.breaks and not self.marks[0]

    @property
    def full_circle(self) -> bool:
        return not self.breaks and self.marks[0]

    @property
    def is_universal(self) -> bool:
        return self.eq and self.full_circle

    @property
    def has_arcs(self) -> bool:
        return bool(self.breaks) or self.marks[0]

    @property
    def is_eq_only(self) -> bool:
        return self.eq and not self.has_arcs

    def contains_angle(self, g: Angle) -> bool:
        if not self.breaks:
            return self.marks[0]
        k = bisect_left(self.breaks, g)
        if k < len(self.breaks) and self.breaks[k] == g:
            return self.marks[2 * k]
        # g sits in the gap after breaks[k-1]; k == 0 wraps to the last gap
        return self.marks[2 * k - 1]

    def contains_direction(self, theta: float, eps: float = EPS_MEM) -> bool:
        """Float direction in half-turns; within ``eps`` of a breakpoint counts as on it."""
        if not self.breaks:
            return self.marks[0]
        fb = [float(b) for b in self.breaks]
        for k, b in enumerate(fb):
            d = abs(theta - b)
            if min(d, 2.0 - d) <= eps:
                return self.marks[2 * k]
        k = bisect_left(fb, theta)
        return self.marks[2 * k - 1]

    def arcs(self) -> list[Arc]:
        """Maximal arcs of the relation, sorted by lower endpoint."""
        n = len(self.breaks)
        if n == 0:
            return [Arc(Fraction(0), Fraction(0), True, True, full=True)] if self.marks[0] else []
        m = self.marks
        size = 2 * n
        start = next(i for i in range(size) if not m[i])
        out = []
        run_start = None
        for step in range(1, size + 1):
            i = (start + step) % size
            if m[i] and run_start is None:
                run_start = i
            if run_start is not None and (not m[(i + 1) % size] or step == size):
                out.append(self._run_to_arc(run_start, i))
                run_start = None
        return sorted(out)

    def _run_to_arc(self, a: int, b: int) -> Arc:
        n = len(self.breaks)
        lo = self.breaks[a // 2]
        lo_closed = a % 2 == 0
        if b % 2 == 0:
            hi, hi_closed = self.breaks[b // 2], True
        else:
            hi, hi_closed = self.breaks[(b // 2 + 1) % n], False
        return Arc(lo, hi, lo_closed, hi_closed)

    def angles(self) -> frozenset:
        return frozenset(self.breaks)

    def __str__(self) -> str:
        if self.is_universal:
            return "?"
        if self.is_empty:
            return "{}"
        terms = []
        for a in self.arcs():
            for p in _basic_pieces(a):
                if not (p.lo_closed and p.hi_closed) or self.eq:
                    terms.append(str(p))
                elif p.is_ray:
                    terms.append(f"ray:{format_angle(p.lo)}")
                else:
                    # a closed sector reads back with its vertex; two half-open
                    # copies cover the same directions without it
                    terms.append(f"{Arc(p.lo, p.hi, True, False)} | {Arc(p.lo, p.hi, False, True)}")
        if self.eq:
            terms.append("eq")
        return " | ".join(terms)

    def __repr__(self) -> str:
        return f"Relation({self})"

    # -- algebra --------------------------------------------------------------

    def __and__(self, other: "Relation") -> "Relation":
        return intersect(self, other)

    def __or__(self, other: "Relation") -> "Relation":
        return rel_union(self, other)

    def issubset(self, other: "Relation") -> bool:
        return intersect(self, other) == self


def _basic_pieces(arc: Arc) -> list:
    """Cut an arc into equal sectors of span below a half-turn, for printing."""
    if arc.full:
        lo, span, lo_closed, hi_closed = Fraction(0), Fraction(2), True, False
    else:
        lo, span, lo_closed, hi_closed = arc.lo, arc.span, arc.lo_closed, arc.hi_closed
    if span < 1:
        return [arc]
    k = int(span) + 1
    cuts = [circ_add(lo, span * i / k) for i in range(k + 1)]
    return [
        Arc(cuts[i], cuts[i + 1], lo_closed if i == 0 else True, False if i < k - 1 else hi_closed)
        for i in range(k)
    ]


EMPTY = Relation((), (False,), False)
UNIVERSAL = Relation((), (True,), True)
EQ_ONLY = Relation((), (False,), True)
NONEQUAL = Relation((), (True,), False)


def rel_from_basic(lo: Angle, lo_closed: bool, hi: Angle, hi_closed: bool,
                   eq: Optional[bool] = None) -> Relation:
    """One basic sector ``<lo, hi>`` anticlockwise from ``lo``.

    ``eq`` defaults to true exactly for closed-closed sectors, whose cone
    contains its own vertex.
    """
    lo, hi = Fraction(lo) % 2, Fraction(hi) % 2
    if lo == hi and not (lo_closed and hi_closed):
        warnings.warn(f"degenerate sector at {format_angle(lo)} is empty", stacklevel=2)
        return EQ_ONLY if eq else EMPTY
    span = circ_sub(hi, lo)
    if span >= 1:
        raise MalformedBasicConstraint(
            f"sector {format_angle(lo)}..{format_angle(hi)} spans {span}pi; "
            "a basic sector must span less than pi"
        )
    if eq is None:
        eq = lo_closed and hi_closed
    return Relation.from_arcs([Arc(lo, hi, lo_closed, hi_closed)], eq)


def ray(a: Angle, eq: bool = False) -> Relation:
    a = Fraction(a) % 2
    return Relation((a,), (True, False), eq)


def _combine(r: Relation, s: Relation, op) -> Relation:
    pts = set(r.breaks) | set(s.breaks)
    return Relation._from_predicate(
        pts, lambda g: op(r.contains_angle(g), s.contains_angle(g)), op(r.eq, s.eq)
    )


def rel_union(r: Relation, s: Relation) -> Relation:
    return _combine(r, s, lambda a, b: a or b)


def complement(r: Relation) -> Relation:
    return Relation(r.breaks, tuple(not m for m in r.marks), not r.eq)


def converse(r: Relation) -> Relation:
    if not r.breaks:
        return r
    shifted = sorted(range(len(r.breaks)), key=lambda k: add_pi(r.breaks[k]))
    breaks = tuple(add_pi(r.breaks[k]) for k in shifted)
    marks = tuple(m for k in shifted for m in (r.marks[2 * k], r.marks[2 * k + 1]))
    return Relation(breaks, marks, r.eq)


def intersect_basic(r: Arc, s: Arc) -> Optional[Arc]:
    """Intersection of two basic arcs by endpoint selection; None if empty.

    Each bound of the result is whichever bound of ``r`` is anticlockwise
    inside ``s``, else the matching bound of ``s``.  Emptiness is decided by
    probing the selected arc, not by the acwi test alone: identical open arcs
    have no endpoint inside each other, and arcs touching at an endpoint
    closed in one and open in the other share nothing.
    """
    lo, lo_c = (r.lo, r.lo_closed) if acwi(r.lo, s) else (s.lo, s.lo_closed)
    hi, hi_c = (r.hi, r.hi_closed) if acwi(r.hi, s) else (s.hi, s.hi_closed)
    if lo == hi and not (lo_c and hi_c):
        return None
    out = Arc(lo, hi, lo_c, hi_c)
    probe = lo if lo == hi else circ_add(lo, out.span / 2)
    if not (r.contains(probe) and s.contains(probe)):
        return None
    return out


@lru_cache(maxsize=1 << 16)
def intersect(r: Relation, s: Relation) -> Relation:
    eq = r.eq and s.eq
    if r.full_circle:
        return Relation(s.breaks, s.marks, eq)
    if s.full_circle:
        return Relation(r.breaks, r.marks, eq)
    pieces = []
    wide = False
    for a, b in product(r.arcs(), s.arcs()):
        if a.is_basic and b.is_basic:
            c = intersect_basic(a, b)
            if c is not None:
                pieces.append(c)
        else:
            wide = True
    if wide:
        # wide arcs can meet in two pieces; fall back to the partition sweep
        return _combine(r, s, lambda x, y: x and y)
    return Relation.from_arcs(pieces, eq)


def member(x: Sequence[float], y: Sequence[float], r: Relation,
           eps: float = EPS_MEM, eps_point: float = 0.0) -> bool:
    """Whether the concrete pair ``(x, y)`` satisfies ``r``."""
    dx = x[0] - y[0]
    dy = x[1] - y[1]
    if math.hypot(dx, dy) <= eps_point:
        return r.eq
    return r.contains_direction(from_radians_float(math.atan2(dy, dx)), eps)


def member_many(xs, ys, r: Relation, eps: float = EPS_MEM, eps_point: float = 0.0):
    """Vectorized :func:`member` over rows of two ``(m, 2)`` arrays."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    d = xs - ys
    theta = np.mod(np.arctan2(d[:, 1], d[:, 0]) / math.pi, 2.0)
    same = np.hypot(d[:, 0], d[:, 1]) <= eps_point
    if not r.breaks:
        inside = np.full(len(theta), bool(r.marks[0]))
    else:
        fb = np.array([float(b) for b in r.breaks])
        marks = np.array(r.marks, dtype=bool)
        k = np.searchsorted(fb, theta, side="left")
        inside = marks[2 * k - 1]
        dist = np.abs(theta[:, None] - fb[None, :])
        dist = np.minimum(dist, 2.0 - dist)
        near = dist <= eps
        hit = near.any(axis=1)
        inside = np.where(hit, marks[2 * np.argmax(near, axis=1)], inside)
    return np.where(same, r.eq, inside)


# -- shape predicates ------------------------------------------------------------


def line_axis(r: Relation) -> Optional[Angle]:
    """Axis in ``[0, 1)`` if ``r`` is a full line through the vertex."""
    if r.eq and len(r.breaks) == 2 and r.marks == (True, False, True, False):
        if circ_sub(r.breaks[1], r.breaks[0]) == 1:
            return r.breaks[0] % 1
    return None


def single_arc(r: Relation) -> Optional[Arc]:
    arcs = r.arcs()
    return arcs[0] if len(arcs) == 1 else None


def is_convex(r: Relation) -> bool:
    """Whether, for fixed ``y``, the admitted ``x`` form a convex set."""
    if r.is_empty or r.is_eq_only or r.is_universal or line_axis(r) is not None:
        return True
    arc = single_arc(r)
    if arc is None or arc.span > 1:
        return False
    if arc.span == 1 and arc.lo_closed and arc.hi_closed:
        return r.eq
    return True


def is_basic(r: Relation) -> bool:
    """Whether ``r`` is one conjunction of (strict or weak) half-plane inequalities."""
    if r.is_empty or r.is_eq_only or r.is_universal or line_axis(r) is not None:
        return True
    arc = single_arc(r)
    if arc is None or arc.span > 1:
        return False
    closed = arc.lo_closed and arc.hi_closed
    if arc.span == 1:
        return (closed and r.eq) or (not arc.lo_closed and not arc.hi_closed and not r.eq)
    return closed or not r.eq


# -- half-plane atom calculi -----------------------------------------------------


class Atom(enum.IntEnum):
    LOHP = 0
    NHL = 1
    EQA = 2
    PHL = 3
    ROHP = 4

    def __str__(self) -> str:
        return self.name.lower() if self is not Atom.EQA else "EQ"


LCHP = frozenset({Atom.LOHP, Atom.NHL, Atom.EQA, Atom.PHL})
RCHP = frozenset({Atom.NHL, Atom.EQA, Atom.PHL, Atom.ROHP})
LINE = frozenset({Atom.NHL, Atom.EQA, Atom.PHL})


@dataclass(frozen=True)
class HalfPlaneAtom:
    axis: Angle
    kind: Atom

    def __post_init__(self):
        if not 0 <= self.axis < 1:
            raise ValueError(f"atom axis must lie in [0, pi), got {self.axis}")


@dataclass(frozen=True)
class AtomSet:
    axis: Angle
    members: frozenset

    def __post_init__(self):
        if not 0 <= self.axis < 1:
            raise ValueError(f"atom axis must lie in [0, pi), got {self.axis}")

    def __str__(self) -> str:
        a = format_angle(self.axis)
        for name, ms in (("lchp", LCHP), ("rchp", RCHP), ("?", LINE)):
            if self.members == ms:
                return f"{name}_{a}"
        return "{" + ",".join(f"{m}_{a}" for m in sorted(self.members)) + "}"


@lru_cache(maxsize=None)
def atom_relation(kind: Atom, axis: Angle) -> Relation:
    """Point-pair set of a single atom of the calculus on ``axis``."""
    back = add_pi(axis)
    if kind is Atom.EQA:
        return EQ_ONLY
    if kind is Atom.PHL:
        return ray(axis)
    if kind is Atom.NHL:
        return ray(back)
    if kind is Atom.LOHP:
        return Relation.from_arcs([Arc(axis, back, False, False)])
    return Relation.from_arcs([Arc(back, axis, False, False)])


def atomset_relation(s: AtomSet) -> Relation:
    out = EMPTY
    for m in s.members:
        out = rel_union(out, atom_relation(m, s.axis))
    return out


# Composition table of CAL_alpha x CAL_beta atoms.  Entries are symbolic:
# ("lohp", "a") is lohp on axis alpha, ("cap", X, Y) an intersection,
# ("top",) the universal relation and ("line", "a") the full line ?_alpha.
_L, _N, _P, _R = Atom.LOHP, Atom.NHL, Atom.PHL, Atom.ROHP
TOP = ("top",)


def _three(lt, eq, gt):
    return lambda a, b: lt if a < b else (eq if a == b else gt)


_CT = {
    "ct0": _three(TOP, ("lohp", "a"), TOP),
    "ct1": _three(TOP, ("lohp", "b"), ("lohp", "b")),
    "ct2": _three(("lohp", "a"), ("lohp", "a"), TOP),
    "ct3": _three(("lohp", "b"), ("lohp", "b"), TOP),
    "ct4": _three(("cap", ("rohp", "a"), ("lohp", "b")), ("nhl", "a"),
                  ("cap", ("lohp", "a"), ("rohp", "b"))),
    "ct5": _three(("cap", ("lohp", "a"), ("lohp", "b")), ("line", "a"),
                  ("cap", ("rohp", "a"), ("rohp", "b"))),
    "ct6": _three(TOP, ("rohp", "b"), ("rohp", "b")),
    "ct7": _three(("cap", ("rohp", "a"), ("rohp", "b")), ("line", "a"),
                  ("cap", ("lohp", "a"), ("lohp", "b"))),
    "ct8": _three(("cap", ("lohp", "a"), ("rohp", "b")), ("phl", "a"),
                  ("cap", ("rohp", "a"), ("lohp", "b"))),
    "ct9": _three(("rohp", "b"), ("phl", "a"), TOP),
    # geometric repairs of two cells, see CT_GRID
    "ct1'": _three(TOP, ("lohp", "a"), ("lohp", "a")),
    "ct9'": _three(("rohp", "b"), ("rohp", "b"), TOP),
    "cta": _three(("rohp", "a"), ("rohp", "a"), TOP),
    "ctb": _three(TOP, ("rohp", "a"), ("rohp", "a")),
    "ctc": _three(TOP, ("rohp", "a"), TOP),
    "top": lambda a, b: TOP,
}

# the unrepaired table; two of its cells are unsound
UNREPAIRED_CT_GRID = {
    (_L, _L): "ct0", (_L, _N): "ct1", (_L, _P): "ct2", (_L, _R): "top",
    (_N, _L): "ct3", (_N, _N): "ct4", (_N, _P): "ct5", (_N, _R): "ct6",
    (_P, _L): "ct1", (_P, _N): "ct7", (_P, _P): "ct8", (_P, _R): "ct9",
    (_R, _L): "top", (_R, _N): "cta", (_R, _P): "ctb", (_R, _R): "ctc",
}

# what composition uses: lohp_a o nhl_b adds a vector pointing left of a
# when a > b, so it stays in lohp_a (not lohp_b); phl_a o rohp_a shifts a
# right half-plane along its own axis, giving rohp_a (not phl_a)
CT_GRID = {**UNREPAIRED_CT_GRID, (_L, _N): "ct1'", (_P, _R): "ct9'"}

_KIND = {"lohp": Atom.LOHP, "rohp": Atom.ROHP, "phl": Atom.PHL, "nhl": Atom.NHL}


def atom_compose_symbolic(a: Atom, b: Atom, alpha: Angle, beta: Angle, grid: dict = CT_GRID):
    """Table entry for ``a_alpha o b_beta`` in symbolic form.

    Pass ``grid=UNREPAIRED_CT_GRID`` for the table without the two repairs.
    """
    if a is Atom.EQA:
        return (str(b).lower(), "b") if b is not Atom.EQA else ("eq",)
    if b is Atom.EQA:
        return (str(a).lower(), "a")
    return _CT[grid[a, b]](alpha, beta)


def materialize(entry, alpha: Angle, beta: Angle) -> Relation:
    tag = entry[0]
    if tag == "top":
        return UNIVERSAL
    if tag == "eq":
        return EQ_ONLY
    if tag == "cap":
        return intersect(materialize(entry[1], alpha, beta), materialize(entry[2], alpha, beta))
    axis = alpha if entry[1] == "a" else beta
    if tag == "line":
        return Relation.from_arcs([Arc(axis, axis), Arc(add_pi(axis), add_pi(axis))], True)
    return atom_relation(_KIND[tag], axis)


@lru_cache(maxsize=None)
def atom_compose(a: HalfPlaneAtom, b: HalfPlaneAtom) -> Relation:
    entry = atom_compose_symbolic(a.kind, b.kind, a.axis, b.axis)
    return materialize(entry, a.axis, b.axis)


@lru_cache(maxsize=1 << 16)
def atomset_compose(s: AtomSet, t: AtomSet) -> Relation:
    out = EMPTY
    for m, n in product(sorted(s.members), sorted(t.members)):
        out = rel_union(out, atom_compose(HalfPlaneAtom(s.axis, m), HalfPlaneAtom(t.axis, n)))
        if out.is_universal:
            break
    return out


def _bound(a: Angle, closed: bool, lower: bool) -> AtomSet:
    # the lower bound keeps what is left of its ray, the upper what is right
    left = lower == (a < 1)
    if left:
        members = LCHP if closed else frozenset({Atom.LOHP})
    else:
        members = RCHP if closed else frozenset({Atom.ROHP})
    return AtomSet(a % 1, members)


def basic_to_halfplanes(arc: Arc) -> tuple[AtomSet, AtomSet]:
    """Split a basic sector into a pair of half-plane atom sets."""
    if not arc.is_basic:
        raise MalformedBasicConstraint(f"{arc} is not a basic sector")
    return _bound(arc.lo, arc.lo_closed, True), _bound(arc.hi, arc.hi_closed, False)


def _sides(arc: Arc) -> tuple[AtomSet, ...]:
    """Atom sets whose intersection covers ``arc`` (span at most a half-turn).

    Any set holding a half-line atom also holds EQ; this only adds the
    vertex, which composition drops again when it is not reachable.
    """
    span = arc.span
    if span == 0:
        kind = Atom.PHL if arc.lo < 1 else Atom.NHL
        return (AtomSet(arc.lo % 1, frozenset({kind, Atom.EQA})),)
    if span < 1:
        return basic_to_halfplanes(arc)
    upper = arc.lo < 1
    members = {Atom.LOHP if upper else Atom.ROHP}
    if arc.lo_closed:
        members.add(Atom.PHL if upper else Atom.NHL)
    if arc.hi_closed:
        members.add(Atom.NHL if upper else Atom.PHL)
    if len(members) > 1:
        members.add(Atom.EQA)
    return (AtomSet(arc.lo % 1, frozenset(members)),)


def _components(r: Relation) -> Optional[list]:
    """Convex pieces of ``r``'s arcs as atom-set sides; None for a full circle."""
    out = []
    for arc in r.arcs():
        if arc.full:
            return None
        if arc.span <= 1:
            out.append(_sides(arc))
        else:
            # two overlapping half-planes, split on the endpoints' antipodes
            out.append(_sides(Arc(arc.lo, add_pi(arc.lo), arc.lo_closed, True)))
            out.append(_sides(Arc(add_pi(arc.hi), arc.hi, True, arc.hi_closed)))
    return out


@lru_cache(maxsize=1 << 16)
def _compose_sides(p: tuple, q: tuple) -> Relation:
    out = UNIVERSAL
    for s, t in product(p, q):
        out = intersect(out, atomset_compose(s, t))
        if out.is_empty:
            break
    return out


@lru_cache(maxsize=1 << 16)
def compose(r: Relation, s: Relation) -> Relation:
    """Over-approximation of ``{(x, z) : r(x, y) and s(y, z)}``.

    The vertex flag is dropped when ``x = z`` is unreachable (no direction of
    ``r`` is opposite to one of ``s``), unless that would make a convex
    result non-convex.
    """
    if r.is_empty or s.is_empty:
        return EMPTY
    out = EMPTY
    if r.eq:
        out = rel_union(out, s)
    if s.eq:
        out = rel_union(out, r)
    if r.has_arcs and s.has_arcs:
        pr, ps = _components(r), _components(s)
        if pr is None or ps is None:
            return UNIVERSAL
        for p, q in product(pr, ps):
            out = rel_union(out, _compose_sides(p, q))
            if out.full_circle:
                break
    eq = not intersect(r, converse(s)).is_empty
    tight = Relation(out.breaks, out.marks, eq)
    if out.eq and not eq and is_convex(out) and not is_convex(tight):
        # dropping the vertex would punch a hole in a convex result
        return out
    return tight
