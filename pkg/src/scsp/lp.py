"""Linear-inequality form of basic networks and a dense Simplex feasibility test.

A basic label ``r(x_i, x_j)`` becomes half-plane conditions on ``d = x_i - x_j``
of the form ``cross(u_a, d) > 0`` (``d`` strictly left of direction ``a``),
where ``cross(u, d) = cos(a)*dy - sin(a)*dx``.  Strict rows share a single
slack ``t`` that the Simplex maximizes; the system is strictly feasible iff
the optimum is positive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .angle import Angle, circ_add, unit_vector
from .relations import Relation, is_basic, line_axis, single_arc


class NotABSP(ValueError):
    pass


@dataclass(frozen=True)
class LPConfig:
    eps_pivot: float = 1e-9
    eps_strict: float = 1e-7
    eps_lp: float = 1e-6
    box: float = 1e6
    max_iter: int = 20000

    @property
    def eps_strict_out(self) -> float:
        return self.eps_strict / 2


@dataclass
class LinearInequality:
    """``sum(coefficients[v] * v) <= bound``, or ``<`` when strict."""

    coefficients: dict
    bound: float = 0.0
    strict: bool = False

    def lhs(self, values: dict) -> float:
        return sum(c * values.get(v, 0.0) for v, c in self.coefficients.items())

    def __str__(self) -> str:
        terms = " + ".join(f"{c:.17g}*{v}" for v, c in sorted(self.coefficients.items()))
        line = f"{terms or '0'} <= {self.bound:.17g}"
        return line + ("  # strict" if self.strict else "")


@dataclass
class LinearSystem:
    n: int
    inequalities: list = field(default_factory=list)
    pinned: dict = field(default_factory=lambda: {"x0": 0.0, "y0": 0.0})

    @property
    def unknowns(self) -> list:
        return [f"{c}{i}" for i in range(self.n) for c in "xy"]

    def dump(self) -> str:
        lines = [f"# {len(self.inequalities)} inequalities over {2 * self.n} unknowns, x0 = y0 = 0"]
        lines += [str(q) for q in self.inequalities]
        return "\n".join(lines)


class Status(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    NUMERICALLY_ILL = "numerically-ill"


@dataclass
class FeasibilityResult:
    status: Status
    witness: Optional[dict] = None
    slack: float = 0.0

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE


# -- translation ---------------------------------------------------------------------


def _row(i: int, j: int, ax: float, ay: float, strict: bool) -> LinearInequality:
    """``ax*dx + ay*dy <= 0`` (or ``< 0``) with ``d = p_i - p_j``."""
    coeffs = {}
    for name, c in ((f"x{i}", ax), (f"x{j}", -ax), (f"y{i}", ay), (f"y{j}", -ay)):
        if c != 0.0:
            coeffs[name] = coeffs.get(name, 0.0) + c
    return LinearInequality(coeffs, 0.0, strict)


def left_of(i: int, j: int, a: Angle, strict: bool) -> LinearInequality:
    """``cross(u_a, d) >= 0``; ``> 0`` if strict."""
    c, s = unit_vector(a)
    return _row(i, j, s, -c, strict)


def right_of(i: int, j: int, a: Angle, strict: bool) -> LinearInequality:
    c, s = unit_vector(a)
    return _row(i, j, -s, c, strict)


def ahead_of(i: int, j: int, a: Angle, strict: bool) -> LinearInequality:
    """``dot(u_a, d) >= 0``; ``> 0`` if strict."""
    c, s = unit_vector(a)
    return _row(i, j, -c, -s, strict)


def translate_edge(i: int, j: int, label: Relation) -> list:
    if label.is_universal:
        return []
    if label.is_empty:
        raise NotABSP("empty label has no translation")
    if not is_basic(label):
        raise NotABSP(f"label {label} is disjunctive; refine it first")
    if label.is_eq_only:
        return [_row(i, j, 1.0, 0.0, False), _row(i, j, -1.0, 0.0, False),
                _row(i, j, 0.0, 1.0, False), _row(i, j, 0.0, -1.0, False)]
    axis = line_axis(label)
    if axis is not None:
        return [left_of(i, j, axis, False), right_of(i, j, axis, False)]
    arc = single_arc(label)
    if arc.is_ray:
        return [left_of(i, j, arc.lo, False), right_of(i, j, arc.lo, False),
                ahead_of(i, j, arc.lo, not label.eq)]
    rows = [left_of(i, j, arc.lo, not arc.lo_closed)]
    if arc.span == 1:
        return rows
    rows.append(right_of(i, j, arc.hi, not arc.hi_closed))
    if arc.lo_closed and arc.hi_closed and not label.eq:
        # closed cone without its apex
        rows.append(ahead_of(i, j, circ_add(arc.lo, arc.span / 2), True))
    return rows


def translate_bsp(net) -> LinearSystem:
    sys = LinearSystem(net.n)
    for i, j in net.edges():
        label = net.matrix[i][j]
        if label.is_empty:
            raise NotABSP(f"edge ({i},{j}) is empty")
        if not is_basic(label):
            raise NotABSP(f"edge ({i},{j}) = {label} is not basic")
        sys.inequalities += translate_edge(i, j, label)
    return sys


# -- simplex ---------------------------------------------------------------------------


class _Ill(Exception):
    pass


def _pivot(T: np.ndarray, r: int, c: int) -> None:
    T[r] /= T[r, c]
    col = T[:, c].copy()
    col[r] = 0.0
    T -= np.outer(col, T[r])


def _run(T: np.ndarray, basis: list, allowed: int, cfg: LPConfig) -> bool:
    """Maximize over columns ``< allowed`` with Bland's rule; False if unbounded."""
    m = T.shape[0] - 1
    for _ in range(cfg.max_iter):
        obj = T[-1, :allowed]
        entering = next((j for j in range(allowed) if obj[j] < -cfg.eps_pivot), None)
        if entering is None:
            return True
        best = None
        for i in range(m):
            a = T[i, entering]
            if a > cfg.eps_pivot:
                ratio = T[i, -1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return False
        r = best[1]
        _pivot(T, r, entering)
        basis[r] = entering
    raise _Ill("iteration limit")


def _solve(A: np.ndarray, b: np.ndarray, c: np.ndarray, cfg: LPConfig):
    """max c.v s.t. A v <= b, v >= 0.  Returns (v, value) or None if infeasible."""
    m, nv = A.shape
    neg = b < 0
    n_art = int(neg.sum())
    width = nv + m + n_art
    T = np.zeros((m + 1, width + 1))
    basis = []
    art = nv + m
    for i in range(m):
        sign = -1.0 if neg[i] else 1.0
        T[i, :nv] = sign * A[i]
        T[i, nv + i] = sign
        T[i, -1] = sign * b[i]
        if neg[i]:
            T[i, art] = 1.0
            basis.append(art)
            art += 1
        else:
            basis.append(nv + i)
    if n_art:
        T[-1, nv + m:width] = 1.0
        for i in range(m):
            if basis[i] >= nv + m:
                T[-1] -= T[i]
        _run(T, basis, width, cfg)
        infeas = -T[-1, -1]
        if infeas > cfg.eps_lp:
            if infeas < 1e3 * cfg.eps_lp:
                raise _Ill(f"phase one ended at {infeas:.3g}")
            return None
        for i in range(m):
            if basis[i] >= nv + m:
                c_in = next((j for j in range(nv + m) if abs(T[i, j]) > cfg.eps_pivot), None)
                if c_in is not None:
                    _pivot(T, i, c_in)
                    basis[i] = c_in
        T = np.delete(T, np.s_[nv + m:width], axis=1)
    T[-1] = 0.0
    T[-1, :nv] = -c
    for i in range(m):
        if basis[i] < nv and c[basis[i]] != 0.0:
            T[-1] -= T[-1, basis[i]] * T[i]
    if not _run(T, basis, nv + m, cfg):
        raise _Ill("unbounded objective")
    v = np.zeros(nv + m + 1)
    for i, bi in enumerate(basis):
        if bi < nv + m:
            v[bi] = T[i, -1]
    return v[:nv], float(c @ v[:nv])


def simplex_feasible(sys: LinearSystem, cfg: LPConfig = LPConfig()) -> FeasibilityResult:
    names = [u for u in sys.unknowns if u not in sys.pinned]
    col = {u: k for k, u in enumerate(names)}
    k = len(names)
    nv = 2 * k + 1  # p, q, t
    rows, rhs = [], []
    for q in sys.inequalities:
        row = np.zeros(nv)
        bound = q.bound
        for v, coef in q.coefficients.items():
            if v in sys.pinned:
                bound -= coef * sys.pinned[v]
            elif v in col:
                row[col[v]] += coef
                row[k + col[v]] -= coef
            else:
                raise ValueError(f"unknown variable {v}")
        if q.strict:
            row[-1] = 1.0
        rows.append(row)
        rhs.append(bound)
    for u in range(k):
        for sign in (1.0, -1.0):
            row = np.zeros(nv)
            row[u], row[k + u] = sign, -sign
            rows.append(row)
            rhs.append(cfg.box)
    row = np.zeros(nv)
    row[-1] = 1.0
    rows.append(row)
    rhs.append(1.0)
    objective = np.zeros(nv)
    objective[-1] = 1.0
    try:
        out = _solve(np.array(rows), np.array(rhs), objective, cfg)
    except _Ill:
        return FeasibilityResult(Status.NUMERICALLY_ILL)
    if out is None:
        return FeasibilityResult(Status.INFEASIBLE)
    v, t = out
    has_strict = any(q.strict for q in sys.inequalities)
    if has_strict and t <= cfg.eps_strict:
        return FeasibilityResult(Status.INFEASIBLE, slack=t)
    values = dict(sys.pinned)
    for u, kk in col.items():
        values[u] = float(v[kk] - v[k + kk])
    for q in sys.inequalities:
        lhs = q.lhs(values)
        limit = q.bound - cfg.eps_strict_out if q.strict else q.bound + cfg.eps_lp
        if lhs > limit:
            return FeasibilityResult(Status.NUMERICALLY_ILL, slack=t)
    return FeasibilityResult(Status.FEASIBLE, values, t)


def witness_points(result: FeasibilityResult, n: int) -> list:
    w = result.witness
    return [(w[f"x{i}"], w[f"y{i}"]) for i in range(n)]
