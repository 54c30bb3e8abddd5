"""Frank's cone-shaped and projection-based cardinal directions as sector relations.

Boundary ownership is a convention chosen so each calculus partitions the
plane exactly:

* cone-shaped: the sector of direction ``d`` (centre ``c_d``, E = 0, N = pi/2,
  ...) is ``[c_d - pi/8, c_d + pi/8)``;
* projection-based: NE, NW, SW, SE are the open quadrants, N, E, S, W the
  axis rays without the reference point.

EQ is the equality relation in both.
"""

from __future__ import annotations

from fractions import Fraction

from .angle import circ_add
from .relations import (
    EMPTY,
    EQ_ONLY,
    Arc,
    Relation,
    compose,
    converse,
    intersect,
    ray,
    rel_union,
)

SYMBOLS = ("N", "NE", "E", "SE", "S", "SW", "W", "NW", "EQ")
CALCULI = ("cone", "proj")

_CENTRE = {
    "E": Fraction(0), "NE": Fraction(1, 4), "N": Fraction(1, 2), "NW": Fraction(3, 4),
    "W": Fraction(1), "SW": Fraction(5, 4), "S": Fraction(3, 2), "SE": Fraction(7, 4),
}

OPPOSITE = {
    "N": "S", "S": "N", "E": "W", "W": "E",
    "NE": "SW", "SW": "NE", "NW": "SE", "SE": "NW", "EQ": "EQ",
}


def _check(symbol: str) -> None:
    if symbol not in SYMBOLS:
        raise ValueError(f"unknown cardinal direction {symbol!r}")


def cone_to_relation(symbol: str) -> Relation:
    _check(symbol)
    if symbol == "EQ":
        return EQ_ONLY
    c = _CENTRE[symbol]
    eighth = Fraction(1, 8)
    return Relation.from_arcs([Arc(circ_add(c, -eighth), circ_add(c, eighth), True, False)])


def proj_to_relation(symbol: str) -> Relation:
    _check(symbol)
    if symbol == "EQ":
        return EQ_ONLY
    c = _CENTRE[symbol]
    if len(symbol) == 1:
        return ray(c)
    quarter = Fraction(1, 4)
    return Relation.from_arcs([Arc(circ_add(c, -quarter), circ_add(c, quarter), False, False)])


def to_relation(symbol: str, calculus: str) -> Relation:
    if calculus == "cone":
        return cone_to_relation(symbol)
    if calculus == "proj":
        return proj_to_relation(symbol)
    raise ValueError(f"unknown calculus {calculus!r}")


def abstract_to_atoms(r: Relation, calculus: str) -> tuple[frozenset, bool]:
    """Smallest atom set whose union contains ``r``, and whether it equals ``r``."""
    atoms = frozenset(s for s in SYMBOLS if not intersect(r, to_relation(s, calculus)).is_empty)
    union = EMPTY
    for s in atoms:
        union = rel_union(union, to_relation(s, calculus))
    return atoms, union == r


def format_atoms(atoms) -> str:
    if len(atoms) == len(SYMBOLS):
        return "*"
    return ",".join(s for s in SYMBOLS if s in atoms)


def derive_table(calculus: str) -> dict:
    """``table[a, b]`` abstracts ``compose(rel(a), rel(b))`` back to atoms."""
    rel = {s: to_relation(s, calculus) for s in SYMBOLS}
    return {
        (a, b): abstract_to_atoms(compose(rel[a], rel[b]), calculus)[0]
        for a in SYMBOLS for b in SYMBOLS
    }


def format_table(table: dict) -> str:
    cells = {k: format_atoms(v) for k, v in table.items()}
    width = max(4, max(len(c) for c in cells.values()))
    header = "o".ljust(4) + " ".join(s.ljust(width) for s in SYMBOLS)
    lines = [header.rstrip()]
    for a in SYMBOLS:
        row = a.ljust(4) + " ".join(cells[a, b].ljust(width) for b in SYMBOLS)
        lines.append(row.rstrip())
    return "\n".join(lines)


def converse_atom(symbol: str) -> str:
    return OPPOSITE[symbol]


def converse_atoms(atoms) -> frozenset:
    return frozenset(OPPOSITE[a] for a in atoms)


__all__ = [
    "SYMBOLS",
    "CALCULI",
    "cone_to_relation",
    "proj_to_relation",
    "to_relation",
    "abstract_to_atoms",
    "derive_table",
    "format_table",
    "converse_atom",
    "converse_atoms",
    "converse",
]
