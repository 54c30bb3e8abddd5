"""Plain-text instance format.

::

    # comments run to end of line
    vars a b c
    a b : [0, 1/2pi) | (pi, 5/4pi] | eq
    c   : cone:N | proj:NE          # unary, i.e. "c origin : ..."
    a c : ?

A relation literal is a ``|``-separated disjunction of sectors
``[lo, hi]`` (any bracket mix), ``eq``, ``?``, ``{}`` (nothing),
``ray:<angle>`` (a ray without its vertex), ``cone:<dir>`` or
``proj:<dir>``.  Sectors run anticlockwise from ``lo`` and must span less
than a half-turn; a closed-closed sector also admits ``x = y``.
Repeating a constraint on the same pair intersects the labels.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass

from .angle import AngleSyntaxError, parse_angle
from .cardinal import SYMBOLS, to_relation
from .network import ORIGIN, InconsistentNetwork, SCSPNetwork
from .relations import (
    EMPTY,
    EQ_ONLY,
    UNIVERSAL,
    MalformedBasicConstraint,
    Relation,
    ray,
    rel_from_basic,
    rel_union,
)

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_SECTOR = re.compile(r"([\[(])([^,\[\]()]*),([^,\[\]()]*)([\])])")


class ParseError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.message = message


@dataclass
class Instance:
    network: SCSPNetwork
    constraints: list  # (i, j, relation) as written, for re-verification

    @property
    def names(self) -> list:
        return self.network.names


def parse_relation(text: str, line: int = 1, col: int = 1) -> Relation:
    """Parse a relation literal; ``col`` is where ``text`` starts on its line."""
    out = EMPTY
    pos = 0
    for term in text.split("|"):
        lead = len(term) - len(term.lstrip())
        at = col + pos + lead
        out = rel_union(out, _parse_term(term.strip(), line, at))
        pos += len(term) + 1
    return out


def _parse_term(term: str, line: int, col: int) -> Relation:
    if not term:
        raise ParseError(line, col, "empty disjunct")
    if term == "eq":
        return EQ_ONLY
    if term == "?":
        return UNIVERSAL
    if term == "{}":
        return EMPTY
    if ":" in term:
        calculus, _, symbol = term.partition(":")
        calculus, symbol = calculus.strip(), symbol.strip()
        if calculus == "ray":
            try:
                return ray(parse_angle(symbol))
            except AngleSyntaxError as e:
                raise ParseError(line, col + len(calculus) + 1, str(e)) from None
        if calculus not in ("cone", "proj"):
            raise ParseError(line, col, f"unknown tag {calculus!r}; use cone, proj or ray")
        if symbol not in SYMBOLS:
            raise ParseError(line, col, f"unknown direction {symbol!r}; expected one of {' '.join(SYMBOLS)}")
        return to_relation(symbol, calculus)
    m = _SECTOR.fullmatch(term)
    if m is None:
        raise ParseError(line, col, f"cannot read disjunct {term!r}")
    try:
        lo = parse_angle(m.group(2))
    except AngleSyntaxError as e:
        raise ParseError(line, col + m.start(2), str(e)) from None
    try:
        hi = parse_angle(m.group(3))
    except AngleSyntaxError as e:
        raise ParseError(line, col + m.start(3), str(e)) from None
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return rel_from_basic(lo, m.group(1) == "[", hi, m.group(4) == "]")
    except MalformedBasicConstraint as e:
        raise ParseError(line, col, f"{e} (basic sectors need hi - lo in [0, pi))") from None


def _strip_comment(raw: str) -> str:
    k = raw.find("#")
    return raw if k < 0 else raw[:k]


def parse_instance(text: str) -> Instance:
    names = [ORIGIN]
    pending = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        stripped = body.lstrip()
        indent = len(body) - len(stripped)
        if stripped.startswith("vars") and (len(stripped) == 4 or stripped[4].isspace()):
            offset = indent + 4
            for tok in re.finditer(r"\S+", stripped[4:]):
                name = tok.group()
                c = offset + tok.start() + 1
                if not _NAME.fullmatch(name):
                    raise ParseError(lineno, c, f"bad variable name {name!r}")
                if name in names:
                    raise ParseError(lineno, c, f"variable {name!r} declared twice")
                names.append(name)
            continue
        if ":" not in body:
            raise ParseError(lineno, indent + 1, "expected 'vars ...' or '<x> [<y>] : <relation>'")
        head, _, rel_text = body.partition(":")
        vars_ = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", head)]
        if len(vars_) not in (1, 2):
            raise ParseError(lineno, indent + 1, "a constraint names one or two variables")
        rel = parse_relation(rel_text, lineno, len(head) + 2)
        pending.append((lineno, vars_, rel))
    net = SCSPNetwork(len(names), names)
    written = []
    for lineno, vars_, rel in pending:
        idx = []
        for name, c in vars_:
            if name not in names:
                raise ParseError(lineno, c, f"unknown variable {name!r}")
            idx.append(names.index(name))
        i, j = idx if len(idx) == 2 else (idx[0], 0)
        if len(idx) == 1 and i == 0:
            raise ParseError(lineno, vars_[0][1], "unary constraint on the origin")
        written.append((i, j, rel))
        try:
            net.add_constraint(i, j, rel)
        except InconsistentNetwork:
            # kept as a flag; the solver reports it
            pass
    return Instance(net, written)
