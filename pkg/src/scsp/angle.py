"""Exact circular angle arithmetic.

Angles are :class:`fractions.Fraction` values counting half-turns, so the
value ``v`` stands for ``v*pi`` radians.  Every operation normalizes into
``[0, 2)`` and never rounds.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Angle = Fraction
AngleLike = Union[Fraction, int, str]

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)
TWO = Fraction(2)


def angle(value: AngleLike) -> Angle:
    """Build a normalized angle from a Fraction, int or ``"p/q"`` string."""
    return Fraction(value) % 2


def from_degrees(degrees: Union[int, str, Fraction]) -> Angle:
    # Fraction("22.5") is exact, float input would not be
    return Fraction(degrees) / 180 % 2


def circ_sub(b: Angle, a: Angle) -> Angle:
    """Anticlockwise distance from ``a`` to ``b``, in ``[0, 2)``."""
    return (b - a) % 2


def circ_add(a: Angle, b: Angle) -> Angle:
    return (a + b) % 2


def add_pi(a: Angle) -> Angle:
    return (a + 1) % 2


def is_basic_span(span: Angle) -> bool:
    return 0 <= span < 1


def acwi(g: Angle, arc) -> bool:
    """True iff ``g`` lies anticlockwise-inside ``arc``.

    ``arc`` needs ``lo``, ``hi``, ``lo_closed`` and ``hi_closed``.  The third
    clause compares the span with an ordinary (non-modular) sum of the two
    partial spans, so ``g`` outside the arc yields a sum of at least 2.
    """
    if g == arc.lo:
        return arc.lo_closed
    if g == arc.hi:
        return arc.hi_closed
    return circ_sub(arc.hi, arc.lo) == circ_sub(g, arc.lo) + circ_sub(arc.hi, g)


def to_radians_float(a: Angle) -> float:
    return float(a) * math.pi


def from_radians_float(theta: float) -> float:
    """Float direction in half-turns, in ``[0, 2)``."""
    v = (theta / math.pi) % 2.0
    return 0.0 if v >= 2.0 else v


def unit_vector(a: Angle) -> tuple[float, float]:
    # exact values on the axes keep LP coefficients clean
    quarter = a * 2
    if quarter.denominator == 1:
        return [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)][int(quarter)]
    t = to_radians_float(a)
    return math.cos(t), math.sin(t)


_ANGLE_RE = re.compile(
    r"""^\s*(?:
        (?P<deg>[+-]?\d+(?:\.\d+)?)\s*deg
      | (?P<num>[+-]?\d+)?\s*(?:/\s*(?P<den>\d+))?\s*pi
      | (?P<zero>0)
    )\s*$""",
    re.VERBOSE,
)


class AngleSyntaxError(ValueError):
    pass


def parse_angle(text: str) -> Angle:
    """Parse ``3/4pi``, ``pi``, ``2pi``, ``45deg``, ``22.5deg`` or ``0``."""
    m = _ANGLE_RE.match(text)
    if m is None:
        raise AngleSyntaxError(f"malformed angle {text.strip()!r}")
    if m.group("deg") is not None:
        return from_degrees(m.group("deg"))
    if m.group("zero") is not None:
        return ZERO
    num = int(m.group("num")) if m.group("num") else 1
    den = int(m.group("den")) if m.group("den") else 1
    if den == 0:
        raise AngleSyntaxError(f"zero denominator in {text.strip()!r}")
    return Fraction(num, den) % 2


def format_angle(a: Angle) -> str:
    if a == 0:
        return "0"
    if a == 1:
        return "pi"
    if a.denominator == 1:
        return f"{a.numerator}pi"
    return f"{a.numerator}/{a.denominator}pi"
