from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from scsp.angle import (
    AngleSyntaxError,
    acwi,
    add_pi,
    circ_add,
    circ_sub,
    format_angle,
    from_degrees,
    parse_angle,
    to_radians_float,
)
from scsp.relations import Arc

angles = st.fractions(min_value=0, max_value=2, max_denominator=48).filter(lambda a: a < 2)


def test_circ_sub_examples():
    assert circ_sub(F(1, 2), F(0)) == F(1, 2)
    assert circ_sub(F(1, 4), F(7, 4)) == F(1, 2)
    assert circ_sub(F(3, 5), F(3, 5)) == 0


def test_circ_add_examples():
    assert circ_add(F(3, 2), F(3, 4)) == F(1, 4)
    assert circ_add(F(5, 7), F(0)) == F(5, 7)
    assert circ_add(F(1), F(1)) == 0


def test_add_pi_examples():
    assert add_pi(F(0)) == 1
    assert add_pi(F(3, 2)) == F(1, 2)


def test_acwi_examples():
    arc = Arc(F(0), F(1, 2), True, False)
    assert acwi(F(1, 4), arc)
    assert acwi(F(0), arc)
    assert not acwi(F(1, 2), arc)


def test_to_radians():
    assert to_radians_float(F(0)) == 0.0
    assert to_radians_float(F(1)) == 3.141592653589793
    assert to_radians_float(F(1, 2)) == 1.5707963267948966


@pytest.mark.parametrize("text,value", [
    ("3/4pi", F(3, 4)), ("pi", F(1)), ("2pi", F(0)), ("0", F(0)),
    ("45deg", F(1, 4)), ("22.5deg", F(1, 8)), ("-1/2pi", F(3, 2)), (" 5/4pi ", F(5, 4)),
])
def test_parse_angle(text, value):
    assert parse_angle(text) == value


@pytest.mark.parametrize("text", ["", "pie", "1/0pi", "3/4", "deg", "1.5pi"])
def test_parse_angle_rejects(text):
    with pytest.raises(AngleSyntaxError):
        parse_angle(text)


def test_degrees_exact():
    assert from_degrees("0.1") == F(1, 1800)


@given(angles)
def test_format_roundtrip(a):
    assert parse_angle(format_angle(a)) == a


@given(angles, angles)
def test_sub_inverts_add(a, b):
    assert circ_sub(circ_add(a, b), b) == a


@given(angles)
def test_add_pi_involution(a):
    assert add_pi(add_pi(a)) == a
    assert 0 <= add_pi(a) < 2


@given(angles, st.fractions(min_value=0, max_value=1, max_denominator=24).filter(lambda s: 0 < s < 1),
       st.fractions(min_value=0, max_value=1, max_denominator=24).filter(lambda t: 0 < t < 1),
       st.booleans(), st.booleans())
def test_acwi_strict_interior(lo, span, t, lc, hc):
    arc = Arc(lo, circ_add(lo, span), lc, hc)
    assert acwi(circ_add(lo, t * span), arc)


@given(angles, st.fractions(min_value=0, max_value=2, max_denominator=24).filter(lambda s: 0 < s < 2),
       st.fractions(min_value=0, max_value=2, max_denominator=24), st.booleans(), st.booleans())
def test_acwi_outside(lo, span, s, lc, hc):
    if not 0 < s < 2 - span:
        return
    arc = Arc(lo, circ_add(lo, span), lc, hc)
    assert not acwi(circ_sub(lo, s), arc)
