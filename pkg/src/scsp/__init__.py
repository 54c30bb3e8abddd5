"""Directional constraint networks over planar points.

Relations are unions of angular sectors plus an equality flag; networks are
filtered by path consistency and decided by search with a Simplex test at
basic leaves.
"""

from .angle import Angle, add_pi, circ_add, circ_sub, parse_angle
from .network import SCSPNetwork, path_consistency
from .relations import (
    EMPTY,
    EQ_ONLY,
    UNIVERSAL,
    Relation,
    compose,
    converse,
    intersect,
    member,
    rel_from_basic,
    rel_union,
)
from .solver import SearchConfig, Verdict, solve
from .syntax import parse_instance

__all__ = [
    "Angle", "add_pi", "circ_add", "circ_sub", "parse_angle",
    "SCSPNetwork", "path_consistency",
    "EMPTY", "EQ_ONLY", "UNIVERSAL", "Relation", "compose", "converse",
    "intersect", "member", "rel_from_basic", "rel_union",
    "SearchConfig", "Verdict", "solve", "parse_instance",
]
