"""Random instances with known ground truth, for tests and experiments."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .angle import circ_add
from .network import SCSPNetwork
from .relations import (
    EQ_ONLY,
    UNIVERSAL,
    Arc,
    Relation,
    rel_from_basic,
    rel_union,
)


@dataclass(frozen=True)
class PlacementConfig:
    n: int = 6                 # variables including the origin
    density: float = 0.7       # chance that a pair gets a label
    grid: int = 24             # angles are multiples of pi/grid
    widen: tuple = (1, 3)      # extra grid steps on each side of the true direction
    decoys: float = 0.3        # chance of an extra disjunct on a label
    coincide: float = 0.0      # chance a point copies an earlier one
    box: int = 20


@dataclass
class Placement:
    points: list
    network: SCSPNetwork
    labels: dict = field(default_factory=dict)


def _direction(p, q) -> float:
    """Direction of ``p - q`` in half-turns, in ``[0, 2)``."""
    return (math.atan2(p[1] - q[1], p[0] - q[0]) / math.pi) % 2.0


def sector_around(theta: float, rng: random.Random, grid: int, widen: tuple) -> Relation:
    """Basic sector with endpoints on the ``pi/grid`` lattice strictly containing ``theta``."""
    step = Fraction(1, grid)
    base = Fraction(math.floor(theta * grid), grid)
    lo = base - step * rng.randint(*widen)
    hi = base + step * (1 + rng.randint(*widen))
    # keep the span below a half-turn
    while hi - lo >= 1:
        hi -= step
        if hi - lo >= 1:
            lo += step
    # theta may sit exactly on the lattice point base
    lo_closed = lo == base or rng.random() < 0.5
    return rel_from_basic(lo % 2, lo_closed, hi % 2, rng.random() < 0.5)


def random_sector(rng: random.Random, grid: int, max_steps: Optional[int] = None) -> Relation:
    max_steps = grid - 1 if max_steps is None else min(max_steps, grid - 1)
    lo = Fraction(rng.randrange(2 * grid), grid)
    k = rng.randint(0, max_steps)
    closed = (rng.random() < 0.5, rng.random() < 0.5)
    if k == 0:
        closed = (True, True)
    return rel_from_basic(lo, closed[0], circ_add(lo, Fraction(k, grid)), closed[1])


def random_placement(cfg: PlacementConfig, rng: random.Random) -> Placement:
    """Points with integer coordinates and labels admitting them.

    Each labelled pair gets a basic sector around its true direction, or
    ``eq`` when the points coincide, optionally joined with a random decoy.
    """
    pts = [(0, 0)]
    for _ in range(cfg.n - 1):
        if len(pts) > 1 and rng.random() < cfg.coincide:
            pts.append(rng.choice(pts))
        else:
            pts.append((rng.randint(-cfg.box, cfg.box), rng.randint(-cfg.box, cfg.box)))
    net = SCSPNetwork(cfg.n)
    labels = {}
    for i, j in net.edges():
        if rng.random() >= cfg.density:
            continue
        if pts[i] == pts[j]:
            label = EQ_ONLY
        else:
            label = sector_around(_direction(pts[i], pts[j]), rng, cfg.grid, cfg.widen)
        if rng.random() < cfg.decoys:
            label = rel_union(label, random_sector(rng, cfg.grid))
        labels[i, j] = label
        net.add_constraint(i, j, label)
    return Placement(pts, net, labels)


def random_bsp(n: int, rng: random.Random, grid: int = 12, density: float = 0.5,
               eq_rate: float = 0.05) -> SCSPNetwork:
    """Basic labels on random pairs; consistency is not controlled."""
    net = SCSPNetwork(n)
    for i, j in net.edges():
        if rng.random() >= density:
            continue
        label = EQ_ONLY if rng.random() < eq_rate else random_sector(rng, grid)
        net.add_constraint(i, j, label)
    return net


def placement_bsp(n: int, rng: random.Random, grid: int = 12, density: float = 1.0) -> tuple:
    """Satisfiable basic network over a fixed angle lattice, with its placement."""
    cfg = PlacementConfig(n=n, density=density, grid=grid, widen=(0, 2), decoys=0.0)
    p = random_placement(cfg, rng)
    return p.network, p.points


def random_relation(rng: random.Random, grid: int = 24, max_terms: int = 3) -> Relation:
    """Union of random sectors (any width below a half-turn), maybe with ``eq``."""
    out = Relation.from_arcs([])
    for _ in range(rng.randint(1, max_terms)):
        out = rel_union(out, random_sector(rng, grid))
    if rng.random() < 0.3:
        out = rel_union(out, EQ_ONLY)
    if rng.random() < 0.05:
        out = UNIVERSAL
    return out


def random_arc(rng: random.Random, grid: int = 24) -> Arc:
    lo = Fraction(rng.randrange(2 * grid), grid)
    k = rng.randint(1, grid - 1)
    return Arc(lo, circ_add(lo, Fraction(k, grid)), rng.random() < 0.5, rng.random() < 0.5)


__all__ = [
    "PlacementConfig",
    "Placement",
    "random_placement",
    "random_bsp",
    "placement_bsp",
    "random_relation",
    "random_sector",
    "sector_around",
]
