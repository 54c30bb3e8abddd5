import random
from fractions import Fraction as F

import numpy as np
import pytest

from scsp.cardinal import cone_to_relation, proj_to_relation
from scsp.generators import PlacementConfig, random_placement
from scsp.network import network_new
from scsp.relations import ray, rel_from_basic, rel_union
from scsp.solver import (
    PCVerdict,
    SearchConfig,
    Verdict,
    check_pc_only,
    solve,
    verify_witness,
)


def sector(lo, hi, lc=True, hc=True):
    return rel_from_basic(F(lo), lc, F(hi), hc)


def north_cycle():
    net = network_new(4)
    n = proj_to_relation("N")
    net.add_constraint(1, 2, n)
    net.add_constraint(2, 3, n)
    net.add_constraint(3, 1, n)
    return net


def test_strict_north_cycle():
    res = solve(north_cycle())
    assert res.status is Verdict.INCONSISTENT and res.witness is None
    assert check_pc_only(north_cycle())[0] is PCVerdict.INCONSISTENT


def test_empty_network():
    assert check_pc_only(network_new(3)) == (PCVerdict.SO_FAR, None)
    res = solve(network_new(3))
    assert res.consistent and len(res.witness) == 3


@pytest.mark.parametrize("seed", range(10))
def test_generated_six_points(seed):
    rng = random.Random(seed)
    p = random_placement(PlacementConfig(n=6, grid=12, widen=(1, 1), decoys=0.4), rng)
    res = solve(p.network)
    assert res.consistent
    assert verify_witness(p.network, res.witness)
    assert check_pc_only(p.network)[0] is PCVerdict.SO_FAR


def test_second_disjunct_forced(nprng):
    # a sits on the east axis, b strictly inside a thin sector above it, so
    # a - b points below the axis and only the second disjunct can hold
    net = network_new(3)
    net.add_constraint(1, 2, rel_union(sector(0, F(1, 4), True, False), sector(1, F(5, 4), False, False)))
    net.add_constraint(1, 0, ray(F(0)))
    net.add_constraint(2, 0, sector(F(1, 12), F(1, 6), True, False))
    res = solve(net)
    assert res.consistent and res.stats.nodes >= 2
    assert verify_witness(net, res.witness)
    (ax, ay), (bx, by) = res.witness[1], res.witness[2]
    assert 1 < (np.arctan2(ay - by, ax - bx) / np.pi) % 2 < 1.25
    # brute force: random placements never satisfy the first disjunct
    t = nprng.uniform(0, 10, 10**5)
    r = nprng.uniform(0, 10, 10**5)
    th = nprng.uniform(np.pi / 12, np.pi / 6, 10**5)
    d = np.stack([t - r * np.cos(th), -r * np.sin(th)], axis=1)
    first = (np.arctan2(d[:, 1], d[:, 0]) % (2 * np.pi)) < np.pi / 4
    second = ((np.arctan2(d[:, 1], d[:, 0]) % (2 * np.pi)) > np.pi) & \
        ((np.arctan2(d[:, 1], d[:, 0]) % (2 * np.pi)) < 1.25 * np.pi)
    assert not first.any() and second.any()


def test_step_limit_reports_limit():
    rng = random.Random(5)
    p = random_placement(PlacementConfig(n=8, decoys=1.0), rng)
    res = solve(p.network, SearchConfig(max_steps=0))
    assert res.status is Verdict.LIMIT


def test_time_limit_reports_limit():
    rng = random.Random(5)
    p = random_placement(PlacementConfig(n=8, decoys=1.0), rng)
    res = solve(p.network, SearchConfig(time_limit=0.0))
    assert res.status is Verdict.LIMIT


def test_negative_limits_rejected():
    with pytest.raises(ValueError):
        SearchConfig(max_steps=-1)
    with pytest.raises(ValueError):
        SearchConfig(time_limit=-0.5)


@pytest.mark.parametrize("seed", range(4))
def test_deterministic(seed):
    p = random_placement(PlacementConfig(n=7, decoys=0.6), random.Random(seed))
    cfg = SearchConfig(seed=seed, disjunct_order="shuffled")
    a, b = solve(p.network, cfg), solve(p.network, cfg)
    assert a.status == b.status and a.witness == b.witness and a.stats == b.stats


@pytest.mark.parametrize("seed", range(4))
def test_parallel_matches_sequential(seed):
    p = random_placement(PlacementConfig(n=6, decoys=0.8), random.Random(seed))
    seq = solve(p.network)
    par = solve(p.network, SearchConfig(parallel=3))
    assert seq.status == par.status and seq.witness == par.witness


def test_cone_triangle_inconsistent():
    net = network_new(3)
    net.add_constraint(1, 0, cone_to_relation("N"))
    net.add_constraint(2, 1, cone_to_relation("N"))
    net.add_constraint(2, 0, cone_to_relation("S"))
    assert solve(net).status is Verdict.INCONSISTENT


def test_original_network_untouched():
    net = north_cycle()
    before = [row[:] for row in net.matrix]
    solve(net)
    check_pc_only(net)
    assert net.matrix == before


def test_dump_lp_collects_leaf_systems():
    net = network_new(3)
    net.add_constraint(1, 0, sector(0, F(1, 4)))
    res = solve(net, dump_lp=True)
    assert res.consistent and len(res.leaf_systems) == 1
