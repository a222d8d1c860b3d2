"""End-to-end acceptance checks, one test per criterion.

The pytest terminal summary prints one PASS/FAIL line per criterion (see
``conftest.py``).
"""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from shiftcolor import ColoredGraph, Update, depth_budget
from shiftcolor.adversary import gen_layered_instance, gen_separation_instance, recourse_floor
from shiftcolor.engines import (
    EngineConfig,
    choose_b,
    delete_edge,
    golden_gap,
    insert_edge,
    low_arboricity_path_bound,
    min_feasible_c,
)
from shiftcolor.harness import WorkloadSpec, gen_workload, run_workload
from shiftcolor.oracle import Exact, min_recourse, min_shift_recourse
from shiftcolor.shift_tree import descendants_sum_bound, descendants_tight_tree

import small_graphs


def _depth_from_beta(n: int, extra: int, b: int) -> int:
    """Independent evaluation of floor(log_beta n) + 1 by repeated
    multiplication rather than the library routine."""
    beta = Fraction(extra + 1, b)
    k, power = 0, beta
    while power <= n:
        k += 1
        power *= beta
    return k + 1


@pytest.fixture(scope="module")
def large_palette_run():
    delta, extra = 20, min_feasible_c(20)
    cfg = EngineConfig("large-palette", delta, extra)
    ops = gen_workload(WorkloadSpec(1000, delta, 10**5), 2024)
    start = time.monotonic()
    metrics = run_workload(cfg, ops, 1000, verify_every=1000)
    return cfg, metrics, time.monotonic() - start


def test_c1_propriety_fuzz(criterion, large_palette_run):
    criterion(1, "large-palette propriety fuzz, 1e5 ops")
    cfg, metrics, elapsed = large_palette_run
    criterion.note(f"C={cfg.extra} b={cfg.copy_threshold()} violations={metrics.violations} {elapsed:.1f}s")
    assert cfg.extra == 14 and cfg.copy_threshold() == choose_b(20, 14) == 11
    assert len(metrics.records) == 10**5
    assert metrics.violations == 0
    assert elapsed < 120


def test_c2_large_palette_recourse_bound(criterion, large_palette_run):
    criterion(2, "large-palette per-op recourse bound")
    cfg, metrics, _ = large_palette_run
    b = int(cfg.copy_threshold())
    bound = 2 * _depth_from_beta(1000, cfg.extra, b) + 1
    worst = max(r.recolored for r in metrics.records)
    over = sum(1 for r in metrics.records if r.recolored > bound)
    criterion.note(f"max {worst} <= {bound}")
    assert bound == 2 * depth_budget(1000, cfg.extra, b) + 1
    assert over == 0


def test_c3_delta_minus_two(criterion):
    criterion(3, "delta-2 engine, delta 4..7")
    notes = []
    for delta in (4, 5, 6, 7):
        cfg = EngineConfig("delta-minus-2", delta, delta - 2)
        ops = gen_workload(WorkloadSpec(2000, delta, 30000), delta)
        m = run_workload(cfg, ops, 2000, verify_every=3000)
        bound = 2 * _depth_from_beta(2000, delta - 2, 2)
        worst = m.aggregates()["max_recourse"]
        notes.append(f"{delta}:{worst}<={bound}")
        assert m.violations == 0
        assert worst <= bound
    criterion.note(" ".join(notes))


def test_c4_forest_path_length(criterion):
    criterion(4, "handler-free engine on forests")
    cfg = EngineConfig("no-handler", 4, 2, alpha=1, epsilon=1.0)
    notes = []
    for n in (10**3, 10**4, 10**5):
        ops = gen_workload(WorkloadSpec(n, 4, n - 1, model="forest"), n)
        m = run_workload(cfg, ops, n, verify_every=n // 4)
        worst = m.aggregates()["max_path_len"]
        notes.append(f"n={n}:{worst}<={math.log2(n) + 3:.1f}")
        assert m.violations == 0
        assert worst <= math.log2(n) + 3
    criterion.note(" ".join(notes))


def test_c5_adaptive_local_palette(criterion):
    criterion(5, "adaptive local palette with deletions")
    n, extra = 400, 2
    cfg = EngineConfig("no-handler", 4, extra, alpha=1, epsilon=1.0, adaptive=True)
    insert_bound = low_arboricity_path_bound(n, extra, 1)
    ops = gen_workload(WorkloadSpec(n, 4, 20000, model="forest", delete_prob=0.35), 5)
    g = ColoredGraph(n, 4, extra)
    worst_delete = 0
    deletes = 0
    for op in ops:
        if op.kind == "insert":
            insert_edge(cfg, g, op.u, op.v)
        else:
            rep = delete_edge(cfg, g, op.u, op.v)
            worst_delete = max(worst_delete, rep.recolored)
            deletes += 1
        for a, b, c in g.edges():
            assert c <= max(g.degree(a), g.degree(b)) + extra
    assert g.verify_proper() == []
    criterion.note(f"{deletes} deletions, max recolored {worst_delete} <= {2 + 2 * insert_bound}")
    assert deletes > 1000
    assert worst_delete <= 2 + 2 * insert_bound


def _layered_at_depth(depth: int):
    sizes = gen_layered_instance(10**5, 4, 1, 1).layer_sizes
    inst = gen_layered_instance(sum(sizes[: depth + 1]), 4, 1, 1)
    assert inst.depth == depth
    return inst


def test_c6_lower_bound_floor(criterion):
    criterion(6, "layered lower-bound floor")
    cfg = EngineConfig("no-handler", 4, 1)
    notes = []
    start = time.monotonic()
    for depth in (3, 6):
        inst = _layered_at_depth(depth)
        floor = depth // 3
        assert recourse_floor(inst) == floor
        best = min_recourse(inst.graph)
        assert isinstance(best, Exact) and best.value >= floor
        g = inst.graph.copy()
        g.delete_edge(*inst.uncolored)
        m = run_workload(cfg, [Update("insert", *inst.uncolored)], g.n, verify_every=1, check_recourse=True, graph=g)
        measured = m.records[0].recolored
        notes.append(f"L={depth} m={inst.graph.m}: oracle {best.value} engine {measured} floor {floor}")
        assert measured >= floor
    assert time.monotonic() - start < 600
    criterion.note("; ".join(notes))


def test_c7_separation_gap(criterion):
    criterion(7, "separation gap on a path")
    inst = gen_separation_instance(204, 3, 0, 1)
    general = min_recourse(inst.graph)
    shift = min_shift_recourse(inst.graph)
    criterion.note(f"k={inst.k}: general {general}, shift {shift}")
    assert general == Exact(2)
    assert shift == Exact(50)


def test_c8_feasibility_formulas(criterion):
    criterion(8, "feasibility closed forms")
    assert min_feasible_c(7) == 5
    # independent vectorized evaluation of the real threshold
    d = np.arange(3, 10**6 + 1, dtype=np.float64)
    phi = (1 + np.sqrt(5.0)) / 2
    c = (np.sqrt(5 * d * d + 2 * d - 7) - (d - 1)) / 2
    gap = c - d / phi
    criterion.note(f"gap in [{gap.min():.4f}, {gap.max():.4f}]")
    assert gap.min() > 0.462 and gap.max() < 0.724
    for delta in (3, 10, 1000, 10**6):
        assert golden_gap(delta) == pytest.approx(gap[delta - 3], abs=1e-9)


def test_c9_descendants_sum(criterion):
    criterion(9, "descendants-sum inequality")
    rng = random.Random(9)
    for _ in range(1000):
        size = rng.randint(1, 60)
        children: list[list[int]] = [[] for _ in range(size)]
        for i in range(1, size):
            children[rng.randrange(i)].append(i)
        chosen = rng.sample(range(size), rng.randint(0, size))
        d = rng.choice((1, 2, 3))
        total, bound = descendants_sum_bound(children, d, chosen)
        assert total <= bound
    tree, chosen = descendants_tight_tree(4, 2)
    total, bound = descendants_sum_bound(tree, 2, chosen)
    criterion.note(f"witness {total} = {bound}")
    assert total == bound == 8


def test_c10_exhaustive_small_graphs(criterion):
    criterion(10, "exhaustive small graphs vs oracle")
    start = time.monotonic()
    notes = []
    failures = []
    for cfg, hosts in small_graphs.suite():
        stats = small_graphs.SearchStats()
        for host in hosts:
            small_graphs.explore(cfg, host, stats)
        failures += stats.failures
        notes.append(f"{cfg.kind.value}({cfg.delta},{cfg.extra}{',adaptive' if cfg.adaptive else ''}):{stats.states}")
    elapsed = time.monotonic() - start
    criterion.note(f"{elapsed:.0f}s states " + " ".join(notes))
    assert failures == []
    assert elapsed < 300
