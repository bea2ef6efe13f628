"""Acceptance suite: one criterion per test, one printed PASS/FAIL line each.

Run `pytest tests/test_acceptance.py -v -s` to see the lines as they pass.
Everything is seeded; no test depends on wall-clock randomness. The two
large synthetic instances (30,000 and 10,000 games) are built once per
module and shared.
"""

import math
import time

import numpy as np
import pytest

from streakprob import (
    ProbabilitySequence,
    ScenarioSpec,
    StreakQuery,
    UniformInterval,
    enumerate_streak_probability,
    generate_scenario,
    inbetween_no_streak_curve,
    merge_draws,
    nonlosing_streak_probability,
    pure_no_streak_curve,
    simulate,
    streak_grid,
)
from streakprob import _kernels
from helpers import constant_sequence, random_draw_free, random_sequence

SWEEP_SEED = 20260809
PURE_SCEN_SEED = 1001
BETWEEN_SCEN_SEED = 1002

# anchor rows: (k values, expected streak probabilities)
TABLE1_ROWS = ((88, 94, 103, 115, 127), (0.9069, 0.7735, 0.5203, 0.2502, 0.1068))
TABLE2_ROWS = ((42, 45, 49, 54, 60), (0.9091, 0.7625, 0.5146, 0.2621, 0.1008))
FIG1_ANCHORS = ((50, 75, 100, 125, 150), (1.0, 0.999, 0.605, 0.124, 0.019))
FIG2_ANCHORS = ((15, 25, 35, 45, 55), (1.0, 1.0, 1.0, 0.763, 0.225))


def record(num, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
    assert ok, f"criterion {num}: {detail}"


@pytest.fixture(scope="module")
def pure_scenario():
    spec = ScenarioSpec(n=30_000, seed=PURE_SCEN_SEED, win=UniformInterval(0.85, 1.0))
    return generate_scenario(spec)


@pytest.fixture(scope="module")
def between_scenario():
    spec = ScenarioSpec(n=10_000, seed=BETWEEN_SCEN_SEED,
                        draw=UniformInterval(0.0, 0.2), loss=UniformInterval(0.0, 0.15))
    return generate_scenario(spec)


@pytest.fixture(scope="module")
def pure_grid_timed(pure_scenario):
    _kernels.warm_up()
    start = time.perf_counter()
    grid = streak_grid(pure_scenario, "pure", 150)
    return grid, time.perf_counter() - start


@pytest.fixture(scope="module")
def between_grid_timed(between_scenario):
    _kernels.warm_up()
    start = time.perf_counter()
    grid = streak_grid(between_scenario, "inbetween", 60)
    return grid, time.perf_counter() - start


def test_criterion_01_pure_oracle_equivalence():
    gen = np.random.default_rng(SWEEP_SEED)
    worst = 0.0
    for _ in range(200):
        n = int(gen.integers(1, 13))
        seq = random_draw_free(gen, n)
        for k in range(1, n + 1):
            exact = pure_no_streak_curve(seq, k).streak_probability
            truth = enumerate_streak_probability(seq, StreakQuery("pure", k))
            worst = max(worst, abs(exact - truth))
    record(1, worst <= 1e-12,
           f"pure DP vs enumeration over 200 sequences, max |diff| = {worst:.2e} (tol 1e-12)")


def test_criterion_02_nonlosing_oracle_equivalence():
    gen = np.random.default_rng(SWEEP_SEED + 1)
    worst = 0.0
    for _ in range(200):
        n = int(gen.integers(1, 13))
        seq = random_sequence(gen, n, draw_cap=0.5)
        for k in range(1, n + 1):
            exact = nonlosing_streak_probability(seq, k)
            truth = enumerate_streak_probability(seq, StreakQuery("nonlosing", k))
            worst = max(worst, abs(exact - truth))
    record(2, worst <= 1e-12,
           f"non-losing DP vs enumeration over 200 sequences, max |diff| = {worst:.2e} (tol 1e-12)")


def test_criterion_03_inbetween_bound_and_gap():
    gen = np.random.default_rng(SWEEP_SEED + 2)
    violations = 0
    max_gap = 0.0
    for _ in range(200):
        n = int(gen.integers(3, 11))
        seq = random_sequence(gen, n, draw_cap=0.2)
        k = int(gen.integers(1, n))
        computed = inbetween_no_streak_curve(seq, k).value_at(n)
        truth = 1.0 - enumerate_streak_probability(seq, StreakQuery("inbetween", k))
        if computed < truth - 1e-12:
            violations += 1
        max_gap = max(max_gap, computed - truth)
    if max_gap > 5e-3:
        print(f"  note: max gap {max_gap:.3e} exceeds the 5e-3 soft alert threshold")
    record(3, violations == 0,
           f"in-between curve is an upper bound in 200/200 cases "
           f"({violations} violations); max observed gap = {max_gap:.3e} "
           f"(soft threshold 5e-3)")


def test_criterion_04_base_case_agreement():
    gen = np.random.default_rng(SWEEP_SEED + 3)
    worst_pure = 0.0
    worst_between = 0.0
    for _ in range(100):
        k = int(gen.integers(1, 11))
        n = k + 1 + int(gen.integers(0, 5))
        seq = random_sequence(gen, n, draw_cap=0.4)
        draw_free = random_draw_free(gen, n)
        # pure: value at prefix k must equal 1 - prod of win probabilities
        got = pure_no_streak_curve(draw_free, k).value_at(k)
        closed = 1.0 - math.prod(float(w) for w in draw_free.win[:k])
        worst_pure = max(worst_pure, abs(got - closed))
        # in-between: value at prefix k+1 must equal the first-window closed form
        got = inbetween_no_streak_curve(seq, k).value_at(k + 1)
        win = [float(w) for w in seq.win[: k + 1]]
        drw = [float(d) for d in seq.draw[: k + 1]]
        closed = 1.0 - math.prod(win)
        for i in range(k + 1):
            closed -= drw[i] * math.prod(win[:i] + win[i + 1:])
        worst_between = max(worst_between, abs(got - closed))
    ok = worst_pure <= 1e-15 and worst_between <= 1e-15
    record(4, ok,
           f"recurrence reproduces closed-form base cases over 100 instances: "
           f"pure max |diff| = {worst_pure:.2e}, in-between max |diff| = {worst_between:.2e} "
           f"(tol 1e-15)")


def test_criterion_05_single_product_anchor():
    seq = constant_sequence(61, 0.2, 0.0, 0.8)
    prob = pure_no_streak_curve(seq, 61).streak_probability
    rel = abs(prob - 1.2e-6) / 1.2e-6
    record(5, rel < 0.05,
           f"61 consecutive wins at 0.8 each: {prob:.4e} vs 1.2e-6 "
           f"(relative error {rel:.2%}, tol 5%)")


def test_criterion_06_table_reproduction(pure_grid_timed, between_grid_timed):
    grid1, _ = pure_grid_timed
    grid2, _ = between_grid_timed
    details = []
    worst = 0.0
    for (ks, expected), grid in ((TABLE1_ROWS, grid1), (TABLE2_ROWS, grid2)):
        for k, target in zip(ks, expected):
            got = grid.value_at(k)
            worst = max(worst, abs(got - target))
            details.append(f"k={k}: {got:.4f} vs {target:.4f}")
    record(6, worst <= 0.03,
           f"table rows reproduced within +-0.03 (max |diff| = {worst:.4f}); "
           + "; ".join(details))


def test_criterion_07_figure_anchors(pure_grid_timed, between_grid_timed):
    grid1, _ = pure_grid_timed
    grid2, _ = between_grid_timed
    worst = 0.0
    for (ks, expected), grid in ((FIG1_ANCHORS, grid1), (FIG2_ANCHORS, grid2)):
        for k, target in zip(ks, expected):
            worst = max(worst, abs(grid.value_at(k) - target))
    record(7, worst <= 0.05,
           f"figure anchor probabilities within +-0.05 (max |diff| = {worst:.4f})")


def test_criterion_08_exact_vs_monte_carlo(pure_scenario, between_scenario,
                                           pure_grid_timed, between_grid_timed):
    grid1, _ = pure_grid_timed
    grid2, _ = between_grid_timed
    reps = 10_000
    worst_ratio = 0.0
    rows = []
    cases = [(pure_scenario, "pure", grid1, TABLE1_ROWS[0]),
             (between_scenario, "inbetween", grid2, TABLE2_ROWS[0])]
    seed = SWEEP_SEED
    for seq, kind, grid, ks in cases:
        for k in ks:
            exact = grid.value_at(k)
            result = simulate(seq, StreakQuery(kind, k), reps=reps, seed=seed)
            seed += 1
            se = max(math.sqrt(exact * (1.0 - exact) / reps), 1e-12)
            ratio = abs(result.estimate - exact) / se
            worst_ratio = max(worst_ratio, ratio)
            rows.append(f"{kind} k={k}: exact {exact:.4f} est {result.estimate:.4f} "
                        f"({ratio:.1f} se)")
    record(8, worst_ratio <= 4.0,
           f"10 table rows at reps=10000, max |exact - estimate| = {worst_ratio:.2f} "
           f"standard errors (tol 4); " + "; ".join(rows))


def test_criterion_09_performance(pure_grid_timed, between_grid_timed):
    _, t_pure = pure_grid_timed
    _, t_between = between_grid_timed
    ok = t_pure <= 2.0 and t_between <= 2.0
    record(9, ok,
           f"pure grid 30000x150 in {t_pure:.3f}s, in-between grid 10000x60 in "
           f"{t_between:.3f}s (budget 2s each)")


def test_criterion_10_property_suites():
    gen = np.random.default_rng(SWEEP_SEED + 4)
    checks = []

    # monotonicity in m for every kind
    ok_m = True
    for _ in range(15):
        n = int(gen.integers(2, 80))
        seq = random_sequence(gen, n, draw_cap=0.2)
        k = int(gen.integers(1, n + 1))
        for curve in (inbetween_no_streak_curve(seq, k),
                      pure_no_streak_curve(merge_draws(seq), k)):
            if not np.all(np.diff(curve.values) <= 1e-12):
                ok_m = False
    checks.append(("monotone in m", ok_m))

    # monotonicity in k across grids
    ok_k = True
    for _ in range(6):
        n = int(gen.integers(10, 200))
        seq = random_sequence(gen, n, draw_cap=0.2, loss_scale=0.4)
        for kind in ("nonlosing", "inbetween"):
            grid = streak_grid(seq, kind, 15)
            if not np.all(np.diff(grid.values) <= 1e-12):
                ok_k = False
        seq2 = random_draw_free(gen, n)
        if not np.all(np.diff(streak_grid(seq2, "pure", 15).values) <= 1e-12):
            ok_k = False
    checks.append(("monotone in k", ok_k))

    # reduction consistency on draw-free sequences
    ok_red = True
    for _ in range(10):
        n = int(gen.integers(2, 60))
        seq = random_draw_free(gen, n)
        for k in range(1, min(n, 8)):
            a = inbetween_no_streak_curve(seq, k).values
            b = pure_no_streak_curve(seq, k + 1).values
            if np.max(np.abs(a - b)) > 1e-12:
                ok_red = False
    checks.append(("draw-free in-between(k) == pure(k+1)", ok_red))

    # merge_draws idempotence
    ok_merge = True
    for _ in range(10):
        seq = random_sequence(gen, int(gen.integers(1, 40)), draw_cap=0.6)
        once = merge_draws(seq)
        twice = merge_draws(once)
        if not (np.array_equal(once.loss, twice.loss)
                and np.array_equal(once.draw, twice.draw)
                and np.array_equal(once.win, twice.win)):
            ok_merge = False
    checks.append(("merge_draws idempotent", ok_merge))

    # MC determinism under varying parallelism: any partition of the
    # replicate range (the unit a parallel worker would own) gives the
    # same count, in any order
    seq = random_sequence(gen, 50, draw_cap=0.2)
    seed = np.uint64(123)
    kind_code, k = _kernels.KIND_INBETWEEN, 3
    full = int(_kernels.count_streak_replicates(
        seq.loss, seq.draw, seed, np.uint64(0), np.uint64(1000), kind_code, k))
    schedules = [
        [(0, 1000)],
        [(0, 250), (250, 500), (500, 750), (750, 1000)],
        [(750, 1000), (0, 250), (500, 750), (250, 500)],
        [(i * 100, (i + 1) * 100) for i in reversed(range(10))],
    ]
    ok_mc = all(
        sum(int(_kernels.count_streak_replicates(
            seq.loss, seq.draw, seed, np.uint64(lo), np.uint64(hi), kind_code, k))
            for lo, hi in schedule) == full
        for schedule in schedules)
    checks.append(("MC count independent of partitioning/order", ok_mc))

    failed = [name for name, ok in checks if not ok]
    record(10, not failed,
           "property suites: " + ", ".join(f"{name} ok" for name, _ in checks)
           if not failed else f"failed: {failed}")
