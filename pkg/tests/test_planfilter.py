"""Plan distance, similarity filtering, hypervolume and threshold sweeps."""

import itertools
import math

import numpy as np
import pytest

from planrank.datasets import generate_dataset
from planrank.errors import DomainError, ValidationError
from planrank.planfilter import (
    DEFAULT_FILTER_WEIGHTS,
    FilterWeights,
    MissionPlan,
    filter_plans,
    hypervolume,
    normalized_objective_points,
    plan_distance,
    sweep_grid,
    threshold_sweep,
)


def fig3_pair():
    """Two plans differing by one dropped task assignment and two path profiles."""
    base = dict(
        task_uavs={"T1": frozenset({"U1"}), "T2": frozenset({"U1"}), "T3": frozenset({"U2"}),
                   "T4": frozenset({"U1", "U2"}), "T5": frozenset({"U3"})},
        orders={("T1", "U1"): 1, ("T2", "U1"): 2, ("T3", "U2"): 1, ("T4", "U2"): 2, ("T5", "U3"): 1},
        gcs_assign={"U1": "G1", "U2": "G1", "U3": "G2"},
        path_profiles={("T1", "U1"): "min", ("T2", "U1"): "min", ("T3", "U2"): "min",
                       ("T4", "U2"): "min", ("T5", "U3"): "max"},
        return_profiles={"U1": "min", "U2": "min", "U3": "min"},
        sensors={("T1", "U1"): "mR", ("T2", "U1"): "sR", ("T3", "U2"): "iR",
                 ("T4", "U2"): "eiS", ("T5", "U3"): "mR"},
    )
    s1 = MissionPlan(id="s1", **base)
    changed = dict(base)
    changed["task_uavs"] = dict(base["task_uavs"], T4=frozenset({"U2"}))
    changed["path_profiles"] = dict(base["path_profiles"])
    changed["path_profiles"][("T2", "U1")] = "max"
    changed["path_profiles"][("T4", "U2")] = "max"
    s2 = MissionPlan(id="s2", **changed)
    return s1, s2


class TestMissionPlan:
    def test_rejects_stray_pair_keys(self):
        with pytest.raises(ValidationError, match="orders"):
            MissionPlan(id="p", task_uavs={"T1": frozenset({"U1"})},
                        orders={("T2", "U1"): 1})

    def test_assignment_pairs(self):
        p = MissionPlan(id="p", task_uavs={"T1": frozenset({"U1", "U2"})})
        assert p.assignment_pairs() == {("T1", "U1"), ("T1", "U2")}


class TestFilterWeights:
    def test_defaults_match_expert_values(self):
        w = DEFAULT_FILTER_WEIGHTS
        assert (w.w_uav, w.w_order, w.w_gcs, w.w_path, w.w_return, w.w_sensor) == \
            (1.0, 0.6, 0.2, 0.1, 0.1, 0.1)

    def test_rejects_negative_or_all_zero(self):
        with pytest.raises(ValidationError):
            FilterWeights(w_uav=-1.0)
        with pytest.raises(ValidationError):
            FilterWeights(0, 0, 0, 0, 0, 0)


class TestPlanDistance:
    def test_dropped_assignment_plus_two_profiles(self):
        s1, s2 = fig3_pair()
        assert plan_distance(s1, s2, DEFAULT_FILTER_WEIGHTS) == pytest.approx(1.2)
        assert plan_distance(s2, s1, DEFAULT_FILTER_WEIGHTS) == pytest.approx(1.2)

    def test_identical_plans_zero(self):
        s1, _ = fig3_pair()
        assert plan_distance(s1, s1, DEFAULT_FILTER_WEIGHTS) == 0.0

    def test_single_gcs_difference(self):
        s1, _ = fig3_pair()
        moved = MissionPlan(id="m", task_uavs=s1.task_uavs, orders=s1.orders,
                            gcs_assign=dict(s1.gcs_assign, U3="G1"),
                            path_profiles=s1.path_profiles,
                            return_profiles=s1.return_profiles, sensors=s1.sensors)
        assert plan_distance(s1, moved, DEFAULT_FILTER_WEIGHTS) == pytest.approx(0.2)

    def test_pseudometric_on_generated_plans(self):
        plans = generate_dataset((5, 1, 3, 2, 8), seed=13, dataset_id="x").plans
        for a, b in itertools.combinations(plans, 2):
            dab = plan_distance(a, b)
            assert dab == plan_distance(b, a)
            assert dab >= 0.0
        for a, b, c in itertools.permutations(plans[:6], 3):
            assert plan_distance(a, c) <= plan_distance(a, b) + plan_distance(b, c) + 1e-9


def sensor_plans():
    """Three plans over a shared 20-pair universe with distances 0.5 / 2 / 2."""
    tasks = {f"T{i}": frozenset({"U1"}) for i in range(20)}
    pairs = [(f"T{i}", "U1") for i in range(20)]

    def plan(pid, sensor_of):
        return MissionPlan(id=pid, task_uavs=tasks,
                           sensors={k: sensor_of(i) for i, k in enumerate(pairs)})

    p1 = plan("p1", lambda i: "mR")
    p2 = plan("p2", lambda i: "sR" if i < 5 else "mR")
    p3 = plan("p3", lambda i: "iR")
    return p1, p2, p3


class TestFilterPlans:
    def test_zero_threshold_keeps_distinct(self):
        p1, p2, p3 = sensor_plans()
        kept = filter_plans([p1, p2, p3], DEFAULT_FILTER_WEIGHTS, 0.0)
        assert [p.id for p in kept] == ["p1", "p2", "p3"]
        # Exact duplicate is removed even at threshold 0.
        dup = MissionPlan(id="dup", task_uavs=p1.task_uavs, sensors=p1.sensors)
        kept = filter_plans([p1, dup], DEFAULT_FILTER_WEIGHTS, 0.0)
        assert [p.id for p in kept] == ["p1"]

    def test_huge_threshold_keeps_only_best(self):
        p1, p2, p3 = sensor_plans()
        kept = filter_plans([p1, p2, p3], DEFAULT_FILTER_WEIGHTS, 100.0)
        assert [p.id for p in kept] == ["p1"]

    def test_greedy_sweep_hand_case(self):
        p1, p2, p3 = sensor_plans()
        assert plan_distance(p1, p2) == pytest.approx(0.5)
        assert plan_distance(p1, p3) == pytest.approx(2.0)
        assert plan_distance(p2, p3) == pytest.approx(2.0)
        kept = filter_plans([p1, p2, p3], DEFAULT_FILTER_WEIGHTS, 1.0)
        assert [p.id for p in kept] == ["p1", "p3"]

    def test_kept_set_is_threshold_separated(self):
        plans = list(generate_dataset((6, 1, 4, 2, 12), seed=3, dataset_id="x").plans)
        kept = filter_plans(plans, DEFAULT_FILTER_WEIGHTS, 1.0)
        assert kept[0] is plans[0]
        for a, b in itertools.combinations(kept, 2):
            assert plan_distance(a, b) > 1.0


class TestHypervolume:
    def test_single_box(self):
        assert hypervolume([(0.5, 0.5)], (1, 1)) == pytest.approx(0.25)

    def test_two_overlapping_boxes(self):
        assert hypervolume([(0.2, 0.8), (0.8, 0.2)], (1, 1)) == pytest.approx(0.28)

    def test_dominated_and_duplicate_points_ignored(self):
        base = hypervolume([(0.2, 0.8), (0.8, 0.2)], (1, 1))
        assert hypervolume([(0.2, 0.8), (0.8, 0.2), (0.9, 0.9), (0.2, 0.8)], (1, 1)) == \
            pytest.approx(base)

    def test_point_at_reference_contributes_nothing(self):
        assert hypervolume([(1.0, 1.0), (0.5, 0.5)], (1, 1)) == pytest.approx(0.25)

    def test_non_dominating_point_rejected(self):
        with pytest.raises(DomainError, match="dominate"):
            hypervolume([(1.5, 0.5)], (1, 1))

    def test_monotone_in_points(self):
        rng = np.random.default_rng(5)
        pts = [tuple(p) for p in rng.uniform(0, 1, size=(12, 3))]
        ref = (1.0, 1.0, 1.0)
        hv = 0.0
        for k in range(1, len(pts) + 1):
            nxt = hypervolume(pts[:k], ref)
            assert nxt >= hv - 1e-12
            hv = nxt

    def test_against_monte_carlo(self):
        rng = np.random.default_rng(11)
        for _ in range(3):
            pts = rng.uniform(0.0, 0.9, size=(8, 3))
            ref = np.ones(3)
            exact = hypervolume([tuple(p) for p in pts], tuple(ref))
            lo = pts.min(axis=0)
            samples = rng.uniform(lo, ref, size=(100_000, 3))
            dominated = np.zeros(len(samples), dtype=bool)
            for p in pts:
                dominated |= np.all(samples >= p, axis=1)
            box = float(np.prod(ref - lo))
            frac = dominated.mean()
            estimate = box * frac
            sigma = box * math.sqrt(max(frac * (1 - frac), 1e-12) / len(samples))
            assert abs(exact - estimate) <= 3 * sigma + 1e-9


class TestThresholdSweep:
    def test_grid_helper(self):
        grid = sweep_grid(0, 5, 0.1)
        assert len(grid) == 51
        assert grid[0] == 0.0 and grid[-1] == 5.0

    def test_zero_threshold_row_matches_unfiltered(self):
        plans = list(generate_dataset((6, 1, 3, 1, 10), seed=7, dataset_id="x").plans)
        res = threshold_sweep(plans, DEFAULT_FILTER_WEIGHTS, [0.0])
        row = res.rows[0]
        assert row.kept == len(filter_plans(plans, DEFAULT_FILTER_WEIGHTS, 0.0))
        pts, dropped = normalized_objective_points(plans, sorted(plans[0].criteria))
        dims = len(next(iter(pts.values())))
        full = hypervolume([pts[p.id] for p in filter_plans(plans, DEFAULT_FILTER_WEIGHTS, 0.0)],
                           tuple([1.0] * dims))
        assert row.hypervolume == pytest.approx(full)

    def test_beyond_max_distance_keeps_one(self):
        plans = list(generate_dataset((6, 1, 3, 1, 10), seed=7, dataset_id="x").plans)
        res = threshold_sweep(plans, DEFAULT_FILTER_WEIGHTS, [500.0])
        assert res.rows[0].kept == 1

    def test_monotone_over_ascending_grid(self):
        for seed in (1, 2, 3):
            plans = list(generate_dataset((8, 2, 5, 2, 15), seed=seed, dataset_id="x").plans)
            res = threshold_sweep(plans, DEFAULT_FILTER_WEIGHTS, sweep_grid(0, 5, 0.25))
            kept = [r.kept for r in res.rows]
            hv = [r.hypervolume for r in res.rows]
            assert all(a >= b for a, b in zip(kept, kept[1:]))
            assert all(a >= b - 1e-12 for a, b in zip(hv, hv[1:]))

    def test_empty_grid_rejected(self):
        plans = list(generate_dataset((6, 1, 3, 1, 5), seed=7, dataset_id="x").plans)
        with pytest.raises(DomainError):
            threshold_sweep(plans, DEFAULT_FILTER_WEIGHTS, [])

    def test_explicit_reference_point(self):
        plans = list(generate_dataset((6, 1, 3, 1, 5), seed=9, dataset_id="x").plans)
        ids = sorted(plans[0].criteria)
        ref = [max(p.criteria[c] for p in plans) + 1.0 for c in ids]
        res = threshold_sweep(plans, DEFAULT_FILTER_WEIGHTS, [0.0], ref=ref, criterion_ids=ids)
        assert res.rows[0].hypervolume > 0
        assert res.metadata["normalization"] == "none"
