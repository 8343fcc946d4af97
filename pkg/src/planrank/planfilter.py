"""Mission plans, assignment similarity, threshold filtering and hypervolume.

A plan's similarity to another is a weighted count of differing assignment
entries across six variable families (task-to-UAV, order, GCS, path profile,
return profile, sensor).  Filtering keeps a ranked plan only when it is
farther than a threshold from every better-ranked kept plan.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ValidationError

PairKey = tuple[str, str]  # (task id, uav id)


@dataclass(frozen=True)
class MissionPlan:
    id: str
    task_uavs: Mapping[str, frozenset[str]]
    orders: Mapping[PairKey, int] = field(default_factory=dict)
    gcs_assign: Mapping[str, str] = field(default_factory=dict)
    path_profiles: Mapping[PairKey, str] = field(default_factory=dict)
    return_profiles: Mapping[str, str] = field(default_factory=dict)
    sensors: Mapping[PairKey, str] = field(default_factory=dict)
    criteria: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        pairs = self.assignment_pairs()
        for name, mapping in (("orders", self.orders), ("path_profiles", self.path_profiles),
                              ("sensors", self.sensors)):
            stray = set(mapping) - pairs
            if stray:
                raise ValidationError(
                    f"plan {self.id!r}: {name} has entries for unassigned (task, uav) pairs: {sorted(stray)}"
                )

    def assignment_pairs(self) -> set[PairKey]:
        return {(task, uav) for task, uavs in self.task_uavs.items() for uav in uavs}


@dataclass(frozen=True)
class FilterWeights:
    w_uav: float = 1.0
    w_order: float = 0.6
    w_gcs: float = 0.2
    w_path: float = 0.1
    w_return: float = 0.1
    w_sensor: float = 0.1

    def __post_init__(self):
        values = (self.w_uav, self.w_order, self.w_gcs, self.w_path, self.w_return, self.w_sensor)
        if any(v < 0 for v in values):
            raise ValidationError("filter weights must be nonnegative")
        if all(v == 0 for v in values):
            raise ValidationError("at least one filter weight must be positive")


#: Expert defaults: task assignment dominates, flight profiles and sensors
#: barely matter.
DEFAULT_FILTER_WEIGHTS = FilterWeights()


def _map_delta(m1: Mapping, m2: Mapping, keys: Iterable) -> int:
    return sum(1 for k in keys if m1.get(k) != m2.get(k))


def plan_distance(s1: MissionPlan, s2: MissionPlan, w: FilterWeights = DEFAULT_FILTER_WEIGHTS) -> float:
    """Weighted count of differing assignment entries between two plans.

    A (task, uav) pair present in only one plan counts once in the UAV family
    and once per other family in which it carries a value; order indices are
    only compared for pairs present in both plans.
    """
    pairs1, pairs2 = s1.assignment_pairs(), s2.assignment_pairs()
    common = pairs1 & pairs2
    all_pairs = pairs1 | pairs2
    d_uav = len(pairs1 ^ pairs2)
    d_order = _map_delta(s1.orders, s2.orders, common)
    d_path = _map_delta(s1.path_profiles, s2.path_profiles, all_pairs)
    d_sensor = _map_delta(s1.sensors, s2.sensors, all_pairs)
    d_gcs = _map_delta(s1.gcs_assign, s2.gcs_assign, set(s1.gcs_assign) | set(s2.gcs_assign))
    d_return = _map_delta(s1.return_profiles, s2.return_profiles,
                          set(s1.return_profiles) | set(s2.return_profiles))
    return (w.w_uav * d_uav + w.w_order * d_order + w.w_gcs * d_gcs
            + w.w_path * d_path + w.w_return * d_return + w.w_sensor * d_sensor)


def filter_plans(ranked: Sequence[MissionPlan], w: FilterWeights = DEFAULT_FILTER_WEIGHTS,
                 threshold: float = 1.0) -> list[MissionPlan]:
    """Best-first sweep: of every too-similar pair, the lower-ranked plan is
    removed.

    A plan survives only when its distance to every higher-ranked plan
    (surviving or not) exceeds the threshold, so the kept sets shrink
    monotonically as the threshold grows.  The top-ranked plan always
    survives.
    """
    if threshold < 0:
        raise DomainError(f"threshold must be nonnegative, got {threshold}")
    kept: list[MissionPlan] = []
    for i, plan in enumerate(ranked):
        if all(plan_distance(plan, other, w) > threshold for other in ranked[:i]):
            kept.append(plan)
    return kept


# Hypervolume ----------------------------------------------------------------

def hypervolume(points: Sequence[Sequence[float]], ref: Sequence[float]) -> float:
    """Exact Lebesgue measure of the union of boxes [point, ref], minimization.

    Recursive exclusive-volume scheme: the contribution of each point is its
    own box volume minus the hypervolume of the parts of later boxes inside
    it.  Exact and fast at desk scales (tens of points, up to ~11 dims).
    """
    ref = tuple(float(x) for x in ref)
    if len(ref) < 1:
        raise DomainError("hypervolume needs at least one dimension")
    pts = []
    for i, p in enumerate(points):
        p = tuple(float(x) for x in p)
        if len(p) != len(ref):
            raise DomainError(f"point #{i} has {len(p)} components, expected {len(ref)}")
        if any(x > r for x, r in zip(p, ref)):
            raise DomainError(f"point #{i} {p} does not dominate the reference point {ref}")
        pts.append(p)
    pts = _nondominated(sorted(set(pts)))
    return _union_volume(pts, ref)


def _nondominated(pts: list[tuple[float, ...]]) -> list[tuple[float, ...]]:
    keep = []
    for p in pts:
        if not any(_dominates(q, p) for q in pts if q != p):
            keep.append(p)
    return keep


def _dominates(a: tuple[float, ...], b: tuple[float, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b)) and any(x < y for x, y in zip(a, b))


def _union_volume(pts: list[tuple[float, ...]], ref: tuple[float, ...]) -> float:
    total = 0.0
    for k, p in enumerate(pts):
        own = math.prod(r - x for x, r in zip(p, ref))
        if own == 0.0:
            continue
        clipped = [tuple(max(x, y) for x, y in zip(q, p)) for q in pts[k + 1:]]
        clipped = _nondominated(sorted(set(clipped)))
        overlap = _union_volume(clipped, ref) if clipped else 0.0
        total += own - overlap
    return total


# Threshold sweep -------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    threshold: float
    kept: int
    hypervolume: float


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]
    metadata: Mapping[str, object]


def normalized_objective_points(plans: Sequence[MissionPlan],
                                criterion_ids: Sequence[str]) -> tuple[dict[str, tuple[float, ...]], list[str]]:
    """Scale each criterion to [0, 1] over the plan set (best -> 0, worst -> 1
    for minimized objectives).  Criteria with zero range are dropped; their
    ids are returned so callers can record the dimension reduction."""
    dropped = []
    live: list[str] = []
    bounds = {}
    for cid in criterion_ids:
        values = [p.criteria[cid] for p in plans]
        lo, hi = min(values), max(values)
        if hi == lo:
            dropped.append(cid)
        else:
            live.append(cid)
            bounds[cid] = (lo, hi)
    points = {
        p.id: tuple((p.criteria[cid] - bounds[cid][0]) / (bounds[cid][1] - bounds[cid][0]) for cid in live)
        for p in plans
    }
    return points, dropped


def threshold_sweep(ranked: Sequence[MissionPlan], w: FilterWeights,
                    thresholds: Sequence[float],
                    ref: Sequence[float] | None = None,
                    criterion_ids: Sequence[str] | None = None) -> SweepResult:
    """Filter at each threshold and measure the surviving set's hypervolume.

    Without an explicit reference point the objectives are normalized to
    [0, 1] over the unfiltered set and the reference is all-ones.
    """
    if not thresholds:
        raise DomainError("threshold grid must be non-empty")
    if not ranked:
        raise DomainError("threshold sweep needs at least one plan")
    ids = list(criterion_ids) if criterion_ids is not None else sorted(ranked[0].criteria)
    if ref is None:
        points, dropped = normalized_objective_points(ranked, ids)
        reference = tuple(1.0 for _ in range(len(ids) - len(dropped)))
        meta: dict[str, object] = {
            "normalization": "per-criterion min-max over unfiltered set",
            "reference_point": "all-ones",
            "dropped_degenerate_criteria": dropped,
        }
    else:
        points = {p.id: tuple(p.criteria[cid] for cid in ids) for p in ranked}
        reference = tuple(float(x) for x in ref)
        meta = {"normalization": "none", "reference_point": list(reference)}

    dist = [[0.0] * len(ranked) for _ in ranked]
    for i, j in itertools.combinations(range(len(ranked)), 2):
        d = plan_distance(ranked[i], ranked[j], w)
        dist[i][j] = dist[j][i] = d

    hv_cache: dict[frozenset[str], float] = {}
    rows = []
    for t in thresholds:
        kept: list[int] = []
        for i in range(len(ranked)):
            if all(dist[i][j] > t for j in range(i)):
                kept.append(i)
        kept_ids = frozenset(ranked[i].id for i in kept)
        if kept_ids not in hv_cache:
            if reference:
                hv_cache[kept_ids] = hypervolume([points[ranked[i].id] for i in kept], reference)
            else:
                # Every objective degenerate: a single normalized cell, fully covered.
                hv_cache[kept_ids] = 1.0
        rows.append(SweepRow(float(t), len(kept), hv_cache[kept_ids]))
    return SweepResult(tuple(rows), meta)


def sweep_grid(start: float = 0.0, stop: float = 5.0, step: float = 0.1) -> list[float]:
    """Inclusive arithmetic grid, rounded to the step's precision."""
    if step <= 0:
        raise DomainError(f"grid step must be positive, got {step}")
    count = int(round((stop - start) / step))
    return [round(start + k * step, 10) for k in range(count + 1)]
