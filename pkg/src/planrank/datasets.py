"""Mission dataset files: schema validation, JSON codec, synthetic generation.

A dataset is one JSON document: ``{"id", "meta", "plans"}`` where ``meta``
carries the mission shape (tasks, multi-UAV tasks, UAVs, GCSs) and each plan
records its assignments and its value on each of the 11 mission criteria.
Per-pair assignment maps are stored as nested ``{task: {uav: value}}`` objects.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .errors import DatasetError
from .model import CANONICAL_CRITERIA, CANONICAL_CRITERION_IDS, DecisionMatrix
from .planfilter import MissionPlan

SENSORS = ("mR", "sR", "iR", "eiS")
PATH_PROFILES = ("min", "max")


@dataclass(frozen=True)
class DatasetMeta:
    tasks: int
    multi_uav_tasks: int
    uavs: int
    gcss: int


@dataclass(frozen=True)
class MissionDataset:
    id: str
    plans: tuple[MissionPlan, ...]
    meta: DatasetMeta

    def __post_init__(self):
        if len(self.plans) < 1:
            raise DatasetError("dataset needs at least one plan", "/plans")
        ids = [p.id for p in self.plans]
        dupes = {i for i in ids if ids.count(i) > 1}
        if dupes:
            raise DatasetError(f"duplicate plan ids: {sorted(dupes)}", "/plans")
        if min(self.meta.tasks, self.meta.uavs, self.meta.gcss) < 1 or self.meta.multi_uav_tasks < 0:
            raise DatasetError("meta counts must be positive", "/meta")

    def plan(self, plan_id: str) -> MissionPlan:
        for p in self.plans:
            if p.id == plan_id:
                return p
        raise DatasetError(f"no plan {plan_id!r} in dataset {self.id!r}", "/plans")

    def decision_matrix(self) -> DecisionMatrix:
        rows = [[p.criteria[cid] for cid in CANONICAL_CRITERION_IDS] for p in self.plans]
        return DecisionMatrix.build(CANONICAL_CRITERIA, [p.id for p in self.plans], rows)


# JSON codec -----------------------------------------------------------------

def _pairs_to_json(mapping: Mapping[tuple[str, str], object]) -> dict:
    out: dict[str, dict[str, object]] = {}
    for (task, uav), value in sorted(mapping.items()):
        out.setdefault(task, {})[uav] = value
    return out


def _pairs_from_json(obj: dict, pointer: str, value_type: type) -> dict:
    out = {}
    for task, per_uav in obj.items():
        if not isinstance(per_uav, dict):
            raise DatasetError("expected an object of uav -> value", f"{pointer}/{task}")
        for uav, value in per_uav.items():
            if not isinstance(value, value_type):
                raise DatasetError(f"expected {value_type.__name__}", f"{pointer}/{task}/{uav}")
            out[(task, uav)] = value
    return out


def plan_to_json(plan: MissionPlan) -> dict:
    return {
        "id": plan.id,
        "task_uavs": {task: sorted(uavs) for task, uavs in sorted(plan.task_uavs.items())},
        "orders": _pairs_to_json(plan.orders),
        "gcs_assign": dict(sorted(plan.gcs_assign.items())),
        "path_profiles": _pairs_to_json(plan.path_profiles),
        "return_profiles": dict(sorted(plan.return_profiles.items())),
        "sensors": _pairs_to_json(plan.sensors),
        "criteria": dict(sorted(plan.criteria.items())),
    }


def _require(obj: dict, key: str, kind: type, pointer: str):
    if key not in obj:
        raise DatasetError(f"missing required field {key!r}", pointer)
    if not isinstance(obj[key], kind):
        raise DatasetError(f"field {key!r} must be {kind.__name__}", f"{pointer}/{key}")
    return obj[key]


def plan_from_json(obj: dict, pointer: str) -> MissionPlan:
    if not isinstance(obj, dict):
        raise DatasetError("plan must be an object", pointer)
    plan_id = _require(obj, "id", str, pointer)
    raw_tasks = _require(obj, "task_uavs", dict, pointer)
    task_uavs = {}
    for task, uavs in raw_tasks.items():
        if not isinstance(uavs, list) or not all(isinstance(u, str) for u in uavs):
            raise DatasetError("expected a list of uav ids", f"{pointer}/task_uavs/{task}")
        task_uavs[task] = frozenset(uavs)
    criteria = _require(obj, "criteria", dict, pointer)
    for cid in CANONICAL_CRITERION_IDS:
        if cid not in criteria:
            raise DatasetError(f"criteria must cover {cid!r}", f"{pointer}/criteria")
    for cid, value in criteria.items():
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise DatasetError("criterion values must be numbers", f"{pointer}/criteria/{cid}")
    try:
        return MissionPlan(
            id=plan_id,
            task_uavs=task_uavs,
            orders=_pairs_from_json(obj.get("orders", {}), f"{pointer}/orders", int),
            gcs_assign=dict(obj.get("gcs_assign", {})),
            path_profiles=_pairs_from_json(obj.get("path_profiles", {}), f"{pointer}/path_profiles", str),
            return_profiles=dict(obj.get("return_profiles", {})),
            sensors=_pairs_from_json(obj.get("sensors", {}), f"{pointer}/sensors", str),
            criteria={cid: float(v) for cid, v in criteria.items()},
        )
    except ValueError as exc:
        raise DatasetError(str(exc), pointer) from None


def dataset_to_json(ds: MissionDataset) -> dict:
    return {
        "id": ds.id,
        "meta": {"tasks": ds.meta.tasks, "multi_uav_tasks": ds.meta.multi_uav_tasks,
                 "uavs": ds.meta.uavs, "gcss": ds.meta.gcss},
        "plans": [plan_to_json(p) for p in ds.plans],
    }


def dataset_from_json(obj: dict) -> MissionDataset:
    if not isinstance(obj, dict):
        raise DatasetError("dataset must be an object", "")
    ds_id = _require(obj, "id", str, "")
    meta_obj = _require(obj, "meta", dict, "")
    meta_fields = {}
    for key in ("tasks", "multi_uav_tasks", "uavs", "gcss"):
        value = _require(meta_obj, key, int, "/meta")
        meta_fields[key] = value
    plans_obj = _require(obj, "plans", list, "")
    if not plans_obj:
        raise DatasetError("dataset needs at least one plan", "/plans")
    plans = [plan_from_json(p, f"/plans/{i}") for i, p in enumerate(plans_obj)]
    return MissionDataset(ds_id, tuple(plans), DatasetMeta(**meta_fields))


def ingest(path: str | Path) -> MissionDataset:
    """Load and validate a dataset file."""
    path = Path(path)
    if not path.exists():
        raise DatasetError(f"no such dataset file: {path}", "")
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DatasetError(f"invalid JSON: {exc}", "") from None
    return dataset_from_json(obj)


def save_dataset(ds: MissionDataset, path: str | Path) -> None:
    Path(path).write_text(json.dumps(dataset_to_json(ds), indent=2, sort_keys=True) + "\n",
                          encoding="utf-8")


def load_dataset_dir(directory: str | Path) -> dict[str, MissionDataset]:
    """Ingest every ``*.json`` dataset in a directory, keyed by dataset id."""
    out: dict[str, MissionDataset] = {}
    for path in sorted(Path(directory).glob("*.json")):
        ds = ingest(path)
        if ds.id in out:
            raise DatasetError(f"duplicate dataset id {ds.id!r} in {path}", "/id")
        out[ds.id] = ds
    return out


# Synthetic generation ---------------------------------------------------------

#: Mission shapes mirrored from the experiment datasets:
#: (tasks, multi-UAV tasks, UAVs, GCSs, solutions).
DATASET_SHAPES: tuple[tuple[int, int, int, int, int], ...] = (
    (6, 1, 3, 1, 17),
    (6, 1, 4, 2, 5),
    (8, 2, 5, 2, 38),
    (9, 2, 5, 2, 9),
    (9, 2, 6, 2, 5),
    (10, 2, 6, 2, 18),
    (11, 3, 6, 2, 3),
    (12, 3, 7, 3, 11),
    (12, 3, 8, 3, 5),
    (13, 4, 7, 3, 4),
    (14, 4, 8, 3, 5),
    (16, 5, 10, 3, 8),
)

# Value spreads sized so that ELECTRE thresholds discriminate without vetoing
# every pair.
_CRITERION_SPREADS: dict[str, tuple[float, float]] = {
    "makespan": (4.0, 6.5),
    "cost": (100.0, 180.0),
    "fuel": (300.0, 380.0),
    "distance": (200.0, 280.0),
    "flight_time": (10.0, 13.0),
    "risk_fuel_usage": (0.05, 0.65),
    "risk_distance_ground": (0.05, 0.65),
    "risk_distance_uavs": (0.05, 0.65),
    "risk_out_of_coverage": (0.05, 0.65),
}


def generate_dataset(shape: tuple[int, int, int, int, int], seed: int,
                     dataset_id: str) -> MissionDataset:
    """Deterministic random dataset with the given mission shape.

    Plans are mutations of one base assignment, as knee-point sets of a single
    mission are: pairwise similarity distances then populate the 0..5 band
    the filtering threshold operates in.
    """
    tasks, multi, uavs, gcss, solutions = shape
    rng = random.Random(seed)
    task_ids = [f"T{i + 1}" for i in range(tasks)]
    uav_ids = [f"U{i + 1}" for i in range(uavs)]
    gcs_ids = [f"G{i + 1}" for i in range(gcss)]

    multi_tasks = set(rng.sample(task_ids, multi))
    base_task_uavs = {
        t: frozenset(rng.sample(uav_ids, rng.randint(2, min(3, uavs)) if t in multi_tasks else 1))
        for t in task_ids
    }
    base_gcs = {u: rng.choice(gcs_ids) for u in uav_ids}
    base_returns = {u: rng.choice(PATH_PROFILES) for u in uav_ids}
    base_paths = {(t, u): rng.choice(PATH_PROFILES)
                  for t, us in base_task_uavs.items() for u in us}
    base_sensors = {(t, u): rng.choice(SENSORS)
                    for t, us in base_task_uavs.items() for u in us}

    plans = []
    for p in range(solutions):
        task_uavs = dict(base_task_uavs)
        # Mutate at most one task assignment per plan.
        for t in rng.sample(task_ids, rng.randint(0, 1)):
            count = rng.randint(2, min(3, uavs)) if t in multi_tasks else 1
            task_uavs[t] = frozenset(rng.sample(uav_ids, count))
        used_uavs = sorted({u for us in task_uavs.values() for u in us})
        per_uav_tasks: dict[str, list[str]] = {u: [] for u in used_uavs}
        for t in task_ids:
            for u in sorted(task_uavs[t]):
                per_uav_tasks[u].append(t)
        orders = {}
        for u, assigned in per_uav_tasks.items():
            sequence = list(assigned)
            if rng.random() < 0.25 and len(sequence) > 1:
                i, j = rng.sample(range(len(sequence)), 2)
                sequence[i], sequence[j] = sequence[j], sequence[i]
            for idx, t in enumerate(sequence):
                orders[(t, u)] = idx + 1
        pairs = sorted((t, u) for t, us in task_uavs.items() for u in us)
        gcs_assign = {u: (rng.choice(gcs_ids) if rng.random() < 0.1 else base_gcs[u])
                      for u in used_uavs}
        path_profiles = {k: (rng.choice(PATH_PROFILES) if rng.random() < 0.15
                             else base_paths.get(k, rng.choice(PATH_PROFILES)))
                         for k in pairs}
        sensors = {k: (rng.choice(SENSORS) if rng.random() < 0.1
                       else base_sensors.get(k, rng.choice(SENSORS)))
                   for k in pairs}
        criteria = {cid: round(rng.uniform(*spread), 4)
                    for cid, spread in _CRITERION_SPREADS.items()}
        criteria["num_uavs"] = float(len(used_uavs))
        criteria["num_gcss"] = float(len(set(gcs_assign.values())))
        plans.append(MissionPlan(
            id=f"plan-{p + 1:02d}",
            task_uavs=task_uavs,
            orders=orders,
            gcs_assign=gcs_assign,
            path_profiles=path_profiles,
            return_profiles={u: (rng.choice(PATH_PROFILES) if rng.random() < 0.1
                                 else base_returns[u]) for u in used_uavs},
            sensors=sensors,
            criteria=criteria,
        ))
    return MissionDataset(dataset_id, tuple(plans), DatasetMeta(tasks, multi, uavs, gcss))


def generate_all(seed: int = 0) -> list[MissionDataset]:
    """One synthetic dataset per bundled mission shape."""
    return [generate_dataset(shape, seed + i, f"mission-{i + 1:02d}")
            for i, shape in enumerate(DATASET_SHAPES)]
