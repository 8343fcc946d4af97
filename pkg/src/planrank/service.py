"""HTTP API serving profiles, missions, ranked solutions and decision capture.

All endpoints live under ``/api/v1`` and return JSON.  GET endpoints are
side-effect free; ``POST /decisions`` is the only mutator and appends to the
JSON-lines decision log atomically.  Errors are structured
``{code, message, detail}`` documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .datasets import MissionDataset, load_dataset_dir, plan_to_json
from .defaults import DEFAULT_PROFILES
from .errors import PlanRankError
from .evaluation import (
    Decision,
    aggregate_scores,
    append_decision,
    comparison_matrix,
    effective_decisions,
    read_decisions,
)
from .model import CANONICAL_CRITERIA, OperatorProfile, Ranking
from .pipeline import CRISP_METHODS, FUZZY_METHODS, METHOD_NAMES, run_method, score_decisions
from .planfilter import DEFAULT_FILTER_WEIGHTS, filter_plans


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, detail: object = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail


@dataclass
class ServiceState:
    datasets: dict[str, MissionDataset]
    profiles: dict[str, OperatorProfile]
    decisions_path: Path
    default_threshold: float = 1.0
    ranking_cache: dict[tuple[str, str, str], Ranking] = field(default_factory=dict)

    def dataset(self, mission_id: str) -> MissionDataset:
        if mission_id not in self.datasets:
            raise ApiError(404, "unknown_mission", f"no mission {mission_id!r}",
                           {"known": sorted(self.datasets)})
        return self.datasets[mission_id]

    def profile(self, name: str) -> OperatorProfile:
        if name not in self.profiles:
            raise ApiError(404, "unknown_profile", f"no operator profile {name!r}",
                           {"known": sorted(self.profiles)})
        return self.profiles[name]

    def ranking(self, mission_id: str, profile_name: str, method: str) -> Ranking:
        key = (mission_id, profile_name, method)
        if key not in self.ranking_cache:
            ds = self.dataset(mission_id)
            prof = self.profile(profile_name)
            try:
                self.ranking_cache[key] = run_method(method, ds.decision_matrix(), prof)
            except PlanRankError as exc:
                raise ApiError(422, "method_failed", str(exc),
                               {"mission": mission_id, "method": method}) from None
        return self.ranking_cache[key]


def quality_fractions(plans) -> dict[str, dict[str, float]]:
    """Per plan and criterion: 1.0 for the best value in the served set, 0.0
    for the worst, linear in between; a degenerate range counts as best."""
    out: dict[str, dict[str, float]] = {p.id: {} for p in plans}
    for crit in CANONICAL_CRITERIA:
        values = [p.criteria[crit.id] for p in plans]
        lo, hi = min(values), max(values)
        for p in plans:
            v = p.criteria[crit.id]
            if hi == lo:
                frac = 1.0
            elif crit.minimized:
                frac = (hi - v) / (hi - lo)
            else:
                frac = (v - lo) / (hi - lo)
            out[p.id][crit.id] = frac
    return out


def create_app(data_dir: str | Path | None = None, *,
               datasets: Mapping[str, MissionDataset] | None = None,
               profiles: Mapping[str, OperatorProfile] | None = None,
               decisions_path: str | Path | None = None,
               static_dir: str | Path | None = None) -> FastAPI:
    if datasets is None:
        if data_dir is None:
            raise ValueError("either data_dir or datasets is required")
        datasets = load_dataset_dir(data_dir)
    if decisions_path is None:
        base = Path(data_dir) if data_dir is not None else Path(".")
        decisions_path = base / "decisions.jsonl"
    state = ServiceState(
        datasets=dict(datasets),
        profiles=dict(profiles if profiles is not None else DEFAULT_PROFILES),
        decisions_path=Path(decisions_path),
    )
    app = FastAPI(title="planrank", version="0.1.0")
    app.state.engine = state

    @app.exception_handler(ApiError)
    async def handle_api_error(_: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content={
            "code": exc.code, "message": exc.message, "detail": exc.detail,
        })

    @app.get("/api/v1/criteria")
    def get_criteria():
        return {"criteria": [
            {"id": c.id, "label": c.label, "direction": c.direction, "unit": c.unit}
            for c in CANONICAL_CRITERIA
        ]}

    @app.get("/api/v1/profiles")
    def get_profiles():
        return {"profiles": [
            {"name": p.name,
             "degrees": {cid: deg.name.lower() for cid, deg in sorted(p.degrees.items())}}
            for _, p in sorted(state.profiles.items())
        ]}

    @app.get("/api/v1/methods")
    def get_methods():
        return {"methods": list(METHOD_NAMES), "crisp": list(CRISP_METHODS),
                "fuzzy": list(FUZZY_METHODS)}

    @app.get("/api/v1/missions")
    def get_missions():
        return {"missions": [
            {"id": ds.id, "num_solutions": len(ds.plans),
             "meta": {"tasks": ds.meta.tasks, "multi_uav_tasks": ds.meta.multi_uav_tasks,
                      "uavs": ds.meta.uavs, "gcss": ds.meta.gcss}}
            for _, ds in sorted(state.datasets.items())
        ]}

    @app.get("/api/v1/missions/{mission_id}/solutions")
    def get_solutions(mission_id: str, profile: str | None = None, method: str | None = None,
                      filtered: bool = False, threshold: float | None = None):
        ds = state.dataset(mission_id)
        ranking = None
        if method is not None:
            if method not in METHOD_NAMES:
                raise ApiError(422, "unknown_method", f"no method {method!r}",
                               {"known": list(METHOD_NAMES)})
            if profile is None:
                raise ApiError(422, "missing_profile",
                               "a profile is required when a method is selected", None)
            ranking = state.ranking(mission_id, profile, method)
            ordered = [ds.plan(e.alternative) for e in ranking.entries]
        elif profile is not None:
            state.profile(profile)  # only validates
            ordered = list(ds.plans)
        else:
            ordered = list(ds.plans)
        if filtered:
            cut = state.default_threshold if threshold is None else threshold
            ordered = filter_plans(ordered, DEFAULT_FILTER_WEIGHTS, cut)
        fractions = quality_fractions(ordered)
        solutions = []
        for p in ordered:
            entry = {
                "plan": p.id,
                "criteria": {cid: {"value": p.criteria[cid], "fraction": fractions[p.id][cid]}
                             for cid in sorted(p.criteria)},
                "assignments": plan_to_json(p),
            }
            if ranking is not None:
                entry["rank"] = ranking.rank_of(p.id)
                entry["score"] = ranking.score_of(p.id)
            solutions.append(entry)
        return {"mission": mission_id, "profile": profile, "method": method,
                "filtered": filtered, "solutions": solutions}

    @app.get("/api/v1/decisions")
    def get_decisions(operator: str | None = None, profile: str | None = None):
        decisions = read_decisions(state.decisions_path)
        if operator is not None:
            decisions = [d for d in decisions if d.operator == operator]
        if profile is not None:
            decisions = [d for d in decisions if d.profile == profile]
        return {"decisions": [
            {"operator": d.operator, "profile": d.profile, "mission": d.mission,
             "plan": d.plan, "ts": d.ts} for d in decisions
        ]}

    @app.post("/api/v1/decisions", status_code=201)
    async def post_decision(request: Request):
        try:
            body = await request.json()
        except json.JSONDecodeError:
            raise ApiError(422, "invalid_decision", "request body is not valid JSON", None)
        if not isinstance(body, dict):
            raise ApiError(422, "invalid_decision", "decision must be a JSON object", None)
        missing = [k for k in ("operator", "profile", "mission", "plan") if not body.get(k)]
        if missing:
            raise ApiError(422, "invalid_decision", "missing required fields",
                           {"missing": missing})
        ds = state.dataset(str(body["mission"]))
        state.profile(str(body["profile"]))
        plan_id = str(body["plan"])
        if all(p.id != plan_id for p in ds.plans):
            raise ApiError(422, "unknown_plan",
                           f"mission {ds.id!r} has no plan {plan_id!r}",
                           {"known": [p.id for p in ds.plans]})
        decision = Decision(str(body["operator"]), str(body["profile"]), ds.id, plan_id,
                            str(body.get("ts", "")))
        append_decision(state.decisions_path, decision)
        return {"accepted": True, "decision": {
            "operator": decision.operator, "profile": decision.profile,
            "mission": decision.mission, "plan": decision.plan, "ts": decision.ts,
        }}

    @app.get("/api/v1/scores")
    def get_scores(group_by: str = "method", method: str | None = None):
        fields = tuple(g.strip() for g in group_by.split(",") if g.strip())
        decisions = effective_decisions(read_decisions(state.decisions_path))
        if not decisions:
            return {"group_by": list(fields), "rows": [], "n_decisions": 0}
        methods = METHOD_NAMES if method is None else (method,)
        if any(name not in METHOD_NAMES for name in methods):
            raise ApiError(422, "unknown_method", f"no method {method!r}",
                           {"known": list(METHOD_NAMES)})
        try:
            records = score_decisions(state.datasets, decisions, methods,
                                      profiles=state.profiles)
            rows = aggregate_scores(records, fields)
        except PlanRankError as exc:
            raise ApiError(422, "scoring_failed", str(exc), None) from None
        return {"group_by": list(fields), "rows": rows, "n_decisions": len(decisions)}

    @app.get("/api/v1/comparison")
    def get_comparison(alpha: float = 0.05):
        decisions = effective_decisions(read_decisions(state.decisions_path))
        if not decisions:
            return {"rows": list(CRISP_METHODS), "columns": list(FUZZY_METHODS),
                    "cells": [], "n_decisions": 0}
        records = score_decisions(state.datasets, decisions, METHOD_NAMES,
                                  profiles=state.profiles)
        cells = comparison_matrix(records, FUZZY_METHODS, CRISP_METHODS, alpha)
        return {
            "rows": list(CRISP_METHODS),
            "columns": list(FUZZY_METHODS),
            "alpha": alpha,
            "n_decisions": len(decisions),
            "cells": [[{"diff": c.mean_diff, "p_value": c.p_value,
                        "significant": c.significant} for c in row] for row in cells],
        }

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
