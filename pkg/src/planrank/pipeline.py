"""End-to-end rank -> filter pipeline and the method registry.

``run_method`` dispatches any of the 16 method names over a dataset's
decision matrix under an operator profile; ``run_pipeline`` ranks, filters
the ranked plans and persists both artifacts deterministically.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import crisp, fuzzy
from .crisp import ElectreThresholds, RimParams
from .datasets import MissionDataset
from .defaults import DEFAULT_ELECTRE_THRESHOLDS, DEFAULT_PROFILES, default_rim_params
from .errors import ParameterError
from .evaluation import Decision, ScoreRecord, score
from .fuzzy import FuzzyWeightVector
from .model import DecisionMatrix, OperatorProfile, Ranking, crisp_weights
from .planfilter import DEFAULT_FILTER_WEIGHTS, FilterWeights, MissionPlan, filter_plans

CRISP_METHODS = ("wsm", "wpm", "ahp", "vikor", "topsis_vector", "topsis_linear",
                 "electre3", "multimoora", "rim", "waspas")
FUZZY_METHODS = ("fuzzy_ahp", "fuzzy_vikor", "fuzzy_topsis_vector", "fuzzy_topsis_linear",
                 "fuzzy_multimoora", "fuzzy_waspas")
METHOD_NAMES = CRISP_METHODS + FUZZY_METHODS


@dataclass(frozen=True)
class MethodParams:
    """Parsed method parameter block."""

    method: str
    v: float = 0.5
    lam: float = 0.5
    thresholds: ElectreThresholds | None = None
    rim_params: RimParams | None = None


def method_params_from_json(block: dict) -> MethodParams:
    """Parse the JSON parameter block ``{"method", "v", "lambda", "norm",
    "thresholds", "rim", "fuzzy"}`` into a runnable configuration.

    ``topsis`` needs a ``norm``; ``"fuzzy": true`` selects the fuzzy variant
    of a base method name.  Canonical names (``fuzzy_topsis_linear``) are also
    accepted directly.
    """
    if not isinstance(block, dict) or "method" not in block:
        raise ParameterError("parameter block must be an object with a 'method' field")
    name = str(block["method"])
    if bool(block.get("fuzzy", False)) and not name.startswith("fuzzy_"):
        name = f"fuzzy_{name}"
    if name.endswith("topsis"):
        norm = block.get("norm")
        if norm not in ("vector", "linear"):
            raise ParameterError("topsis requires \"norm\": \"vector\" or \"linear\"")
        name = f"{name}_{norm}"
    if name not in METHOD_NAMES:
        raise ParameterError(f"unknown method {block['method']!r}")
    thresholds = None
    if "thresholds" in block:
        table = {}
        for cid, spec_row in block["thresholds"].items():
            if isinstance(spec_row, dict):
                table[cid] = (float(spec_row["q"]), float(spec_row["p"]), float(spec_row["v"]))
            else:
                table[cid] = tuple(float(x) for x in spec_row)
        thresholds = ElectreThresholds.build(table)
    rim_params = None
    if "rim" in block:
        table = {}
        for cid, spec_row in block["rim"].items():
            if isinstance(spec_row, dict):
                a, b = (float(x) for x in spec_row["range"])
                c, d = (float(x) for x in spec_row["ideal"])
                table[cid] = (a, b, c, d)
            else:
                table[cid] = tuple(float(x) for x in spec_row)
        rim_params = RimParams.build(table)
    return MethodParams(method=name, v=float(block.get("v", 0.5)),
                        lam=float(block.get("lambda", 0.5)),
                        thresholds=thresholds, rim_params=rim_params)


def run_method(name: str, m: DecisionMatrix, profile: OperatorProfile, *,
               v: float = 0.5, lam: float = 0.5,
               thresholds: ElectreThresholds | None = None,
               rim_params: RimParams | None = None) -> Ranking:
    """Run one ranking method by name with its default parameterization."""
    if name not in METHOD_NAMES:
        raise ParameterError(f"unknown method {name!r}; expected one of {METHOD_NAMES}")
    if name == "ahp":
        return crisp.ahp(m, profile)
    if name == "fuzzy_ahp":
        return fuzzy.fuzzy_ahp(m, profile)
    if name.startswith("fuzzy_"):
        fw = FuzzyWeightVector.from_profile(profile, m.criteria)
        if name == "fuzzy_vikor":
            return fuzzy.fuzzy_vikor(m, fw, v)
        if name == "fuzzy_topsis_vector":
            return fuzzy.fuzzy_topsis(m, fw, "vector")
        if name == "fuzzy_topsis_linear":
            return fuzzy.fuzzy_topsis(m, fw, "linear")
        if name == "fuzzy_multimoora":
            return fuzzy.fuzzy_multimoora(m, fw)
        return fuzzy.fuzzy_waspas(m, fw, lam)
    w = crisp_weights(profile, m.criteria)
    if name == "wsm":
        return crisp.wsm(m, w)
    if name == "wpm":
        return crisp.wpm(m, w)
    if name == "vikor":
        return crisp.vikor(m, w, v)
    if name == "topsis_vector":
        return crisp.topsis(m, w, "vector")
    if name == "topsis_linear":
        return crisp.topsis(m, w, "linear")
    if name == "electre3":
        return crisp.electre3(m, w, thresholds or DEFAULT_ELECTRE_THRESHOLDS)
    if name == "multimoora":
        return crisp.multimoora(m, w)
    if name == "rim":
        return crisp.rim(m, w, rim_params or default_rim_params(m))
    return crisp.waspas(m, w, lam)


@dataclass(frozen=True)
class PipelineConfig:
    method: str = "fuzzy_vikor"
    profile: str = "Balanced"
    v: float = 0.5
    lam: float = 0.5
    threshold: float = 1.0
    filter_weights: FilterWeights = field(default_factory=lambda: DEFAULT_FILTER_WEIGHTS)
    thresholds: ElectreThresholds | None = None
    rim_params: RimParams | None = None
    output_dir: str | None = None

    def __post_init__(self):
        if self.method not in METHOD_NAMES:
            raise ParameterError(f"unknown method {self.method!r}")
        if self.threshold < 0:
            raise ParameterError(f"threshold must be nonnegative, got {self.threshold}")

    @classmethod
    def from_method_params(cls, params: MethodParams, **kwargs) -> "PipelineConfig":
        return cls(method=params.method, v=params.v, lam=params.lam,
                   thresholds=params.thresholds, rim_params=params.rim_params, **kwargs)


@dataclass(frozen=True)
class PipelineResult:
    ranking: Ranking
    filtered: tuple[MissionPlan, ...]


def resolve_profile(name: str, profiles: dict[str, OperatorProfile] | None = None) -> OperatorProfile:
    table = profiles if profiles is not None else DEFAULT_PROFILES
    if name not in table:
        raise ParameterError(f"unknown operator profile {name!r}; expected one of {sorted(table)}")
    return table[name]


def run_pipeline(ds: MissionDataset, cfg: PipelineConfig,
                 profiles: dict[str, OperatorProfile] | None = None) -> PipelineResult:
    """Rank the dataset's plans, then filter the ranked order by similarity."""
    profile = resolve_profile(cfg.profile, profiles)
    matrix = ds.decision_matrix()
    ranking = run_method(cfg.method, matrix, profile, v=cfg.v, lam=cfg.lam,
                         thresholds=cfg.thresholds, rim_params=cfg.rim_params)
    by_id = {p.id: p for p in ds.plans}
    ranked_plans = [by_id[e.alternative] for e in ranking.entries]
    filtered = filter_plans(ranked_plans, cfg.filter_weights, cfg.threshold)
    result = PipelineResult(ranking, tuple(filtered))
    if cfg.output_dir is not None:
        persist_pipeline(ds, cfg, result, cfg.output_dir)
    return result


def write_ranking_csv(ranking: Ranking, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["rank", "plan", "score", "method"])
        for e in ranking.entries:
            writer.writerow([e.rank, e.alternative,
                             "" if e.score is None else repr(e.score), ranking.method])


def persist_pipeline(ds: MissionDataset, cfg: PipelineConfig, result: PipelineResult,
                     output_dir: str | Path) -> dict[str, Path]:
    """Write ranking CSV and filtered plan list; returns the artifact paths."""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    ranking_path = out / f"{ds.id}_{cfg.method}_{cfg.profile}_ranking.csv"
    filtered_path = out / f"{ds.id}_{cfg.method}_{cfg.profile}_filtered.json"
    write_ranking_csv(result.ranking, ranking_path)
    filtered_doc = {
        "dataset": ds.id,
        "method": cfg.method,
        "profile": cfg.profile,
        "threshold": cfg.threshold,
        "kept": [p.id for p in result.filtered],
    }
    filtered_path.write_text(json.dumps(filtered_doc, indent=2, sort_keys=True) + "\n",
                             encoding="utf-8")
    return {"ranking": ranking_path, "filtered": filtered_path}


def score_decisions(datasets: dict[str, MissionDataset], decisions: Sequence[Decision],
                    methods: Sequence[str] = METHOD_NAMES,
                    profiles: dict[str, OperatorProfile] | None = None,
                    *, v: float = 0.5, lam: float = 0.5) -> list[ScoreRecord]:
    """Score every decision against every requested method's ranking.

    Rankings are cached per (mission, profile, method): the fold over the
    decision log is pure.
    """
    cache: dict[tuple[str, str, str], Ranking] = {}
    records = []
    for d in decisions:
        if d.mission not in datasets:
            raise ParameterError(f"decision references unknown mission {d.mission!r}")
        ds = datasets[d.mission]
        profile = resolve_profile(d.profile, profiles)
        for method in methods:
            key = (d.mission, d.profile, method)
            if key not in cache:
                cache[key] = run_method(method, ds.decision_matrix(), profile, v=v, lam=lam)
            ranking = cache[key]
            records.append(ScoreRecord(d.operator, d.mission, d.profile, method,
                                       score(ranking, d, len(ds.plans))))
    return records
