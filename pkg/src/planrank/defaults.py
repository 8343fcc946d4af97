"""Bundled expert parameters: operator profiles, ELECTRE thresholds, RIM ideals.

The six operator profiles and the per-criterion indifference/preference/veto
thresholds were elicited from expert operators; RIM universes default to the
observed value ranges with the reference ideal spanning one indifference
threshold from the best value.
"""

from __future__ import annotations

from .crisp import CriterionRimParams, ElectreThresholds, RimParams
from .model import DecisionMatrix, OperatorProfile

_VL, _L, _M, _H, _VH = "very_low", "low", "medium", "high", "very_high"

_PROFILE_TABLE: dict[str, dict[str, str]] = {
    "Balanced": {
        "cost": _M, "distance": _M, "flight_time": _M, "fuel": _M, "makespan": _M,
        "num_gcss": _M, "num_uavs": _M, "risk_distance_ground": _M,
        "risk_distance_uavs": _M, "risk_fuel_usage": _M, "risk_out_of_coverage": _M,
    },
    "Cost": {
        "cost": _VH, "distance": _M, "flight_time": _L, "fuel": _H, "makespan": _L,
        "num_gcss": _M, "num_uavs": _H, "risk_distance_ground": _M,
        "risk_distance_uavs": _M, "risk_fuel_usage": _M, "risk_out_of_coverage": _L,
    },
    "Time": {
        "cost": _M, "distance": _M, "flight_time": _H, "fuel": _M, "makespan": _VH,
        "num_gcss": _M, "num_uavs": _M, "risk_distance_ground": _L,
        "risk_distance_uavs": _L, "risk_fuel_usage": _L, "risk_out_of_coverage": _L,
    },
    "Risk": {
        "cost": _L, "distance": _L, "flight_time": _M, "fuel": _M, "makespan": _M,
        "num_gcss": _H, "num_uavs": _H, "risk_distance_ground": _VH,
        "risk_distance_uavs": _VH, "risk_fuel_usage": _VH, "risk_out_of_coverage": _VH,
    },
    "Resources": {
        "cost": _H, "distance": _M, "flight_time": _L, "fuel": _H, "makespan": _L,
        "num_gcss": _VH, "num_uavs": _VH, "risk_distance_ground": _M,
        "risk_distance_uavs": _M, "risk_fuel_usage": _M, "risk_out_of_coverage": _M,
    },
    "RiskCost": {
        "cost": _VH, "distance": _M, "flight_time": _L, "fuel": _H, "makespan": _L,
        "num_gcss": _M, "num_uavs": _H, "risk_distance_ground": _VH,
        "risk_distance_uavs": _VH, "risk_fuel_usage": _VH, "risk_out_of_coverage": _VH,
    },
}

DEFAULT_PROFILES: dict[str, OperatorProfile] = {
    name: OperatorProfile.build(name, table) for name, table in _PROFILE_TABLE.items()
}

#: Indifference (q), preference (p) and veto (v) thresholds per criterion.
DEFAULT_ELECTRE_THRESHOLDS = ElectreThresholds.build({
    "cost": (0.5, 5.0, 50.0),
    "distance": (0.5, 5.0, 50.0),
    "flight_time": (0.01, 0.5, 1.5),
    "fuel": (0.5, 7.0, 50.0),
    "makespan": (0.005, 0.3, 1.0),
    "num_gcss": (0.0, 1.0, 2.0),
    "num_uavs": (0.0, 1.0, 4.0),
    "risk_distance_ground": (0.001, 0.1, 0.5),
    "risk_distance_uavs": (0.001, 0.1, 0.5),
    "risk_fuel_usage": (0.001, 0.1, 0.5),
    "risk_out_of_coverage": (0.001, 0.1, 0.5),
})


def profiles_from_json(table: dict) -> dict[str, OperatorProfile]:
    """Parse ``{"name": {criterion-id: degree}}`` into operator profiles."""
    return {name: OperatorProfile.build(name, degrees) for name, degrees in table.items()}


def default_rim_params(m: DecisionMatrix,
                       thresholds: ElectreThresholds = DEFAULT_ELECTRE_THRESHOLDS) -> RimParams:
    """Universe [A, B] from the observed value range; reference ideal [C, D]
    one indifference threshold wide, anchored at the best observed value."""
    table = {}
    for crit in m.criteria:
        col = m.column(crit.id)
        lo, hi = min(col), max(col)
        q = thresholds.per_criterion[crit.id].q if crit.id in thresholds.per_criterion else 0.0
        if crit.minimized:
            table[crit.id] = CriterionRimParams(lo, hi, lo, min(lo + q, hi))
        else:
            table[crit.id] = CriterionRimParams(lo, hi, max(hi - q, lo), hi)
    return RimParams(table)
