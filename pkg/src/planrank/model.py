"""Domain types shared by every ranking method.

Criteria carry an explicit optimization direction; the canonical mission
criteria set has 11 entries, all minimized.  Operator profiles assign each
criterion a linguistic importance degree (Very Low .. Very High) from which
both crisp and fuzzy weights are derived.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import DomainError, ValidationError
from .tfn import Tfn

MINIMIZE = "minimize"
MAXIMIZE = "maximize"


@dataclass(frozen=True, slots=True)
class Criterion:
    id: str
    label: str
    direction: str = MINIMIZE
    unit: str = ""

    def __post_init__(self):
        if self.direction not in (MINIMIZE, MAXIMIZE):
            raise ValidationError(f"criterion {self.id!r}: direction must be minimize or maximize")

    @property
    def minimized(self) -> bool:
        return self.direction == MINIMIZE


#: The 11 mission criteria; every one of them is minimized.
CANONICAL_CRITERIA: tuple[Criterion, ...] = (
    Criterion("makespan", "Makespan", MINIMIZE, "h"),
    Criterion("cost", "Cost", MINIMIZE, ""),
    Criterion("fuel", "Fuel", MINIMIZE, "kg"),
    Criterion("distance", "Distance", MINIMIZE, "km"),
    Criterion("flight_time", "Flight Time", MINIMIZE, "h"),
    Criterion("risk_fuel_usage", "Risk Fuel Usage", MINIMIZE, "%"),
    Criterion("risk_distance_ground", "Risk Distance Ground", MINIMIZE, "%"),
    Criterion("risk_distance_uavs", "Risk Distance UAVs", MINIMIZE, "%"),
    Criterion("risk_out_of_coverage", "Risk Out of Coverage", MINIMIZE, "%"),
    Criterion("num_uavs", "Num UAVs", MINIMIZE, "count"),
    Criterion("num_gcss", "Num GCSs", MINIMIZE, "count"),
)

CANONICAL_CRITERION_IDS: tuple[str, ...] = tuple(c.id for c in CANONICAL_CRITERIA)


class ImportanceDegree(enum.IntEnum):
    VERY_LOW = 1
    LOW = 2
    MEDIUM = 3
    HIGH = 4
    VERY_HIGH = 5

    @classmethod
    def parse(cls, value) -> "ImportanceDegree":
        if isinstance(value, ImportanceDegree):
            return value
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, str):
            key = value.strip().upper().replace(" ", "_").replace("-", "_")
            if key in cls.__members__:
                return cls[key]
        raise ValidationError(f"unknown importance degree: {value!r}")


#: Linguistic scale to TFN membership (smallest, most promising, largest).
DEGREE_TFN: Mapping[ImportanceDegree, Tfn] = {
    ImportanceDegree.VERY_LOW: Tfn(0.00, 0.10, 0.25),
    ImportanceDegree.LOW: Tfn(0.15, 0.30, 0.45),
    ImportanceDegree.MEDIUM: Tfn(0.35, 0.50, 0.65),
    ImportanceDegree.HIGH: Tfn(0.55, 0.70, 0.85),
    ImportanceDegree.VERY_HIGH: Tfn(0.75, 0.90, 1.00),
}


@dataclass(frozen=True)
class DecisionMatrix:
    """Alternatives x criteria performance table.

    ``values[i][j]`` is the performance of alternative ``alternatives[i]`` on
    ``criteria[j]``.  Row order defines the deterministic tie-breaking order
    used by every method downstream.
    """

    criteria: tuple[Criterion, ...]
    alternatives: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if len(self.criteria) < 1:
            raise ValidationError("decision matrix needs at least one criterion")
        if len(self.alternatives) < 1:
            raise ValidationError("decision matrix needs at least one alternative")
        ids = [c.id for c in self.criteria]
        if len(set(ids)) != len(ids):
            raise ValidationError("criterion ids must be unique")
        if len(set(self.alternatives)) != len(self.alternatives):
            raise ValidationError("alternative ids must be unique")
        if len(self.values) != len(self.alternatives):
            raise ValidationError(
                f"row count {len(self.values)} does not match {len(self.alternatives)} alternatives"
            )
        for alt, row in zip(self.alternatives, self.values):
            if len(row) != len(self.criteria):
                raise ValidationError(f"row for {alt!r} has {len(row)} values, expected {len(self.criteria)}")
            for crit, v in zip(self.criteria, row):
                if not math.isfinite(v):
                    raise ValidationError(f"non-finite value for alternative {alt!r}, criterion {crit.id!r}")

    @classmethod
    def build(cls, criteria: Iterable[Criterion], alternatives: Iterable[str],
              values: Iterable[Iterable[float]]) -> "DecisionMatrix":
        return cls(tuple(criteria), tuple(alternatives),
                   tuple(tuple(float(v) for v in row) for row in values))

    @property
    def criterion_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.criteria)

    def column(self, criterion_id: str) -> tuple[float, ...]:
        j = self.criterion_ids.index(criterion_id)
        return tuple(row[j] for row in self.values)


@dataclass(frozen=True)
class OperatorProfile:
    """Named assignment of importance degrees to criteria."""

    name: str
    degrees: Mapping[str, ImportanceDegree]

    @classmethod
    def build(cls, name: str, degrees: Mapping[str, object]) -> "OperatorProfile":
        return cls(name, {k: ImportanceDegree.parse(v) for k, v in degrees.items()})

    def degrees_for(self, criteria: Iterable[Criterion]) -> dict[str, ImportanceDegree]:
        """Degrees aligned to a criteria set; rejects missing or extra keys."""
        wanted = [c.id for c in criteria]
        for cid in wanted:
            if cid not in self.degrees:
                raise DomainError(f"profile {self.name!r} has no importance degree for criterion {cid!r}")
        extra = set(self.degrees) - set(wanted)
        if extra:
            raise DomainError(f"profile {self.name!r} has degrees for unknown criteria: {sorted(extra)}")
        return {cid: self.degrees[cid] for cid in wanted}


@dataclass(frozen=True)
class WeightVector:
    weights: Mapping[str, float]

    def __post_init__(self):
        total = sum(self.weights.values())
        if abs(total - 1.0) > 1e-9:
            raise ValidationError(f"weights must sum to 1, got {total!r}")
        for cid, w in self.weights.items():
            if not (0.0 <= w <= 1.0):
                raise ValidationError(f"weight for {cid!r} must lie in [0, 1], got {w}")

    def aligned(self, criteria: Iterable[Criterion]) -> list[float]:
        """Weights in criteria order; rejects missing criteria."""
        out = []
        for c in criteria:
            if c.id not in self.weights:
                raise DomainError(f"weight vector has no entry for criterion {c.id!r}")
            out.append(self.weights[c.id])
        return out


def crisp_weights(profile: OperatorProfile, criteria: Iterable[Criterion]) -> WeightVector:
    """Normalize importance degrees into weights: w(f) = D(f) / sum D."""
    criteria = tuple(criteria)
    degrees = profile.degrees_for(criteria)
    total = sum(int(d) for d in degrees.values())
    return WeightVector({cid: int(d) / total for cid, d in degrees.items()})


def fuzzy_weights(profile: OperatorProfile, criteria: Iterable[Criterion]) -> dict[str, Tfn]:
    """Map each criterion's importance degree to its TFN membership."""
    criteria = tuple(criteria)
    degrees = profile.degrees_for(criteria)
    return {cid: DEGREE_TFN[d] for cid, d in degrees.items()}


# Rank assignment ----------------------------------------------------------

@dataclass(frozen=True, slots=True)
class RankedAlternative:
    alternative: str
    rank: int
    score: float | None


@dataclass(frozen=True)
class Ranking:
    """Total order over the alternatives of one matrix, best first.

    Competition ranking: tied alternatives share a rank and the next distinct
    one is offset by the tie count.
    """

    method: str
    entries: tuple[RankedAlternative, ...]
    metadata: Mapping[str, object] = field(default_factory=dict)

    def ordered_ids(self) -> list[str]:
        return [e.alternative for e in self.entries]

    def rank_of(self, alternative: str) -> int:
        for e in self.entries:
            if e.alternative == alternative:
                return e.rank
        raise DomainError(f"alternative {alternative!r} not present in ranking")

    def score_of(self, alternative: str) -> float | None:
        for e in self.entries:
            if e.alternative == alternative:
                return e.score
        raise DomainError(f"alternative {alternative!r} not present in ranking")


def _close(a: float, b: float, rel: float, abs_tol: float) -> bool:
    return abs(a - b) <= max(rel * max(abs(a), abs(b)), abs_tol)


def ranking_from_scores(method: str, alternatives: Iterable[str], scores: Iterable[float],
                        *, higher_is_better: bool = True,
                        metadata: Mapping[str, object] | None = None,
                        tie_rel: float = 1e-9, tie_abs: float = 1e-12) -> Ranking:
    """Build a competition-ranked ordering from per-alternative scores.

    Scores within the tie tolerance of the first member of a tie group share
    its rank; matrix order breaks ties deterministically.
    """
    alts = list(alternatives)
    vals = [float(s) for s in scores]
    sign = -1.0 if higher_is_better else 1.0
    order = sorted(range(len(alts)), key=lambda i: (sign * vals[i], i))
    groups: list[list[int]] = []
    leader: float | None = None
    for i in order:
        if leader is None or not _close(vals[i], leader, tie_rel, tie_abs):
            groups.append([i])
            leader = vals[i]
        else:
            groups[-1].append(i)
    entries: list[RankedAlternative] = []
    next_rank = 1
    for group in groups:
        for i in sorted(group):
            entries.append(RankedAlternative(alts[i], next_rank, vals[i]))
        next_rank += len(group)
    return Ranking(method, tuple(entries), dict(metadata or {}))


def ranking_from_groups(method: str, groups: Iterable[Iterable[str]],
                        scores: Mapping[str, float | None] | None = None,
                        metadata: Mapping[str, object] | None = None) -> Ranking:
    """Build a ranking from explicit tie groups ordered best-first."""
    entries: list[RankedAlternative] = []
    next_rank = 1
    for group in groups:
        members = list(group)
        for alt in members:
            score = None if scores is None else scores.get(alt)
            entries.append(RankedAlternative(alt, next_rank, score))
        next_rank += len(members)
    return Ranking(method, tuple(entries), dict(metadata or {}))
