"""Ground-truth decision scoring and method comparison.

A recorded human decision is scored against a method's ranking by the
normalized rank position of the chosen plan: 1 when the method put it first,
0 when it put it last.  Paired method comparisons use the two-sided Wilcoxon
signed-rank test (exact null distribution up to 25 non-zero differences,
normal approximation with tie and continuity corrections beyond).
"""

from __future__ import annotations

import json
import math
import statistics
import threading
from dataclasses import dataclass, asdict
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .model import Ranking

EXACT_LIMIT = 25


@dataclass(frozen=True)
class Decision:
    operator: str
    profile: str
    mission: str
    plan: str
    ts: str = ""


@dataclass(frozen=True)
class ScoreRecord:
    operator: str
    mission: str
    profile: str
    method: str
    score: float

    def __post_init__(self):
        if not (0.0 <= self.score <= 1.0):
            raise DomainError(f"score must lie in [0, 1], got {self.score}")


def score(ranking: Ranking, decision: Decision, num_solutions: int) -> float:
    """Normalized rank position (n - r) / (n - 1) of the chosen plan.

    Tied plans share their competition rank.  A single-solution mission has
    only one possible choice and scores 1.0.
    """
    if num_solutions < 1:
        raise DomainError(f"num_solutions must be at least 1, got {num_solutions}")
    rank = ranking.rank_of(decision.plan)
    if num_solutions == 1:
        # Degenerate mission: only one choice exists.
        return 1.0
    return (num_solutions - rank) / (num_solutions - 1)


# Decision log --------------------------------------------------------------

_log_lock = threading.Lock()


def append_decision(path: str | Path, decision: Decision) -> None:
    """Append one decision as a JSON line; the write is serialized and flushed."""
    line = json.dumps(asdict(decision), sort_keys=True)
    with _log_lock:
        with open(path, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")
            fh.flush()


def read_decisions(path: str | Path) -> list[Decision]:
    path = Path(path)
    if not path.exists():
        return []
    out = []
    with open(path, encoding="utf-8") as fh:
        for i, line in enumerate(fh):
            line = line.strip()
            if not line:
                continue
            try:
                raw = json.loads(line)
                out.append(Decision(raw["operator"], raw["profile"], raw["mission"],
                                    raw["plan"], raw.get("ts", "")))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise DomainError(f"decision log {path}: bad record on line {i + 1}: {exc}") from None
    return out


def effective_decisions(decisions: Iterable[Decision]) -> list[Decision]:
    """Collapse revisions: the last decision per (operator, profile, mission) wins."""
    latest: dict[tuple[str, str, str], Decision] = {}
    for d in decisions:
        latest[(d.operator, d.profile, d.mission)] = d
    return list(latest.values())


# Aggregation -----------------------------------------------------------------

_GROUP_FIELDS = ("operator", "mission", "profile", "method")


def aggregate_scores(records: Sequence[ScoreRecord],
                     group_by: Sequence[str] = ("method",)) -> list[dict]:
    """Mean, median, population standard deviation and count per group."""
    if not records:
        raise DomainError("no score records to aggregate")
    for g in group_by:
        if g not in _GROUP_FIELDS:
            raise DomainError(f"unknown group-by field {g!r}; expected one of {_GROUP_FIELDS}")
    groups: dict[tuple, list[float]] = {}
    for r in records:
        key = tuple(getattr(r, g) for g in group_by)
        groups.setdefault(key, []).append(r.score)
    rows = []
    for key in sorted(groups):
        values = groups[key]
        row = dict(zip(group_by, key))
        row.update(
            count=len(values),
            mean=statistics.fmean(values),
            median=statistics.median(values),
            sd=statistics.pstdev(values),
        )
        rows.append(row)
    return rows


# Wilcoxon signed-rank ----------------------------------------------------------

def _midranks(values: Sequence[float]) -> list[float]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        mid = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = mid
        i = j + 1
    return ranks


def _exact_two_sided_p(ranks: Sequence[float], w_plus: float) -> float:
    # Doubled ranks are integers even with midrank ties, so the null
    # distribution of 2*W+ over all sign patterns is a small integer DP.
    doubled = [int(round(2 * r)) for r in ranks]
    total = sum(doubled)
    counts = [0] * (total + 1)
    counts[0] = 1
    for d in doubled:
        for s in range(total, d - 1, -1):
            if counts[s - d]:
                counts[s] += counts[s - d]
    target = int(round(2 * w_plus))
    n_patterns = 2 ** len(ranks)
    p_le = sum(counts[: target + 1]) / n_patterns
    p_ge = sum(counts[target:]) / n_patterns
    return min(1.0, 2.0 * min(p_le, p_ge))


def _approx_two_sided_p(ranks: Sequence[float], w_plus: float) -> float:
    n = len(ranks)
    mean = n * (n + 1) / 4.0
    var = n * (n + 1) * (2 * n + 1) / 24.0
    # Tie correction over groups of equal absolute differences.
    seen: dict[float, int] = {}
    for r in ranks:
        seen[r] = seen.get(r, 0) + 1
    for t in seen.values():
        if t > 1:
            var -= (t ** 3 - t) / 48.0
    if var <= 0:
        return 1.0
    delta = w_plus - mean
    z = (delta - 0.5 * math.copysign(1.0, delta)) / math.sqrt(var) if delta != 0 else 0.0
    return math.erfc(abs(z) / math.sqrt(2.0))


def wilcoxon_signed_rank(differences: Sequence[float]) -> tuple[float, float]:
    """Two-sided Wilcoxon signed-rank test on paired differences.

    Returns (W+, p).  Zero differences are dropped; absolute ties receive
    midranks.  With no non-zero differences the test is vacuous and p = 1.
    """
    nonzero = [d for d in differences if d != 0.0]
    if not nonzero:
        return 0.0, 1.0
    ranks = _midranks([abs(d) for d in nonzero])
    w_plus = sum(r for d, r in zip(nonzero, ranks) if d > 0)
    if len(nonzero) <= EXACT_LIMIT:
        p = _exact_two_sided_p(ranks, w_plus)
    else:
        p = _approx_two_sided_p(ranks, w_plus)
    return w_plus, p


# Method comparison ---------------------------------------------------------------

@dataclass(frozen=True)
class MethodComparison:
    method_a: str
    method_b: str
    n_pairs: int
    mean_diff: float
    statistic: float
    p_value: float

    def significant(self, alpha: float = 0.05) -> bool:
        return self.p_value < alpha


def compare_methods(records: Sequence[ScoreRecord], a: str, b: str) -> MethodComparison:
    """Paired comparison of two methods' scores over shared
    (operator, mission, profile) keys."""
    scores: dict[tuple[str, str, str], dict[str, float]] = {}
    for r in records:
        if r.method in (a, b):
            scores.setdefault((r.operator, r.mission, r.profile), {})[r.method] = r.score
    diffs = [per[a] - per[b] for per in scores.values() if a in per and b in per]
    if not diffs:
        raise DomainError(f"no paired records for methods {a!r} and {b!r}")
    w_plus, p = wilcoxon_signed_rank(diffs)
    return MethodComparison(a, b, len(diffs), statistics.fmean(diffs), w_plus, p)


@dataclass(frozen=True)
class ComparisonCell:
    crisp_method: str
    fuzzy_method: str
    mean_diff: float
    p_value: float
    significant: bool


def comparison_matrix(records: Sequence[ScoreRecord], fuzzy_methods: Sequence[str],
                      crisp_methods: Sequence[str], alpha: float = 0.05) -> list[list[ComparisonCell]]:
    """Fuzzy-versus-classical score differences: one row per classical method,
    one column per fuzzy method, flagged at the given significance level."""
    matrix = []
    for crisp_name in crisp_methods:
        row = []
        for fuzzy_name in fuzzy_methods:
            cmp = compare_methods(records, fuzzy_name, crisp_name)
            row.append(ComparisonCell(crisp_name, fuzzy_name, cmp.mean_diff,
                                      cmp.p_value, cmp.p_value < alpha))
        matrix.append(row)
    return matrix
