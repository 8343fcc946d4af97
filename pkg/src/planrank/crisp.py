"""The ten classical ranking methods.

Every method maps (DecisionMatrix, weights or profile, parameters) to a
Ranking.  Criterion direction is consulted explicitly: WSM, WPM, WASPAS and
the linear TOPSIS variant first apply the direction-aware linear (ideal)
normalization, so minimized and maximized criteria are handled uniformly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import ConvergenceError, DomainError, ParameterError
from .model import (
    DecisionMatrix,
    OperatorProfile,
    Ranking,
    WeightVector,
    crisp_weights,
    ranking_from_groups,
    ranking_from_scores,
)

_TIE_REL = 1e-9
_TIE_ABS = 1e-12


# Normalization -------------------------------------------------------------

def linear_normalize(m: DecisionMatrix) -> np.ndarray:
    """Ideal normalization: v/max for maximized, min/v for minimized criteria.

    After this step higher is better on every column.
    """
    out = np.empty((len(m.alternatives), len(m.criteria)))
    for j, crit in enumerate(m.criteria):
        col = np.array([row[j] for row in m.values], dtype=float)
        if crit.minimized:
            if np.any(col <= 0):
                raise DomainError(
                    f"criterion {crit.id!r}: linear normalization of a minimized criterion "
                    f"requires strictly positive values"
                )
            out[:, j] = col.min() / col
        else:
            top = col.max()
            if top == 0:
                raise DomainError(f"criterion {crit.id!r}: maximum value is zero, cannot normalize")
            out[:, j] = col / top
    return out


def vector_normalize(m: DecisionMatrix) -> np.ndarray:
    """Distributive normalization v / sqrt(sum v^2); keeps criterion direction."""
    out = np.empty((len(m.alternatives), len(m.criteria)))
    for j, crit in enumerate(m.criteria):
        col = np.array([row[j] for row in m.values], dtype=float)
        norm = math.sqrt(float(np.sum(col * col)))
        if norm == 0:
            raise DomainError(f"criterion {crit.id!r}: all-zero column cannot be vector-normalized")
        out[:, j] = col / norm
    return out


def _aligned_weights(m: DecisionMatrix, w: WeightVector) -> np.ndarray:
    return np.array(w.aligned(m.criteria), dtype=float)


# WSM / WPM / WASPAS --------------------------------------------------------

def wsm(m: DecisionMatrix, w: WeightVector) -> Ranking:
    """Weighted sum of linear-normalized values, best score first."""
    r = linear_normalize(m)
    weights = _aligned_weights(m, w)
    scores = r @ weights
    return ranking_from_scores("wsm", m.alternatives, scores,
                               metadata={"normalization": "linear"})


def wpm(m: DecisionMatrix, w: WeightVector) -> Ranking:
    """Weighted product of linear-normalized values.

    The ordering agrees with the pairwise ratio test: s_i precedes s_j exactly
    when the direction-aware ratio product P(s_i/s_j) >= 1.
    """
    for alt, row in zip(m.alternatives, m.values):
        for crit, v in zip(m.criteria, row):
            if v <= 0:
                raise DomainError(f"alternative {alt!r}, criterion {crit.id!r}: "
                                  f"weighted product requires strictly positive values")
    r = linear_normalize(m)
    weights = _aligned_weights(m, w)
    scores = np.prod(r ** weights, axis=1)
    return ranking_from_scores("wpm", m.alternatives, scores,
                               metadata={"normalization": "linear"})


def waspas(m: DecisionMatrix, w: WeightVector, lam: float = 0.5) -> Ranking:
    """Joint additive/multiplicative criterion Q = lam*WSM + (1-lam)*WPM."""
    if not (0.0 <= lam <= 1.0):
        raise ParameterError(f"lambda must lie in [0, 1], got {lam}")
    r = linear_normalize(m)
    weights = _aligned_weights(m, w)
    additive = r @ weights
    if lam < 1.0:
        if np.any(r == 0):
            raise DomainError("zero normalized value: multiplicative half of WASPAS undefined")
        multiplicative = np.prod(r ** weights, axis=1)
    else:
        multiplicative = np.zeros(len(m.alternatives))
    scores = lam * additive + (1.0 - lam) * multiplicative
    return ranking_from_scores("waspas", m.alternatives, scores,
                               metadata={"lambda": lam, "normalization": "linear"})


# AHP -----------------------------------------------------------------------

def priority_vector(matrix: np.ndarray, *, tol: float = 1e-9, max_iter: int = 10_000) -> np.ndarray:
    """Principal eigenvector of a positive pairwise-comparison matrix.

    Power iteration, normalized to sum 1; convergence when successive vectors
    differ by less than ``tol`` in max-norm.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ParameterError("comparison matrix must be square")
    if np.any(a <= 0):
        raise DomainError("comparison matrix entries must be strictly positive")
    n = a.shape[0]
    x = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        y = a @ x
        y = y / y.sum()
        residual = float(np.max(np.abs(y - x)))
        if residual < tol:
            return y
        x = y
    raise ConvergenceError(
        f"power iteration did not converge within {max_iter} iterations "
        f"(last residual {residual:.3e}, size {n})"
    )


def comparison_matrices(m: DecisionMatrix, profile: OperatorProfile) -> tuple[np.ndarray, list[np.ndarray]]:
    """Pairwise comparison matrices: criteria from degree ratios, alternatives
    from the 1-9 scale over per-criterion value ranges."""
    degrees = profile.degrees_for(m.criteria)
    ids = m.criterion_ids
    k = len(ids)
    crit_matrix = np.empty((k, k))
    for i in range(k):
        for j in range(k):
            crit_matrix[i, j] = int(degrees[ids[i]]) / int(degrees[ids[j]])
    alt_matrices = [_alternative_matrix(m, j) for j in range(k)]
    return crit_matrix, alt_matrices


def saaty_scale(advantage: float) -> int:
    """Map a normalized advantage in [0, 1] onto the 1-9 comparison scale."""
    return int(min(9, max(1, round(1 + 8 * advantage))))


def _alternative_matrix(m: DecisionMatrix, j: int) -> np.ndarray:
    crit = m.criteria[j]
    col = [row[j] for row in m.values]
    lo, hi = min(col), max(col)
    rng = hi - lo
    n = len(col)
    a = np.ones((n, n))
    if rng == 0:
        return a
    for p in range(n):
        for q in range(p + 1, n):
            if col[p] == col[q]:
                continue
            value = saaty_scale(abs(col[p] - col[q]) / rng)
            p_better = col[p] < col[q] if crit.minimized else col[p] > col[q]
            if p_better:
                a[p, q] = value
                a[q, p] = 1.0 / value
            else:
                a[q, p] = value
                a[p, q] = 1.0 / value
    return a


def ahp_from_matrices(alternatives: Sequence[str], crit_matrix: np.ndarray,
                      alt_matrices: Sequence[np.ndarray]) -> Ranking:
    """Rank from explicit comparison matrices: eigenvector priorities at both
    levels, additive aggregation."""
    weights = priority_vector(crit_matrix)
    priorities = np.column_stack([priority_vector(a) for a in alt_matrices])
    scores = priorities @ weights
    return ranking_from_scores("ahp", alternatives, scores,
                               metadata={"aggregation": "additive", "scale": "1-9"})


def ahp(m: DecisionMatrix, profile: OperatorProfile) -> Ranking:
    """Eigenvector AHP: criteria weights from degree ratios, alternative
    priorities per criterion from 1-9 pairwise matrices, additive aggregation."""
    if len(m.alternatives) < 2:
        raise DomainError("AHP needs at least two alternatives to compare")
    crit_matrix, alt_matrices = comparison_matrices(m, profile)
    return ahp_from_matrices(m.alternatives, crit_matrix, alt_matrices)


# VIKOR -----------------------------------------------------------------------

def vikor(m: DecisionMatrix, w: WeightVector, v: float = 0.5) -> Ranking:
    """Compromise ranking by ascending Q; S/R/Q vectors kept in metadata."""
    if not (0.0 <= v <= 1.0):
        raise ParameterError(f"v must lie in [0, 1], got {v}")
    weights = _aligned_weights(m, w)
    n = len(m.alternatives)
    terms = np.zeros((n, len(m.criteria)))
    degenerate: list[str] = []
    for j, crit in enumerate(m.criteria):
        col = np.array([row[j] for row in m.values], dtype=float)
        best = col.min() if crit.minimized else col.max()
        worst = col.max() if crit.minimized else col.min()
        if best == worst:
            degenerate.append(crit.id)
            continue
        terms[:, j] = weights[j] * (best - col) / (best - worst)
    s = terms.sum(axis=1)
    r = terms.max(axis=1)
    s_best, s_worst = s.min(), s.max()
    r_best, r_worst = r.min(), r.max()
    q = np.zeros(n)
    if s_worst != s_best:
        q += v * (s - s_best) / (s_worst - s_best)
    if r_worst != r_best:
        q += (1.0 - v) * (r - r_best) / (r_worst - r_best)
    metadata = {
        "v": v,
        "S": {a: float(x) for a, x in zip(m.alternatives, s)},
        "R": {a: float(x) for a, x in zip(m.alternatives, r)},
        "Q": {a: float(x) for a, x in zip(m.alternatives, q)},
        "degenerate_criteria": degenerate,
    }
    return ranking_from_scores("vikor", m.alternatives, q, higher_is_better=False,
                               metadata=metadata)


# TOPSIS ----------------------------------------------------------------------

def topsis(m: DecisionMatrix, w: WeightVector, norm: str = "vector") -> Ranking:
    """Closeness to the ideal solution under vector or linear normalization."""
    if norm not in ("vector", "linear"):
        raise ParameterError(f"norm must be 'vector' or 'linear', got {norm!r}")
    weights = _aligned_weights(m, w)
    if norm == "vector":
        r = vector_normalize(m)
        higher_better = [not c.minimized for c in m.criteria]
    else:
        r = linear_normalize(m)
        higher_better = [True] * len(m.criteria)
    x = r * weights
    ideal = np.array([x[:, j].max() if higher_better[j] else x[:, j].min()
                      for j in range(x.shape[1])])
    anti = np.array([x[:, j].min() if higher_better[j] else x[:, j].max()
                     for j in range(x.shape[1])])
    d_plus = np.sqrt(((x - ideal) ** 2).sum(axis=1))
    d_minus = np.sqrt(((x - anti) ** 2).sum(axis=1))
    total = d_plus + d_minus
    closeness = np.where(total == 0, 0.5, d_minus / np.where(total == 0, 1.0, total))
    return ranking_from_scores(f"topsis_{norm}", m.alternatives, closeness,
                               metadata={"normalization": norm})


# ELECTRE III -----------------------------------------------------------------

@dataclass(frozen=True)
class CriterionThresholds:
    q: float
    p: float
    v: float

    def __post_init__(self):
        if not (0 <= self.q <= self.p <= self.v):
            raise ParameterError(f"thresholds must satisfy 0 <= q <= p <= v, got {self}")


@dataclass(frozen=True)
class ElectreThresholds:
    per_criterion: Mapping[str, CriterionThresholds]

    @classmethod
    def build(cls, table: Mapping[str, tuple[float, float, float]]) -> "ElectreThresholds":
        return cls({cid: CriterionThresholds(*t) for cid, t in table.items()})

    def aligned(self, m: DecisionMatrix) -> list[CriterionThresholds]:
        out = []
        for c in m.criteria:
            if c.id not in self.per_criterion:
                raise ParameterError(f"no ELECTRE thresholds for criterion {c.id!r}")
            out.append(self.per_criterion[c.id])
        return out


def electre_credibility(m: DecisionMatrix, w: WeightVector, t: ElectreThresholds) -> np.ndarray:
    """Outranking credibility matrix S(a, b).

    Partial concordance/discordance interpolate linearly between the
    indifference/preference and preference/veto thresholds; the credibility
    discounts concordance by every criterion whose discordance exceeds it.
    """
    weights = _aligned_weights(m, w)
    weights = weights / weights.sum()
    thresholds = t.aligned(m)
    n = len(m.alternatives)
    cred = np.ones((n, n))
    for ai in range(n):
        for bi in range(n):
            if ai == bi:
                continue
            concord = 0.0
            discords = []
            for j, (crit, th) in enumerate(zip(m.criteria, thresholds)):
                va, vb = m.values[ai][j], m.values[bi][j]
                # Advantage of b over a in the criterion's better direction.
                delta = (va - vb) if crit.minimized else (vb - va)
                if delta <= th.q:
                    c = 1.0
                elif delta >= th.p:
                    c = 0.0
                else:
                    c = (th.p - delta) / (th.p - th.q)
                concord += weights[j] * c
                if delta <= th.p:
                    d = 0.0
                elif delta >= th.v:
                    d = 1.0
                else:
                    d = (delta - th.p) / (th.v - th.p)
                discords.append(d)
            s = concord
            if concord < 1.0:
                for d in discords:
                    if d > concord:
                        s *= (1.0 - d) / (1.0 - concord)
            cred[ai, bi] = s
    return cred


def _discrimination(lam: float) -> float:
    return 0.3 - 0.15 * lam


def _qualifications(cred: np.ndarray, pool: Sequence[int], lam: float) -> dict[int, int]:
    s_lam = _discrimination(lam)
    cut = lam - s_lam
    strength = {a: 0 for a in pool}
    for a, b in itertools.permutations(pool, 2):
        if cred[a, b] > cut and cred[a, b] - cred[b, a] > s_lam:
            strength[a] += 1
            strength[b] -= 1
    return strength


def _extract_class(cred: np.ndarray, pool: Sequence[int], descending: bool) -> list[int]:
    current = list(pool)
    lam = max((cred[a, b] for a, b in itertools.permutations(current, 2)), default=0.0)
    while True:
        quals = _qualifications(cred, current, lam)
        target = max(quals.values()) if descending else min(quals.values())
        candidates = [a for a in current if quals[a] == target]
        if len(candidates) == 1:
            return candidates
        cut = lam - _discrimination(lam)
        inner = [cred[a, b] for a, b in itertools.permutations(candidates, 2) if cred[a, b] < cut]
        if not inner:
            return candidates
        lam = max(inner)
        current = candidates


def _distill(cred: np.ndarray, n: int, descending: bool) -> list[list[int]]:
    remaining = list(range(n))
    classes = []
    while remaining:
        cls = _extract_class(cred, remaining, descending)
        classes.append(sorted(cls))
        remaining = [i for i in remaining if i not in cls]
    return classes


def electre3(m: DecisionMatrix, w: WeightVector, t: ElectreThresholds) -> Ranking:
    """Outranking by descending/ascending distillation of the credibility matrix.

    The two pre-orders are linearized by the mean of their class ranks;
    incomparable pairs (opposite order in the two distillations) are recorded
    in metadata.
    """
    cred = electre_credibility(m, w, t)
    n = len(m.alternatives)
    desc = _distill(cred, n, descending=True)
    asc = _distill(cred, n, descending=False)
    rank_desc = {}
    for level, cls in enumerate(desc, start=1):
        for i in cls:
            rank_desc[i] = level
    rank_asc = {}
    for level, cls in enumerate(asc):
        for i in cls:
            rank_asc[i] = len(asc) - level
    mean_rank = [(rank_desc[i] + rank_asc[i]) / 2.0 for i in range(n)]
    incomparable = [
        [m.alternatives[a], m.alternatives[b]]
        for a, b in itertools.combinations(range(n), 2)
        if (rank_desc[a] - rank_desc[b]) * (rank_asc[a] - rank_asc[b]) < 0
    ]
    metadata = {
        "credibility": [[float(x) for x in row] for row in cred],
        "descending_classes": [[m.alternatives[i] for i in cls] for cls in desc],
        "ascending_classes": [[m.alternatives[i] for i in cls] for cls in asc],
        "incomparable_pairs": incomparable,
        "score_kind": "mean_distillation_rank",
    }
    return ranking_from_scores("electre3", m.alternatives, mean_rank,
                               higher_is_better=False, metadata=metadata)


# MULTIMOORA ------------------------------------------------------------------

def dominance_order(sub_ranks: Sequence[Mapping[str, int]], alternatives: Sequence[str]) -> tuple[list[list[str]], dict[str, int]]:
    """Aggregate sub-rankings by dominance counting.

    ``a`` dominates ``b`` when its rank is no worse in every sub-ranking and
    strictly better in at least one.  Order: dominated count descending, then
    sum of sub-ranks, then first sub-ranking's rank; equal keys tie.
    """
    counts = {}
    for a in alternatives:
        counts[a] = sum(
            1 for b in alternatives if b != a
            and all(sr[a] <= sr[b] for sr in sub_ranks)
            and any(sr[a] < sr[b] for sr in sub_ranks)
        )
    keys = {a: (-counts[a], sum(sr[a] for sr in sub_ranks), sub_ranks[0][a]) for a in alternatives}
    index = {a: i for i, a in enumerate(alternatives)}
    ordered = sorted(alternatives, key=lambda a: (*keys[a], index[a]))
    groups: list[list[str]] = []
    for a in ordered:
        if groups and keys[groups[-1][0]] == keys[a]:
            groups[-1].append(a)
        else:
            groups.append([a])
    return groups, counts


def multimoora(m: DecisionMatrix, w: WeightVector) -> Ranking:
    """Ratio system, reference point and full multiplicative form combined by
    dominance counting."""
    for alt, row in zip(m.alternatives, m.values):
        for crit, v in zip(m.criteria, row):
            if v <= 0:
                raise DomainError(f"alternative {alt!r}, criterion {crit.id!r}: "
                                  f"the multiplicative form requires strictly positive values")
    weights = _aligned_weights(m, w)
    r = vector_normalize(m)
    maxed = np.array([not c.minimized for c in m.criteria])

    ratio = (r[:, maxed] * weights[maxed]).sum(axis=1) - (r[:, ~maxed] * weights[~maxed]).sum(axis=1)
    ratio_ranking = ranking_from_scores("multimoora/ratio", m.alternatives, ratio)

    reference = np.array([r[:, j].max() if not m.criteria[j].minimized else r[:, j].min()
                          for j in range(len(m.criteria))])
    deviation = np.max(np.abs(weights * reference - weights * r), axis=1)
    refpoint_ranking = ranking_from_scores("multimoora/refpoint", m.alternatives, deviation,
                                           higher_is_better=False)

    raw = np.array(m.values, dtype=float)
    numer = np.prod(raw[:, maxed], axis=1) if maxed.any() else np.ones(len(m.alternatives))
    denom = np.prod(raw[:, ~maxed], axis=1) if (~maxed).any() else np.ones(len(m.alternatives))
    multiplicative = numer / denom
    mult_ranking = ranking_from_scores("multimoora/multiplicative", m.alternatives, multiplicative)

    sub_ranks = [{e.alternative: e.rank for e in rk.entries}
                 for rk in (ratio_ranking, refpoint_ranking, mult_ranking)]
    groups, counts = dominance_order(sub_ranks, m.alternatives)
    metadata = {
        "ratio_scores": {a: float(x) for a, x in zip(m.alternatives, ratio)},
        "refpoint_deviations": {a: float(x) for a, x in zip(m.alternatives, deviation)},
        "multiplicative_scores": {a: float(x) for a, x in zip(m.alternatives, multiplicative)},
        "sub_rankings": {
            "ratio": sub_ranks[0],
            "reference_point": sub_ranks[1],
            "multiplicative": sub_ranks[2],
        },
    }
    return ranking_from_groups("multimoora", groups,
                               scores={a: float(counts[a]) for a in m.alternatives},
                               metadata=metadata)


# RIM -------------------------------------------------------------------------

@dataclass(frozen=True)
class CriterionRimParams:
    range_min: float  # A
    range_max: float  # B
    ideal_min: float  # C
    ideal_max: float  # D

    def __post_init__(self):
        if not (self.range_min <= self.ideal_min <= self.ideal_max <= self.range_max):
            raise ParameterError(f"RIM parameters must satisfy A <= C <= D <= B, got {self}")


@dataclass(frozen=True)
class RimParams:
    per_criterion: Mapping[str, CriterionRimParams]

    @classmethod
    def build(cls, table: Mapping[str, tuple[float, float, float, float]]) -> "RimParams":
        return cls({cid: CriterionRimParams(*t) for cid, t in table.items()})

    def aligned(self, m: DecisionMatrix) -> list[CriterionRimParams]:
        out = []
        for c in m.criteria:
            if c.id not in self.per_criterion:
                raise ParameterError(f"no RIM parameters for criterion {c.id!r}")
            out.append(self.per_criterion[c.id])
        return out


def rim_normalize(value: float, p: CriterionRimParams) -> float:
    if p.ideal_min <= value <= p.ideal_max:
        return 1.0
    gap = min(abs(value - p.ideal_min), abs(value - p.ideal_max))
    if p.range_min <= value < p.ideal_min:
        return 1.0 - gap / abs(p.range_min - p.ideal_min)
    if p.ideal_max < value <= p.range_max:
        return 1.0 - gap / abs(p.ideal_max - p.range_max)
    raise DomainError(f"value {value} outside the universe [{p.range_min}, {p.range_max}]")


def rim(m: DecisionMatrix, w: WeightVector, params: RimParams) -> Ranking:
    """Reference ideal method: closeness between the weighted normalized row
    and the normalized reference ideal."""
    weights = _aligned_weights(m, w)
    aligned = params.aligned(m)
    n = len(m.alternatives)
    y = np.empty((n, len(m.criteria)))
    for i, (alt, row) in enumerate(zip(m.alternatives, m.values)):
        for j, (crit, p) in enumerate(zip(m.criteria, aligned)):
            try:
                y[i, j] = rim_normalize(row[j], p)
            except DomainError as exc:
                raise DomainError(f"alternative {alt!r}, criterion {crit.id!r}: {exc}") from None
    weighted = y * weights
    i_plus = np.sqrt(((weighted - weights) ** 2).sum(axis=1))
    i_minus = np.sqrt((weighted ** 2).sum(axis=1))
    scores = i_minus / (i_plus + i_minus)
    return ranking_from_scores("rim", m.alternatives, scores)
