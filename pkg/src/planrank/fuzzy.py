"""Fuzzy ranking methods over crisp decision matrices with TFN weights.

Crisp performance values are lifted to degenerate TFNs at the boundary; only
the weights (and, for fuzzy AHP, the pairwise comparisons) carry genuine
fuzziness.  With degenerate weights every method reduces to its crisp
counterpart's ordering, which the test suite uses as the master oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import tfn as ft
from .crisp import dominance_order
from .errors import DomainError, ParameterError
from .model import (
    DecisionMatrix,
    OperatorProfile,
    Ranking,
    fuzzy_weights,
    ranking_from_groups,
    ranking_from_scores,
)
from .tfn import Tfn


@dataclass(frozen=True)
class FuzzyWeightVector:
    weights: Mapping[str, Tfn]

    def __post_init__(self):
        for cid, w in self.weights.items():
            if w.a1 < 0 or w.a3 > 1:
                raise ParameterError(f"fuzzy weight for {cid!r} must have support within [0, 1], got {w}")

    @classmethod
    def from_profile(cls, profile: OperatorProfile, criteria) -> "FuzzyWeightVector":
        return cls(fuzzy_weights(profile, criteria))

    @classmethod
    def degenerate(cls, weights: Mapping[str, float]) -> "FuzzyWeightVector":
        return cls({cid: ft.crisp(w) for cid, w in weights.items()})

    def aligned(self, m: DecisionMatrix) -> list[Tfn]:
        out = []
        for c in m.criteria:
            if c.id not in self.weights:
                raise DomainError(f"fuzzy weight vector has no entry for criterion {c.id!r}")
            out.append(self.weights[c.id])
        return out


def _lift_matrix(m: DecisionMatrix) -> list[list[Tfn]]:
    return [[ft.crisp(v) for v in row] for row in m.values]


def _fuzzy_vector_normalize(m: DecisionMatrix) -> list[list[Tfn]]:
    """Vector normalization with column norms taken from vertex distances to zero."""
    lifted = _lift_matrix(m)
    zero = ft.crisp(0.0)
    cols = len(m.criteria)
    out = [[None] * cols for _ in m.alternatives]
    for j, crit in enumerate(m.criteria):
        norm = math.sqrt(sum(ft.distance(lifted[i][j], zero) ** 2 for i in range(len(lifted))))
        if norm == 0:
            raise DomainError(f"criterion {crit.id!r}: all-zero column cannot be vector-normalized")
        for i in range(len(lifted)):
            out[i][j] = ft.scale(1.0 / norm, lifted[i][j])
    return out


def _fuzzy_linear_normalize(m: DecisionMatrix) -> list[list[Tfn]]:
    """Ideal normalization: the fuzzy max is the largest a3, the fuzzy min the
    smallest a1 of the column."""
    lifted = _lift_matrix(m)
    cols = len(m.criteria)
    out = [[None] * cols for _ in m.alternatives]
    for j, crit in enumerate(m.criteria):
        column = [lifted[i][j] for i in range(len(lifted))]
        if crit.minimized:
            smallest = min(t.a1 for t in column)
            if any(t.a1 <= 0 for t in column):
                raise DomainError(
                    f"criterion {crit.id!r}: linear normalization of a minimized criterion "
                    f"requires strictly positive values"
                )
            for i, t in enumerate(column):
                out[i][j] = ft.div(ft.crisp(smallest), t)
        else:
            largest = max(t.a3 for t in column)
            if largest <= 0:
                raise DomainError(f"criterion {crit.id!r}: maximum value is zero, cannot normalize")
            for i, t in enumerate(column):
                out[i][j] = ft.scale(1.0 / largest, t)
    return out


def _componentwise_min(ts: Sequence[Tfn]) -> Tfn:
    return Tfn(min(t.a1 for t in ts), min(t.a2 for t in ts), min(t.a3 for t in ts))


def _componentwise_max(ts: Sequence[Tfn]) -> Tfn:
    return Tfn(max(t.a1 for t in ts), max(t.a2 for t in ts), max(t.a3 for t in ts))


def _sum(ts: Sequence[Tfn]) -> Tfn:
    acc = ft.crisp(0.0)
    for t in ts:
        acc = ft.add(acc, t)
    return acc


# Fuzzy AHP -------------------------------------------------------------------

def fuzzy_priority_vector(matrix: Sequence[Sequence[Tfn]]) -> list[Tfn]:
    """Fuzzy geometric-mean weights of a TFN pairwise-comparison matrix.

    Lower bounds divide by the sum of upper geometric means and vice versa,
    so each weight is a valid TFN.
    """
    p = len(matrix)
    if p == 0 or any(len(row) != p for row in matrix):
        raise ParameterError("fuzzy comparison matrix must be square and non-empty")
    for row in matrix:
        for entry in row:
            if entry.a1 <= 0:
                raise DomainError(f"fuzzy comparison entries must be strictly positive, got {entry}")
    g1 = [math.prod(row[j].a1 for j in range(p)) ** (1.0 / p) for row in matrix]
    g2 = [math.prod(row[j].a2 for j in range(p)) ** (1.0 / p) for row in matrix]
    g3 = [math.prod(row[j].a3 for j in range(p)) ** (1.0 / p) for row in matrix]
    return [Tfn(g1[i] / sum(g3), g2[i] / sum(g2), g3[i] / sum(g1)) for i in range(p)]


def criteria_tfn_matrix(m: DecisionMatrix, profile: OperatorProfile) -> list[list[Tfn]]:
    """Criteria comparisons as ratios of linguistic-scale TFNs; equal degrees
    compare as the crisp 1."""
    from .model import DEGREE_TFN

    degrees = profile.degrees_for(m.criteria)
    ids = m.criterion_ids
    out = []
    for i in ids:
        row = []
        for j in ids:
            if degrees[i] == degrees[j]:
                row.append(ft.crisp(1.0))
            else:
                row.append(ft.div(DEGREE_TFN[degrees[i]], DEGREE_TFN[degrees[j]]))
        out.append(row)
    return out


def alternative_tfn_matrices(m: DecisionMatrix) -> list[list[list[Tfn]]]:
    """Per-criterion alternative comparisons: the crisp 1-9 value n becomes
    (n-1, n, n+1) clipped to [1, 9]; n = 1 comparisons stay crisp."""
    from .crisp import saaty_scale

    out = []
    for j, crit in enumerate(m.criteria):
        col = [row[j] for row in m.values]
        lo_v, hi_v = min(col), max(col)
        rng = hi_v - lo_v
        n = len(col)
        fuzzy_mat = [[ft.crisp(1.0)] * n for _ in range(n)]
        if rng == 0:
            out.append(fuzzy_mat)
            continue
        for p in range(n):
            for q in range(p + 1, n):
                if col[p] == col[q]:
                    continue
                value = saaty_scale(abs(col[p] - col[q]) / rng)
                if value == 1:
                    continue
                p_better = col[p] < col[q] if crit.minimized else col[p] > col[q]
                hi, lo = (p, q) if p_better else (q, p)
                spread = Tfn(max(1.0, value - 1.0), float(value), min(9.0, value + 1.0))
                fuzzy_mat[hi][lo] = spread
                fuzzy_mat[lo][hi] = ft.div(ft.crisp(1.0), spread)
        out.append(fuzzy_mat)
    return out


def fuzzy_ahp_from_matrices(alternatives: Sequence[str], crit_matrix: Sequence[Sequence[Tfn]],
                            alt_matrices: Sequence[Sequence[Sequence[Tfn]]],
                            metadata: Mapping[str, object] | None = None) -> Ranking:
    """Rank from explicit TFN comparison matrices via geometric-mean weights,
    TFN aggregation and the Chen comparator."""
    weights = fuzzy_priority_vector(crit_matrix)
    priorities = [fuzzy_priority_vector(a) for a in alt_matrices]
    globals_ = []
    for s in range(len(alternatives)):
        globals_.append(_sum([ft.mul(w, pr[s]) for w, pr in zip(weights, priorities)]))
    utilities = ft.chen_utilities(globals_)
    meta = dict(metadata or {})
    meta.setdefault("comparator", "chen maximizing/minimizing set, symmetric")
    meta["fuzzy_priorities"] = {a: globals_[i].as_tuple() for i, a in enumerate(alternatives)}
    return ranking_from_scores("fuzzy_ahp", alternatives, utilities, metadata=meta)


def fuzzy_ahp(m: DecisionMatrix, profile: OperatorProfile) -> Ranking:
    if len(m.alternatives) < 2:
        raise DomainError("fuzzy AHP needs at least two alternatives to compare")
    crit_matrix = criteria_tfn_matrix(m, profile)
    alt_matrices = alternative_tfn_matrices(m)
    return fuzzy_ahp_from_matrices(m.alternatives, crit_matrix, alt_matrices)


# Fuzzy VIKOR -------------------------------------------------------------------

def fuzzy_vikor(m: DecisionMatrix, fw: FuzzyWeightVector, v: float = 0.5) -> Ranking:
    """Fuzzy S/R/Q with widening subtraction, widened span denominators and
    second-weighted-mean defuzzification; ascending crisp Q."""
    if not (0.0 <= v <= 1.0):
        raise ParameterError(f"v must lie in [0, 1], got {v}")
    weights = fw.aligned(m)
    lifted = _lift_matrix(m)
    n = len(m.alternatives)
    degenerate: list[str] = []
    terms: list[list[Tfn]] = [[] for _ in range(n)]
    for j, crit in enumerate(m.criteria):
        column = [lifted[i][j] for i in range(n)]
        best = _componentwise_min(column) if crit.minimized else _componentwise_max(column)
        worst = _componentwise_max(column) if crit.minimized else _componentwise_min(column)
        span = best.a3 - worst.a1
        if span == 0:
            degenerate.append(crit.id)
            for i in range(n):
                terms[i].append(ft.crisp(0.0))
            continue
        for i in range(n):
            diff = ft.scale_signed(1.0 / span, ft.sub(best, column[i]))
            terms[i].append(ft.mul(weights[j], diff))
    s = [_sum(terms[i]) for i in range(n)]
    r = [_componentwise_max(terms[i]) for i in range(n)]
    q: list[Tfn] = []
    s_best, s_span = _componentwise_min(s), _componentwise_max(s).a3 - _componentwise_min(s).a1
    r_best, r_span = _componentwise_min(r), _componentwise_max(r).a3 - _componentwise_min(r).a1
    for i in range(n):
        acc = ft.crisp(0.0)
        if s_span != 0:
            acc = ft.add(acc, ft.scale(v, ft.scale_signed(1.0 / s_span, ft.sub(s[i], s_best))))
        if r_span != 0:
            acc = ft.add(acc, ft.scale(1.0 - v, ft.scale_signed(1.0 / r_span, ft.sub(r[i], r_best))))
        q.append(acc)
    scores = [ft.defuzz_weighted_mean2(t) for t in q]
    metadata = {
        "v": v,
        "S": {a: s[i].as_tuple() for i, a in enumerate(m.alternatives)},
        "R": {a: r[i].as_tuple() for i, a in enumerate(m.alternatives)},
        "Q": {a: q[i].as_tuple() for i, a in enumerate(m.alternatives)},
        "degenerate_criteria": degenerate,
        "defuzzifier": "second_weighted_mean",
        "denominator": "largest support value of worst minus smallest of best",
    }
    return ranking_from_scores("fuzzy_vikor", m.alternatives, scores,
                               higher_is_better=False, metadata=metadata)


# Fuzzy TOPSIS ------------------------------------------------------------------

def fuzzy_topsis(m: DecisionMatrix, fw: FuzzyWeightVector, norm: str = "vector") -> Ranking:
    """Closeness to the fuzzy (1,1,1) / (0,0,0) corners with per-criterion
    vertex distances summed.

    The corners are direction-aware: linear normalization already inverts
    minimized criteria so every column's ideal is (1,1,1), while under vector
    normalization a minimized column keeps its orientation and its ideal is
    the (0,0,0) corner instead.
    """
    if norm not in ("vector", "linear"):
        raise ParameterError(f"norm must be 'vector' or 'linear', got {norm!r}")
    weights = fw.aligned(m)
    if norm == "vector":
        normalized = _fuzzy_vector_normalize(m)
        higher_better = [not c.minimized for c in m.criteria]
    else:
        normalized = _fuzzy_linear_normalize(m)
        higher_better = [True] * len(m.criteria)
    one = ft.crisp(1.0)
    zero = ft.crisp(0.0)
    ideal = [one if hb else zero for hb in higher_better]
    anti = [zero if hb else one for hb in higher_better]
    closeness = []
    for i in range(len(m.alternatives)):
        weighted = [ft.mul(weights[j], normalized[i][j]) for j in range(len(m.criteria))]
        d_plus = sum(ft.distance(x, ideal[j]) for j, x in enumerate(weighted))
        d_minus = sum(ft.distance(x, anti[j]) for j, x in enumerate(weighted))
        total = d_plus + d_minus
        closeness.append(0.5 if total == 0 else d_minus / total)
    return ranking_from_scores(f"fuzzy_topsis_{norm}", m.alternatives, closeness,
                               metadata={"normalization": norm,
                                         "corners": "direction-aware unit corners"})


# Fuzzy MULTIMOORA ----------------------------------------------------------------

def fuzzy_multimoora(m: DecisionMatrix, fw: FuzzyWeightVector) -> Ranking:
    """Fuzzy ratio system, reference point and multiplicative form, defuzzified
    with best nonfuzzy performance, combined by dominance counting."""
    for alt, row in zip(m.alternatives, m.values):
        for crit, v in zip(m.criteria, row):
            if v <= 0:
                raise DomainError(f"alternative {alt!r}, criterion {crit.id!r}: "
                                  f"the multiplicative form requires strictly positive values")
    weights = fw.aligned(m)
    normalized = _fuzzy_vector_normalize(m)
    n = len(m.alternatives)
    maxed = [not c.minimized for c in m.criteria]

    ratio_scores = []
    for i in range(n):
        gains = [ft.mul(weights[j], normalized[i][j]) for j in range(len(m.criteria)) if maxed[j]]
        losses = [ft.mul(weights[j], normalized[i][j]) for j in range(len(m.criteria)) if not maxed[j]]
        ratio_scores.append(ft.defuzz_bnp(ft.sub(_sum(gains), _sum(losses))))
    ratio_ranking = ranking_from_scores("fuzzy_multimoora/ratio", m.alternatives, ratio_scores)

    deviations = []
    reference = []
    for j in range(len(m.criteria)):
        column = [normalized[i][j] for i in range(n)]
        reference.append(_componentwise_max(column) if maxed[j] else _componentwise_min(column))
    for i in range(n):
        deviations.append(max(
            ft.distance(ft.mul(weights[j], reference[j]), ft.mul(weights[j], normalized[i][j]))
            for j in range(len(m.criteria))
        ))
    refpoint_ranking = ranking_from_scores("fuzzy_multimoora/refpoint", m.alternatives, deviations,
                                           higher_is_better=False)

    lifted = _lift_matrix(m)
    mult_scores = []
    for i in range(n):
        numer = ft.crisp(1.0)
        denom = ft.crisp(1.0)
        for j in range(len(m.criteria)):
            if maxed[j]:
                numer = ft.mul(numer, lifted[i][j])
            else:
                denom = ft.mul(denom, lifted[i][j])
        mult_scores.append(ft.defuzz_bnp(ft.div(numer, denom)))
    mult_ranking = ranking_from_scores("fuzzy_multimoora/multiplicative", m.alternatives, mult_scores)

    sub_ranks = [{e.alternative: e.rank for e in rk.entries}
                 for rk in (ratio_ranking, refpoint_ranking, mult_ranking)]
    groups, counts = dominance_order(sub_ranks, m.alternatives)
    metadata = {
        "ratio_scores": dict(zip(m.alternatives, ratio_scores)),
        "refpoint_deviations": dict(zip(m.alternatives, deviations)),
        "multiplicative_scores": dict(zip(m.alternatives, mult_scores)),
        "sub_rankings": {
            "ratio": sub_ranks[0],
            "reference_point": sub_ranks[1],
            "multiplicative": sub_ranks[2],
        },
        "defuzzifier": "best_nonfuzzy_performance",
    }
    return ranking_from_groups("fuzzy_multimoora", groups,
                               scores={a: float(counts[a]) for a in m.alternatives},
                               metadata=metadata)


# Fuzzy WASPAS --------------------------------------------------------------------

def fuzzy_waspas(m: DecisionMatrix, fw: FuzzyWeightVector, lam: float = 0.5) -> Ranking:
    """Centroid-defuzzified fuzzy WSM and WPM joined as Q = lam*wsm + (1-lam)*wpm."""
    if not (0.0 <= lam <= 1.0):
        raise ParameterError(f"lambda must lie in [0, 1], got {lam}")
    weights = fw.aligned(m)
    normalized = _fuzzy_linear_normalize(m)
    n = len(m.alternatives)
    additive = []
    for i in range(n):
        additive.append(ft.defuzz_centroid(_sum(
            [ft.mul(weights[j], normalized[i][j]) for j in range(len(m.criteria))]
        )))
    if lam < 1.0:
        multiplicative = []
        for i in range(n):
            acc = ft.crisp(1.0)
            for j in range(len(m.criteria)):
                acc = ft.mul(acc, ft.pow(normalized[i][j], weights[j]))
            multiplicative.append(ft.defuzz_centroid(acc))
    else:
        multiplicative = [0.0] * n
    scores = [lam * a + (1.0 - lam) * p for a, p in zip(additive, multiplicative)]
    return ranking_from_scores("fuzzy_waspas", m.alternatives, scores,
                               metadata={"lambda": lam, "defuzzifier": "centroid"})
