"""Shared random-instance builders for the test suite."""

import numpy as np
import pytest

from planrank.model import Criterion, DecisionMatrix, ImportanceDegree, OperatorProfile, WeightVector


def random_matrix(rng: np.random.Generator, n_alts: int, n_crits: int,
                  directions=None, low: float = 1.0, high: float = 10.0) -> DecisionMatrix:
    if directions is None:
        directions = ["minimize" if rng.random() < 0.5 else "maximize" for _ in range(n_crits)]
    criteria = [Criterion(f"c{j}", f"C{j}", directions[j]) for j in range(n_crits)]
    values = rng.uniform(low, high, size=(n_alts, n_crits))
    return DecisionMatrix.build(criteria, [f"alt{i}" for i in range(n_alts)], values.tolist())


def random_weights(rng: np.random.Generator, matrix: DecisionMatrix) -> WeightVector:
    raw = rng.uniform(0.2, 1.0, size=len(matrix.criteria))
    raw = raw / raw.sum()
    return WeightVector({c.id: float(w) for c, w in zip(matrix.criteria, raw)})


def random_profile(rng: np.random.Generator, matrix: DecisionMatrix, name="rand") -> OperatorProfile:
    return OperatorProfile(name, {
        c.id: ImportanceDegree(int(rng.integers(1, 6))) for c in matrix.criteria
    })


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
