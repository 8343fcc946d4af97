"""Decision support engine for multi-UAV mission plan selection.

Ranks Pareto-optimal mission plans under operator preference profiles with
ten classical and six fuzzy multi-criteria methods, filters near-duplicate
plans by assignment similarity, and scores rankings against recorded human
decisions.
"""

from .crisp import (
    CriterionRimParams,
    CriterionThresholds,
    ElectreThresholds,
    RimParams,
    ahp,
    electre3,
    multimoora,
    rim,
    topsis,
    vikor,
    waspas,
    wpm,
    wsm,
)
from .datasets import DatasetMeta, MissionDataset, generate_all, generate_dataset, ingest
from .errors import (
    ConvergenceError,
    DatasetError,
    DomainError,
    ParameterError,
    PlanRankError,
    ValidationError,
)
from .evaluation import (
    Decision,
    MethodComparison,
    ScoreRecord,
    aggregate_scores,
    compare_methods,
    comparison_matrix,
    score,
    wilcoxon_signed_rank,
)
from .fuzzy import (
    FuzzyWeightVector,
    fuzzy_ahp,
    fuzzy_multimoora,
    fuzzy_topsis,
    fuzzy_vikor,
    fuzzy_waspas,
)
from .model import (
    CANONICAL_CRITERIA,
    CANONICAL_CRITERION_IDS,
    Criterion,
    DecisionMatrix,
    ImportanceDegree,
    OperatorProfile,
    Ranking,
    WeightVector,
    crisp_weights,
    fuzzy_weights,
)
from .pipeline import (
    CRISP_METHODS,
    FUZZY_METHODS,
    METHOD_NAMES,
    PipelineConfig,
    PipelineResult,
    run_method,
    run_pipeline,
)
from .planfilter import (
    DEFAULT_FILTER_WEIGHTS,
    FilterWeights,
    MissionPlan,
    filter_plans,
    hypervolume,
    plan_distance,
    sweep_grid,
    threshold_sweep,
)
from .tfn import Tfn

__version__ = "0.1.0"
