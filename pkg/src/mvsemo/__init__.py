"""Multi-valued SEMO variants on integer-lattice bi-objective benchmarks,
with a reproducible experiment harness."""

from .algorithms import (
    AlgorithmVariant,
    Archive,
    CoverageTracker,
    InsertOutcome,
    RunRecord,
    archive_insert_semo,
    archive_insert_strict,
    coverage_check,
    is_pairwise_non_dominated,
    run,
)
from .core import Dominance, ObjectiveVector, ProblemShape, Solution, compare
from .engine import HAVE_NUMBA, run_fast
from .harness import (
    ExperimentConfig,
    ScalingFit,
    ScalingModel,
    SettingSummary,
    default_budget,
    derive_run_seed,
    fit_scaling,
    model_value,
    run_experiment,
    summarize,
)
from .instrumentation import (
    InstrumentationPlan,
    TraceSample,
    archive_potential,
    border_distance,
    sample,
)
from .operators import MutationOutcome, select_delayed, select_uniform, unit_strength_mutate
from .problems import (
    Benchmark,
    BenchmarkKind,
    ParetoFrontDescriptor,
    brute_force_pareto,
    evaluate,
    evaluate_glotz,
    evaluate_glotz_direct,
    evaluate_gomm,
    glotz,
    glotz_objectives_after_step,
    glotz_pareto_solution,
    gomm,
    gomm_objectives_after_step,
    on_front,
    pareto_front,
)
from .rng import GENERATOR_ID, MASK64, SplitMix64, mix64, validate_seed

__version__ = "0.1.0"

__all__ = [
    "AlgorithmVariant",
    "Archive",
    "Benchmark",
    "BenchmarkKind",
    "CoverageTracker",
    "Dominance",
    "ExperimentConfig",
    "GENERATOR_ID",
    "HAVE_NUMBA",
    "InsertOutcome",
    "InstrumentationPlan",
    "MASK64",
    "MutationOutcome",
    "ObjectiveVector",
    "ParetoFrontDescriptor",
    "ProblemShape",
    "RunRecord",
    "ScalingFit",
    "ScalingModel",
    "SettingSummary",
    "Solution",
    "SplitMix64",
    "TraceSample",
    "archive_insert_semo",
    "archive_insert_strict",
    "archive_potential",
    "border_distance",
    "brute_force_pareto",
    "compare",
    "coverage_check",
    "default_budget",
    "derive_run_seed",
    "evaluate",
    "evaluate_glotz",
    "evaluate_glotz_direct",
    "evaluate_gomm",
    "fit_scaling",
    "glotz",
    "glotz_objectives_after_step",
    "glotz_pareto_solution",
    "gomm",
    "gomm_objectives_after_step",
    "is_pairwise_non_dominated",
    "mix64",
    "model_value",
    "on_front",
    "pareto_front",
    "run",
    "run_experiment",
    "run_fast",
    "sample",
    "select_delayed",
    "select_uniform",
    "summarize",
    "unit_strength_mutate",
    "validate_seed",
]
