"""Experiment harness: sweeps, per-run seeding, summaries, scaling fits,
and the on-disk formats.

Determinism contract: every run's seed is a pure function of the base seed,
the setting index, and the run index, so results are independent of thread
count and execution order. Output files are byte-identical across reruns
except for the timestamp, which is confined to one leading comment line.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence

from . import engine
from .algorithms import AlgorithmVariant, RunRecord, run as run_reference
from .instrumentation import InstrumentationPlan
from .problems import Benchmark, BenchmarkKind, ProblemShape
from .rng import GENERATOR_ID, GOLDEN_GAMMA, MASK64, mix64, validate_seed

RUNS_CSV_HEADER = "benchmark,variant,n,r,run_index,seed,coverage_iterations,evaluations,censored"
SUMMARY_CSV_HEADER = "benchmark,variant,n,r,runs,mean,std,median,min,max,censored"

DEFAULT_BUDGET_MULTIPLIER = 200.0


def default_budget(n: int, r: int, multiplier: float = DEFAULT_BUDGET_MULTIPLIER) -> int:
    """Iteration cap ceil(multiplier * n^2 * r * (r + ln n)), far above the
    expected coverage time so censoring stays an anomaly signal."""
    if multiplier <= 0:
        raise ValueError(f"budget multiplier must be positive, got {multiplier}")
    return math.ceil(multiplier * n * n * r * (r + math.log(n)))


def derive_run_seed(base_seed: int, setting_index: int, run_index: int) -> int:
    """Per-run seed: two rounds of the splitmix64 finalizer over the base
    seed advanced by the Weyl constant 0x9E3779B97F4A7C15, once per index.

    seed = mix64(mix64(base + G*(setting_index+1)) + G*(run_index+1)) with
    all arithmetic mod 2**64. Pure function of its arguments, so any
    execution order or thread count reproduces identical runs.
    """
    validate_seed(base_seed)
    if setting_index < 0 or run_index < 0:
        raise ValueError("setting and run indices must be non-negative")
    h = mix64((base_seed + GOLDEN_GAMMA * (setting_index + 1)) & MASK64)
    return mix64((h + GOLDEN_GAMMA * (run_index + 1)) & MASK64)


@dataclass(frozen=True)
class ExperimentConfig:
    """One sweep: a benchmark family, algorithm variants, and (n, r) pairs.

    Setting indices for seed derivation enumerate variants in the given
    order (outer loop) and (n, r) pairs in the given order (inner loop).
    ``trace_every`` of None disables tracing; 0 samples every n*r
    iterations; a positive value is the explicit sampling interval.
    """

    benchmark: BenchmarkKind
    variants: tuple[AlgorithmVariant, ...]
    settings: tuple[tuple[int, int], ...]
    runs_per_setting: int = 100
    base_seed: int = 1
    budget_multiplier: float = DEFAULT_BUDGET_MULTIPLIER
    output_dir: Optional[Path] = None
    trace_every: Optional[int] = None
    threads: Optional[int] = None

    def __post_init__(self):
        if not self.variants:
            raise ValueError("at least one algorithm variant is required")
        if not self.settings:
            raise ValueError("at least one (n, r) setting is required")
        for n, r in self.settings:
            ProblemShape(n, r)
        if self.runs_per_setting < 1:
            raise ValueError("runs_per_setting must be >= 1")
        validate_seed(self.base_seed)
        if self.budget_multiplier <= 0:
            raise ValueError("budget_multiplier must be positive")
        if self.trace_every is not None and self.trace_every < 0:
            raise ValueError("trace_every must be >= 0 when given")
        if self.threads is not None and self.threads < 1:
            raise ValueError("threads must be >= 1 when given")

    def enumerate_settings(self) -> list[tuple[int, AlgorithmVariant, int, int]]:
        """(setting_index, variant, n, r) in seed-derivation order."""
        out = []
        index = 0
        for variant in self.variants:
            for n, r in self.settings:
                out.append((index, variant, n, r))
                index += 1
        return out


@dataclass(frozen=True)
class SettingSummary:
    benchmark: BenchmarkKind
    variant: AlgorithmVariant
    n: int
    r: int
    runs: int
    mean_iterations: float
    std_iterations: float
    median_iterations: int
    min_iterations: int
    max_iterations: int
    censored_count: int


def summarize(records: Sequence[RunRecord]) -> SettingSummary:
    """Aggregate one setting's runs.

    Sample standard deviation uses the k-1 divisor (0.0 for a single run);
    the median of an even count is the lower of the two middle values.
    Censored runs contribute their budget value and are counted separately.
    """
    if not records:
        raise ValueError("cannot summarize zero records")
    first = records[0]
    for rec in records:
        if (rec.benchmark, rec.variant, rec.n, rec.r) != (
            first.benchmark,
            first.variant,
            first.n,
            first.r,
        ):
            raise ValueError("summarize expects records from a single setting")
    values = [rec.coverage_iterations for rec in records]
    k = len(values)
    mean = sum(values) / k
    if k == 1:
        std = 0.0
    else:
        std = math.sqrt(sum((v - mean) ** 2 for v in values) / (k - 1))
    ordered = sorted(values)
    median = ordered[(k - 1) // 2]
    return SettingSummary(
        benchmark=first.benchmark,
        variant=first.variant,
        n=first.n,
        r=first.r,
        runs=k,
        mean_iterations=mean,
        std_iterations=std,
        median_iterations=median,
        min_iterations=ordered[0],
        max_iterations=ordered[-1],
        censored_count=sum(1 for rec in records if rec.censored),
    )


class ScalingModel(Enum):
    """Candidate growth laws for mean coverage time."""

    N2R_RLOGN = "n^2*r*(r+ln n)"
    N2R2LOGN = "n^2*r^2*ln n"


def model_value(model: ScalingModel, n: int, r: int) -> float:
    if model is ScalingModel.N2R_RLOGN:
        return n * n * r * (r + math.log(n))
    return n * n * r * r * math.log(n)


@dataclass(frozen=True)
class ScalingFit:
    model: ScalingModel
    coefficient: float
    residual_ratios: tuple[float, ...]


def fit_scaling(summaries: Sequence[SettingSummary], model: ScalingModel) -> ScalingFit:
    """Least-squares through the origin: c = sum(y*m) / sum(m*m), with
    residual ratios y_i / (c * m_i) aligned with the input order."""
    if len(summaries) < 2:
        raise ValueError("fit needs at least two summaries")
    first = summaries[0]
    for s in summaries:
        if (s.benchmark, s.variant) != (first.benchmark, first.variant):
            raise ValueError("fit expects summaries from one benchmark and variant")
    ys = [s.mean_iterations for s in summaries]
    ms = [model_value(model, s.n, s.r) for s in summaries]
    if any(m <= 0 for m in ms):
        raise ValueError("model value must be positive for every summary")
    coefficient = sum(y * m for y, m in zip(ys, ms)) / sum(m * m for m in ms)
    if coefficient <= 0:
        raise ValueError("fitted coefficient is not positive")
    ratios = tuple(y / (coefficient * m) for y, m in zip(ys, ms))
    return ScalingFit(model=model, coefficient=coefficient, residual_ratios=ratios)


def _resolve_threads(requested: Optional[int]) -> int:
    if requested is not None:
        return max(1, requested)
    env = os.environ.get("MVSEMO_THREADS")
    if env is not None:
        try:
            value = int(env)
        except ValueError as exc:
            raise ValueError(f"MVSEMO_THREADS must be an integer, got {env!r}") from exc
        if value < 1:
            raise ValueError(f"MVSEMO_THREADS must be >= 1, got {value}")
        return value
    return os.cpu_count() or 1


def run_experiment(
    config: ExperimentConfig,
) -> tuple[list[SettingSummary], list[RunRecord]]:
    """Execute the sweep and return (summaries, records), both in setting
    order; records within a setting are in run-index order.

    Untraced runs go through the compiled kernel when available; traced runs
    use the reference loop, which is the only one that samples. When
    ``output_dir`` is set, runs.csv and summary.csv (plus trace.jsonl for
    traced sweeps) are written there.
    """
    plan: Optional[InstrumentationPlan] = None
    trace_every = config.trace_every

    def one_run(task) -> RunRecord:
        setting_index, variant, n, r, run_index = task
        seed = derive_run_seed(config.base_seed, setting_index, run_index)
        budget = default_budget(n, r, config.budget_multiplier)
        benchmark = Benchmark(config.benchmark, ProblemShape(n, r))
        if trace_every is None:
            return engine.run_fast(variant, benchmark, seed, budget)
        interval = trace_every if trace_every >= 1 else n * r
        return run_reference(
            variant, benchmark, seed, budget, InstrumentationPlan(sample_every=interval)
        )

    tasks = [
        (setting_index, variant, n, r, run_index)
        for setting_index, variant, n, r in config.enumerate_settings()
        for run_index in range(config.runs_per_setting)
    ]
    threads = _resolve_threads(config.threads)
    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(one_run, tasks))
    else:
        records = [one_run(task) for task in tasks]

    k = config.runs_per_setting
    summaries = [
        summarize(records[i * k : (i + 1) * k])
        for i in range(len(config.enumerate_settings()))
    ]

    if config.output_dir is not None:
        out = Path(config.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_runs_csv(
            out / "runs.csv",
            records,
            run_indices=[i % k for i in range(len(records))],
            base_seed=config.base_seed,
        )
        write_summary_csv(out / "summary.csv", summaries)
        if trace_every is not None:
            write_trace_jsonl(out / "trace.jsonl", records)
    return summaries, records


def _metadata_line(base_seed: Optional[int]) -> str:
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    seed_part = "" if base_seed is None else f" base_seed={base_seed}"
    return f"# mvsemo=0.1.0 generator={GENERATOR_ID}{seed_part} created={stamp}"


def run_csv_row(record: RunRecord, run_index: int) -> str:
    return ",".join(
        (
            record.benchmark.value,
            record.variant.value,
            str(record.n),
            str(record.r),
            str(run_index),
            str(record.seed),
            str(record.coverage_iterations),
            str(record.evaluations),
            "1" if record.censored else "0",
        )
    )


def write_runs_csv(
    path: Path,
    records: Sequence[RunRecord],
    run_indices: Optional[Sequence[int]] = None,
    base_seed: Optional[int] = None,
) -> None:
    """One row per run. The first line is a comment carrying metadata
    including the timestamp; everything after it is reproducible bytes.

    Without explicit ``run_indices`` the index restarts whenever the
    (benchmark, variant, n, r) tuple changes between consecutive records.
    """
    lines = [_metadata_line(base_seed), RUNS_CSV_HEADER]
    if run_indices is not None:
        if len(run_indices) != len(records):
            raise ValueError("run_indices must align with records")
        for record, run_index in zip(records, run_indices):
            lines.append(run_csv_row(record, run_index))
    else:
        run_index = 0
        previous = None
        for record in records:
            setting = (record.benchmark, record.variant, record.n, record.r)
            if setting != previous:
                run_index = 0
                previous = setting
            lines.append(run_csv_row(record, run_index))
            run_index += 1
    Path(path).write_text("\n".join(lines) + "\n")


def write_summary_csv(path: Path, summaries: Sequence[SettingSummary]) -> None:
    lines = [_metadata_line(None), SUMMARY_CSV_HEADER]
    for s in summaries:
        lines.append(
            ",".join(
                (
                    s.benchmark.value,
                    s.variant.value,
                    str(s.n),
                    str(s.r),
                    str(s.runs),
                    str(s.mean_iterations),
                    str(s.std_iterations),
                    str(s.median_iterations),
                    str(s.min_iterations),
                    str(s.max_iterations),
                    str(s.censored_count),
                )
            )
        )
    Path(path).write_text("\n".join(lines) + "\n")


def write_trace_jsonl(path: Path, records: Sequence[RunRecord]) -> None:
    """Concatenated traces in record order, one JSON object per sample with
    keys iter/pop/dpf/g (absent fields omitted). Run boundaries show up as
    the iter counter resetting."""
    lines = []
    for record in records:
        if not record.trace:
            continue
        for s in record.trace:
            row: dict[str, int] = {"iter": s.iteration}
            if s.population_size is not None:
                row["pop"] = s.population_size
            if s.border_distance is not None:
                row["dpf"] = s.border_distance
            if s.potential is not None:
                row["g"] = s.potential
            lines.append(json.dumps(row))
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""))


def parse_config_file(path: Path) -> dict[str, str]:
    """Flat key=value lines; blank lines and #-comments are ignored."""
    values: dict[str, str] = {}
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if not key:
            raise ValueError(f"{path}:{lineno}: empty key")
        values[key] = value.strip()
    return values
