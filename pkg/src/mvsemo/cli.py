"""Command-line harness.

One invocation runs a sweep (optionally over both benchmark families and
several variants) and writes runs.csv, summary.csv, and, when tracing is on,
trace.jsonl into the output directory. Settings come from flags, from a flat
key=value config file, or both; flags win.

Exit codes: 0 success, 1 configuration error, 2 I/O error, 3 at least one
censored run while --strict-budget is in effect.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .algorithms import AlgorithmVariant
from .harness import (
    DEFAULT_BUDGET_MULTIPLIER,
    ExperimentConfig,
    parse_config_file,
    run_experiment,
    write_runs_csv,
    write_summary_csv,
    write_trace_jsonl,
)
from .problems import BenchmarkKind
from .rng import MASK64

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_CENSORED = 3

_CONFIG_KEYS = {
    "problem",
    "algo",
    "n",
    "r",
    "runs",
    "seed",
    "budget_multiplier",
    "out",
    "trace_every",
    "threads",
    "strict_budget",
}


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Argument problems are configuration errors: exit 1, not argparse's 2.
    def error(self, message):
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mvsemo",
        description=(
            "Run multi-valued SEMO variants on integer-lattice bi-objective "
            "benchmarks and record front-coverage times."
        ),
    )
    parser.add_argument("--config", type=Path, help="flat key=value config file")
    parser.add_argument(
        "--problem", help="benchmark family: gomm or glotz (comma list allowed)"
    )
    parser.add_argument(
        "--algo", help="variant: semo, delayed, or strict (comma list allowed)"
    )
    parser.add_argument("--n", help="problem sizes, comma list of ints >= 1")
    parser.add_argument("--r", help="values per coordinate, comma list of ints >= 2")
    parser.add_argument("--runs", type=int, help="runs per setting (default 100)")
    parser.add_argument("--seed", type=int, help="base seed, 64-bit unsigned (default 1)")
    parser.add_argument(
        "--budget-multiplier",
        type=float,
        help="iteration budget is ceil(mult * n^2 * r * (r + ln n)); default 200",
    )
    parser.add_argument("--out", type=Path, help="output directory for CSV/JSONL files")
    parser.add_argument(
        "--trace-every",
        type=int,
        help="sample traces every K iterations (0 = every n*r); omit to disable",
    )
    parser.add_argument(
        "--threads",
        type=int,
        help="worker threads (default: MVSEMO_THREADS env var, then CPU count)",
    )
    parser.add_argument(
        "--strict-budget",
        action=argparse.BooleanOptionalAction,
        help="exit with code 3 if any run was censored by the budget",
    )
    return parser


def _split_list(text: str) -> list[str]:
    parts = [part.strip() for part in text.split(",")]
    if any(not part for part in parts):
        raise ConfigError(f"empty element in list {text!r}")
    return parts


def _parse_int_list(text: str, what: str, minimum: int) -> tuple[int, ...]:
    values = []
    for part in _split_list(text):
        try:
            value = int(part)
        except ValueError:
            raise ConfigError(f"{what} must be an integer, got {part!r}") from None
        if value < minimum:
            raise ConfigError(f"{what} must be >= {minimum}, got {value}")
        values.append(value)
    return tuple(values)


def _parse_bool(text: str, what: str) -> bool:
    lowered = text.strip().lower()
    if lowered in {"1", "true", "yes", "on"}:
        return True
    if lowered in {"0", "false", "no", "off"}:
        return False
    raise ConfigError(f"{what} must be a boolean, got {text!r}")


def _unique_in_order(values, what: str):
    seen = set()
    for value in values:
        if value in seen:
            raise ConfigError(f"duplicate {what}: {value.value}")
        seen.add(value)
    return tuple(values)


def _resolve(args: argparse.Namespace) -> dict:
    """Merge defaults, config file, and explicit flags into one plan."""
    settings: dict[str, str] = {}
    if args.config is not None:
        raw = parse_config_file(args.config)
        unknown = set(raw) - _CONFIG_KEYS
        if unknown:
            raise ConfigError(
                f"unknown config keys: {', '.join(sorted(unknown))} "
                f"(known: {', '.join(sorted(_CONFIG_KEYS))})"
            )
        settings.update(raw)

    def override(key: str, value) -> None:
        if value is not None:
            settings[key] = value

    override("problem", args.problem)
    override("algo", args.algo)
    override("n", args.n)
    override("r", args.r)
    override("runs", args.runs)
    override("seed", args.seed)
    override("budget_multiplier", args.budget_multiplier)
    override("out", args.out)
    override("trace_every", args.trace_every)
    override("threads", args.threads)
    override("strict_budget", args.strict_budget)

    for key in ("problem", "algo", "n", "r", "out"):
        if key not in settings:
            raise ConfigError(f"missing required setting: {key}")

    problems = []
    for name in _split_list(str(settings["problem"])):
        try:
            problems.append(BenchmarkKind(name))
        except ValueError:
            raise ConfigError(
                f"unknown problem {name!r} (choose from gomm, glotz)"
            ) from None
    variants = []
    for name in _split_list(str(settings["algo"])):
        try:
            variants.append(AlgorithmVariant(name))
        except ValueError:
            raise ConfigError(
                f"unknown algorithm {name!r} (choose from semo, delayed, strict)"
            ) from None

    ns = _parse_int_list(str(settings["n"]), "n", 1)
    rs = _parse_int_list(str(settings["r"]), "r", 2)

    def as_int(key: str, default: int, minimum: int) -> int:
        if key not in settings:
            return default
        value = settings[key]
        if not isinstance(value, int):
            try:
                value = int(str(value))
            except ValueError:
                raise ConfigError(f"{key} must be an integer, got {value!r}") from None
        if value < minimum:
            raise ConfigError(f"{key} must be >= {minimum}, got {value}")
        return value

    runs = as_int("runs", 100, 1)
    seed = as_int("seed", 1, 0)
    if seed > MASK64:
        raise ConfigError(f"seed must fit in 64 bits, got {seed}")
    threads = as_int("threads", 0, 1) if "threads" in settings else None
    trace_every = as_int("trace_every", 0, 0) if "trace_every" in settings else None

    multiplier = settings.get("budget_multiplier", DEFAULT_BUDGET_MULTIPLIER)
    if not isinstance(multiplier, float):
        try:
            multiplier = float(str(multiplier))
        except ValueError:
            raise ConfigError(
                f"budget_multiplier must be a number, got {multiplier!r}"
            ) from None
    if multiplier <= 0:
        raise ConfigError(f"budget_multiplier must be positive, got {multiplier}")

    strict_budget = settings.get("strict_budget", False)
    if not isinstance(strict_budget, bool):
        strict_budget = _parse_bool(str(strict_budget), "strict_budget")

    return {
        "problems": _unique_in_order(problems, "problem"),
        "variants": _unique_in_order(variants, "algorithm"),
        "pairs": tuple((n, r) for n in ns for r in rs),
        "runs": runs,
        "seed": seed,
        "budget_multiplier": multiplier,
        "out": Path(settings["out"]),
        "trace_every": trace_every,
        "threads": threads,
        "strict_budget": strict_budget,
    }


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        plan = _resolve(args)
    except ConfigError as exc:
        print(f"mvsemo: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"mvsemo: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"mvsemo: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    all_summaries = []
    all_records = []
    run_indices: list[int] = []
    try:
        for problem in plan["problems"]:
            config = ExperimentConfig(
                benchmark=problem,
                variants=plan["variants"],
                settings=plan["pairs"],
                runs_per_setting=plan["runs"],
                base_seed=plan["seed"],
                budget_multiplier=plan["budget_multiplier"],
                output_dir=None,
                trace_every=plan["trace_every"],
                threads=plan["threads"],
            )
            summaries, records = run_experiment(config)
            all_summaries.extend(summaries)
            all_records.extend(records)
            run_indices.extend(i % plan["runs"] for i in range(len(records)))
    except ValueError as exc:
        print(f"mvsemo: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        out = plan["out"]
        out.mkdir(parents=True, exist_ok=True)
        write_runs_csv(
            out / "runs.csv", all_records, run_indices=run_indices, base_seed=plan["seed"]
        )
        write_summary_csv(out / "summary.csv", all_summaries)
        if plan["trace_every"] is not None:
            write_trace_jsonl(out / "trace.jsonl", all_records)
    except OSError as exc:
        print(f"mvsemo: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO

    censored = sum(s.censored_count for s in all_summaries)
    for s in all_summaries:
        print(
            f"{s.benchmark.value} {s.variant.value} n={s.n} r={s.r}: "
            f"mean={s.mean_iterations:.1f} median={s.median_iterations} "
            f"censored={s.censored_count}/{s.runs}"
        )
    print(f"wrote {out / 'runs.csv'} and {out / 'summary.csv'}")
    if censored and plan["strict_budget"]:
        print(f"mvsemo: {censored} censored run(s) with --strict-budget", file=sys.stderr)
        return EXIT_CENSORED
    return EXIT_OK
