"""Archive maintenance, coverage tracking, and the simulation loop.

Three variants share one loop:

* standard: reject the offspring only when some member strictly dominates
  it; on acceptance every member it weakly dominates is removed, so an
  equal-objective member is replaced by the offspring.
* delayed: like standard, but the parent is chosen by first drawing a target
  first-objective value uniformly over the front range; iterations whose
  target is unrepresented are skipped.
* strict: reject the offspring when any member weakly dominates it, equal
  objective vectors included, so established members are never replaced by
  equal-valued newcomers.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Optional

from .core import ObjectiveVector, ProblemShape, Solution, compare, Dominance
from .instrumentation import InstrumentationPlan, TraceSample, archive_potential, sample
from .operators import select_delayed, select_uniform, unit_strength_mutate
from .problems import (
    Benchmark,
    BenchmarkKind,
    evaluate,
    glotz_objectives_after_step,
    gomm_objectives_after_step,
    on_front,
)
from .rng import SplitMix64


class AlgorithmVariant(Enum):
    SEMO = "semo"
    DELAYED = "delayed"
    STRICT = "strict"


class InsertOutcome(NamedTuple):
    accepted: bool
    replaced_equal: bool
    top_changed: bool


class Archive:
    """Mutually non-dominated members, ordered by ascending first objective.

    Non-domination of exact bi-objective vectors forces the second objective
    to be strictly decreasing in that order, so a candidate only has to be
    checked against its insertion neighbors: the member at the first
    position with f1 >= candidate's can reject it, and the members it
    removes form a contiguous run immediately to the left.
    """

    __slots__ = ("_f1s", "_entries")

    def __init__(self):
        self._f1s: list[int] = []
        self._entries: list[tuple[ObjectiveVector, Solution]] = []

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[tuple[ObjectiveVector, Solution]]:
        return iter(self._entries)

    def objectives(self) -> list[ObjectiveVector]:
        return [obj for obj, _ in self._entries]

    def member_at(self, index: int) -> tuple[ObjectiveVector, Solution]:
        return self._entries[index]

    def find_by_f1(self, f1: int) -> Optional[tuple[ObjectiveVector, Solution]]:
        pos = bisect_left(self._f1s, f1)
        if pos < len(self._f1s) and self._f1s[pos] == f1:
            return self._entries[pos]
        return None

    def min_f1(self) -> int:
        return self._f1s[0]

    def min_f2(self) -> int:
        return self._entries[-1][0].f2

    def insert(
        self, objectives: ObjectiveVector, values: Solution, *, strict: bool
    ) -> InsertOutcome:
        """Apply one acceptance decision and keep the archive non-dominated.

        Returns whether the offspring entered, whether it displaced a member
        with the identical objective vector, and whether the maximum-f1 entry
        changed (instrumentation watches the latter).
        """
        if not isinstance(objectives, ObjectiveVector):
            objectives = ObjectiveVector(*objectives)
        f1s, entries = self._f1s, self._entries
        count = len(entries)
        pos = bisect_left(f1s, objectives.f1)
        remove_hi = pos
        if pos < count:
            neighbor = entries[pos][0]
            if neighbor.f1 == objectives.f1:
                if neighbor.f2 > objectives.f2:
                    return InsertOutcome(False, False, False)
                if neighbor.f2 == objectives.f2:
                    if strict:
                        return InsertOutcome(False, False, False)
                    entries[pos] = (objectives, values)
                    return InsertOutcome(True, True, pos == count - 1)
                remove_hi = pos + 1
            elif neighbor.f2 >= objectives.f2:
                return InsertOutcome(False, False, False)
        remove_lo = pos
        while remove_lo > 0 and entries[remove_lo - 1][0].f2 <= objectives.f2:
            remove_lo -= 1
        top_changed = remove_hi >= count
        f1s[remove_lo:remove_hi] = [objectives.f1]
        entries[remove_lo:remove_hi] = [(objectives, values)]
        return InsertOutcome(True, False, top_changed)


def archive_insert_semo(
    archive: Archive, values: Solution, objectives: ObjectiveVector
) -> bool:
    """Standard acceptance: only strict domination rejects."""
    return archive.insert(objectives, values, strict=False).accepted


def archive_insert_strict(
    archive: Archive, values: Solution, objectives: ObjectiveVector
) -> bool:
    """Strict acceptance: weak domination (equality included) rejects."""
    return archive.insert(objectives, values, strict=True).accepted


def is_pairwise_non_dominated(objectives: list[ObjectiveVector]) -> bool:
    """All-pairs check, quadratic; the reference for archive property tests."""
    for i, u in enumerate(objectives):
        for v in objectives[i + 1 :]:
            if compare(u, v) is not Dominance.INCOMPARABLE:
                return False
    return True


class CoverageTracker:
    """Incremental front coverage: one monotone flag per front point.

    A flag is set when a solution whose objectives sum to n*(r-1) enters the
    archive; front members are never removed (nothing can dominate them and
    equal-objective replacement preserves the objective vector), so flags
    never need clearing.
    """

    __slots__ = ("_attained", "_count", "_line_total")

    def __init__(self, shape: ProblemShape):
        self._attained = bytearray(shape.front_size())
        self._count = 0
        self._line_total = shape.n * shape.max_value

    def observe(self, objectives: ObjectiveVector) -> None:
        """Record an archive insertion."""
        f1, f2 = objectives
        if f1 + f2 == self._line_total:
            if not self._attained[f1]:
                self._attained[f1] = 1
                self._count += 1

    @property
    def attained_count(self) -> int:
        return self._count

    @property
    def covered(self) -> bool:
        return self._count == len(self._attained)


def coverage_check(tracker: CoverageTracker) -> bool:
    return tracker.covered


@dataclass(frozen=True, slots=True)
class RunRecord:
    """Outcome of one run, sufficient to reproduce and to report."""

    benchmark: BenchmarkKind
    n: int
    r: int
    variant: AlgorithmVariant
    seed: int
    budget: int
    coverage_iterations: int
    evaluations: int
    censored: bool
    equal_replacements: int
    final_population_size: int
    trace: Optional[tuple[TraceSample, ...]] = None


def run(
    variant: AlgorithmVariant,
    benchmark: Benchmark,
    seed: int,
    budget: int,
    plan: Optional[InstrumentationPlan] = None,
) -> RunRecord:
    """Reference simulation loop.

    Counts iterations (selection attempts) and evaluations (objective
    computations; initialization contributes one, delayed-variant skips
    contribute none). Stops at full front coverage or after ``budget``
    iterations, whichever comes first; a budget stop marks the record
    censored and reports the budget as the coverage iteration count.
    """
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    shape = benchmark.shape
    n, r = shape.n, shape.r
    front_size = shape.front_size()
    is_gomm = benchmark.kind is BenchmarkKind.GOMM
    rng = SplitMix64(seed)

    values = tuple(rng.below(r) for _ in range(n))
    objectives = evaluate(benchmark, values)
    archive = Archive()
    archive.insert(objectives, values, strict=False)
    tracker = CoverageTracker(shape)
    tracker.observe(objectives)
    evaluations = 1
    equal_replacements = 0
    iterations = 0

    trace: Optional[list[TraceSample]] = None
    potential: Optional[int] = None
    if plan is not None:
        trace = []
        if plan.record_potential:
            potential = archive_potential(archive, shape)
        first = sample(archive, 0, plan, cached_potential=potential)
        if first is not None:
            trace.append(first)

    strict = variant is AlgorithmVariant.STRICT
    delayed = variant is AlgorithmVariant.DELAYED
    covered = tracker.covered

    while not covered and iterations < budget:
        iterations += 1
        if delayed:
            entry = select_delayed(archive, shape, rng)
            if entry is None:
                if plan is not None and iterations % plan.sample_every == 0:
                    trace.append(
                        sample(archive, iterations, plan, cached_potential=potential)
                    )
                continue
        else:
            entry = select_uniform(archive, rng)
        parent_objectives, parent = entry

        mutation = unit_strength_mutate(parent, shape, rng)
        if mutation.was_boundary_discard:
            child_objectives = parent_objectives
        elif is_gomm:
            child_objectives = gomm_objectives_after_step(
                shape, parent_objectives, mutation.direction
            )
        else:
            child_objectives = glotz_objectives_after_step(
                shape, parent, parent_objectives, mutation.changed_index, mutation.direction
            )
        evaluations += 1

        outcome = archive.insert(child_objectives, mutation.offspring, strict=strict)
        if outcome.accepted:
            if outcome.replaced_equal:
                equal_replacements += 1
            tracker.observe(child_objectives)
            covered = tracker.covered

        if plan is not None:
            if outcome.top_changed and plan.record_potential:
                potential = archive_potential(archive, shape)
            if iterations % plan.sample_every == 0:
                trace.append(
                    sample(archive, iterations, plan, cached_potential=potential)
                )

    if covered:
        coverage_iterations = iterations
        censored = False
    else:
        coverage_iterations = budget
        censored = True

    return RunRecord(
        benchmark=benchmark.kind,
        n=n,
        r=r,
        variant=variant,
        seed=seed,
        budget=budget,
        coverage_iterations=coverage_iterations,
        evaluations=evaluations,
        censored=censored,
        equal_replacements=equal_replacements,
        final_population_size=len(archive),
        trace=tuple(trace) if trace is not None else None,
    )
