"""Bi-objective benchmarks on the integer lattice [0..r-1]^n.

Two families, both maximized:

* G-OneMinMax: counts total value and total headroom. Objectives always sum
  to n*(r-1), so every solution is Pareto-optimal and the front is the whole
  line segment.
* G-LOTZ: a prefix objective (value accumulated while coordinates stay
  saturated from the left) and a suffix objective (headroom accumulated while
  coordinates stay zero from the right). Only "staircase path" solutions of
  the form (r-1)^q, a, 0^(n-q-1) are Pareto-optimal.

Each G-LOTZ objective has two equivalent implementations: a literal
sum-of-guarded-terms form kept as a readable reference, and a two-scan form
used everywhere else. Property tests assert they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

from .core import ObjectiveVector, ProblemShape, Solution

BRUTE_FORCE_LIMIT = 10**7


class BenchmarkKind(Enum):
    GOMM = "gomm"
    GLOTZ = "glotz"


@dataclass(frozen=True, slots=True)
class Benchmark:
    kind: BenchmarkKind
    shape: ProblemShape


def gomm(n: int, r: int) -> Benchmark:
    return Benchmark(BenchmarkKind.GOMM, ProblemShape(n, r))


def glotz(n: int, r: int) -> Benchmark:
    return Benchmark(BenchmarkKind.GLOTZ, ProblemShape(n, r))


def evaluate_gomm(shape: ProblemShape, values: Solution) -> ObjectiveVector:
    """Total value and total headroom; the two always sum to n*(r-1)."""
    shape.validate_solution(values)
    total = sum(values)
    return ObjectiveVector(total, shape.n * shape.max_value - total)


def evaluate_glotz(shape: ProblemShape, values: Solution) -> ObjectiveVector:
    """Two-scan evaluation, O(n).

    Prefix objective: with p the first position not saturated at r-1 (p = n
    if all are), the value is p*(r-1) plus the coordinate at p. Suffix
    objective mirrors it: with s the last nonzero position (s = -1 if all
    zero), the value is (n-1-s)*(r-1) plus the headroom at s.
    """
    shape.validate_solution(values)
    n, m = shape.n, shape.max_value
    p = 0
    while p < n and values[p] == m:
        p += 1
    prefix = p * m + (values[p] if p < n else 0)
    s = n - 1
    while s >= 0 and values[s] == 0:
        s -= 1
    suffix = (n - 1 - s) * m + (m - values[s]) if s >= 0 else n * m
    return ObjectiveVector(prefix, suffix)


def evaluate_glotz_direct(shape: ProblemShape, values: Solution) -> ObjectiveVector:
    """Literal guarded-sum form of the G-LOTZ objectives, quadratic.

    Position i contributes its value to the prefix objective only while all
    earlier positions are saturated, and its headroom to the suffix objective
    only while all later positions are zero. Reference implementation; the
    scan form is the one used by the algorithms.
    """
    shape.validate_solution(values)
    n, m = shape.n, shape.max_value
    prefix = 0
    for i in range(n):
        if all(values[j] == m for j in range(i)):
            prefix += values[i]
    suffix = 0
    for i in range(n):
        if all(values[j] == 0 for j in range(i + 1, n)):
            suffix += m - values[i]
    return ObjectiveVector(prefix, suffix)


def evaluate(benchmark: Benchmark, values: Solution) -> ObjectiveVector:
    if benchmark.kind is BenchmarkKind.GOMM:
        return evaluate_gomm(benchmark.shape, values)
    return evaluate_glotz(benchmark.shape, values)


def gomm_objectives_after_step(
    shape: ProblemShape, parent: ObjectiveVector, direction: int
) -> ObjectiveVector:
    """O(1) update after one coordinate moved by +-1."""
    return ObjectiveVector(parent.f1 + direction, parent.f2 - direction)


def glotz_objectives_after_step(
    shape: ProblemShape,
    parent_values: Solution,
    parent: ObjectiveVector,
    index: int,
    direction: int,
) -> ObjectiveVector:
    """Update the two-scan objectives after one in-range +-1 step.

    Reads only the parent's unchanged coordinates; the scan positions are
    recovered arithmetically from the parent's objective values. O(1) except
    when the step saturates (or zeroes) the coordinate at the active scan
    position, which extends a scan: O(n) worst case.
    """
    n, m = shape.n, shape.max_value
    new_value = parent_values[index] + direction
    if not 0 <= new_value <= m:
        raise ValueError("step leaves the lattice; discard it instead")

    p = parent.f1 // m
    if index < p:
        prefix = index * m + (m - 1)
    elif index > p:
        prefix = parent.f1
    elif new_value < m:
        prefix = p * m + new_value
    else:
        t = p + 1
        while t < n and parent_values[t] == m:
            t += 1
        prefix = t * m + (parent_values[t] if t < n else 0)

    s = (n - 1) - parent.f2 // m
    if index > s:
        suffix = (n - 1 - index) * m + (m - 1)
    elif index < s:
        suffix = parent.f2
    elif new_value > 0:
        suffix = (n - 1 - s) * m + (m - new_value)
    else:
        t = s - 1
        while t >= 0 and parent_values[t] == 0:
            t -= 1
        suffix = (n - 1 - t) * m + (m - parent_values[t]) if t >= 0 else n * m

    return ObjectiveVector(prefix, suffix)


def on_front(shape: ProblemShape, objectives: ObjectiveVector) -> bool:
    """Pareto-optimality test shared by both benchmarks.

    Objective sums never exceed n*(r-1), and a solution is Pareto-optimal
    exactly when its objectives meet that bound.
    """
    f1, f2 = objectives
    return f1 + f2 == shape.n * shape.max_value


@dataclass(frozen=True)
class ParetoFrontDescriptor:
    """Closed-form front: all integer points on f1 + f2 = n*(r-1)."""

    shape: ProblemShape
    points: tuple[ObjectiveVector, ...]

    @property
    def size(self) -> int:
        return len(self.points)

    def __contains__(self, objectives: ObjectiveVector) -> bool:
        return on_front(self.shape, objectives)


def pareto_front(benchmark: Benchmark) -> ParetoFrontDescriptor:
    """Both benchmarks share the same front, of size n*(r-1)+1."""
    shape = benchmark.shape
    total = shape.n * shape.max_value
    points = tuple(ObjectiveVector(k, total - k) for k in range(total + 1))
    return ParetoFrontDescriptor(shape, points)


def glotz_pareto_solution(shape: ProblemShape, k: int) -> Solution:
    """The unique G-LOTZ Pareto-optimal solution with prefix objective k.

    Saturated coordinates, then one intermediate coordinate, then zeros:
    k = q*(r-1) + a maps to (r-1)^q, a, 0^(n-q-1) (all saturated for the
    maximal k).
    """
    m = shape.max_value
    if not 0 <= k <= shape.n * m:
        raise ValueError(f"front index {k} outside [0, {shape.n * m}]")
    q, a = divmod(k, m)
    if q == shape.n:
        return (m,) * shape.n
    return (m,) * q + (a,) + (0,) * (shape.n - q - 1)


def brute_force_pareto(
    benchmark: Benchmark,
) -> tuple[frozenset[Solution], frozenset[ObjectiveVector]]:
    """Exact Pareto set and front by exhaustive enumeration.

    Guards against instances with more than BRUTE_FORCE_LIMIT solutions.
    Enumeration is odometer order (last coordinate varies fastest).
    """
    shape = benchmark.shape
    size = shape.r**shape.n
    if size > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"instance has {size} solutions, above the enumeration limit "
            f"{BRUTE_FORCE_LIMIT}"
        )
    evaluated = [
        (values, evaluate(benchmark, values))
        for values in product(range(shape.r), repeat=shape.n)
    ]
    # Sweep objective vectors by descending f1: a vector is non-dominated
    # exactly when its f2 beats everything with larger-or-equal f1.
    best_f2: dict[int, int] = {}
    for _, obj in evaluated:
        if obj.f2 > best_f2.get(obj.f1, -1):
            best_f2[obj.f1] = obj.f2
    front: set[ObjectiveVector] = set()
    running = -1
    for f1 in sorted(best_f2, reverse=True):
        if best_f2[f1] > running:
            running = best_f2[f1]
            front.add(ObjectiveVector(f1, running))
    pareto_set = frozenset(values for values, obj in evaluated if obj in front)
    return pareto_set, frozenset(front)
