import pytest

from mvsemo import (
    AlgorithmVariant,
    Archive,
    InstrumentationPlan,
    archive_potential,
    border_distance,
    gomm,
    run,
)
from mvsemo.core import ObjectiveVector, ProblemShape
from mvsemo.harness import default_budget
from mvsemo.instrumentation import sample


def archive_of(shape, members):
    archive = Archive()
    for values in members:
        f1 = sum(values)
        archive.insert(ObjectiveVector(f1, shape.n * shape.max_value - f1), values, strict=False)
    return archive


def test_border_distance_values():
    shape = ProblemShape(2, 3)
    assert border_distance(archive_of(shape, [(1, 1)]), shape) == 2
    assert border_distance(archive_of(shape, [(0, 0), (1, 1)]), shape) == 0
    assert border_distance(archive_of(shape, [(0, 1), (2, 1)]), shape) == 1


def test_border_distance_empty_archive():
    with pytest.raises(ValueError):
        border_distance(Archive(), ProblemShape(2, 3))


def test_potential_zero_at_saturated_point():
    shape = ProblemShape(3, 4)
    assert archive_potential(archive_of(shape, [(3, 3, 3)]), shape) == 0


def test_potential_values():
    shape = ProblemShape(2, 3)
    # sole member (0,0): each coordinate contributes 2**2 - 1
    assert archive_potential(archive_of(shape, [(0, 0)]), shape) == 6

    shape = ProblemShape(1, 4)
    assert archive_potential(archive_of(shape, [(1,)]), shape) == 3


def test_potential_uses_max_f1_member_only():
    shape = ProblemShape(2, 3)
    archive = archive_of(shape, [(0, 0), (2, 2)])
    assert archive_potential(archive, shape) == 0


def test_potential_is_exact_for_wide_value_ranges():
    # 2**63 per coordinate exceeds uint64 halfway; exact ints must not wrap
    shape = ProblemShape(2, 65)
    archive = archive_of(shape, [(0, 0)])
    assert archive_potential(archive, shape) == 2 * (2**64 - 1)


def test_plan_rejects_bad_interval():
    with pytest.raises(ValueError):
        InstrumentationPlan(sample_every=0)


def test_sample_respects_grid():
    shape = ProblemShape(2, 3)
    archive = archive_of(shape, [(1, 1)])
    plan = InstrumentationPlan(sample_every=1000)
    assert sample(archive, 500, plan, shape=shape) is None
    got = sample(archive, 1000, plan, shape=shape)
    assert got is not None and got.iteration == 1000


def test_sample_records_only_requested_fields():
    shape = ProblemShape(2, 3)
    archive = archive_of(shape, [(1, 1)])
    plan = InstrumentationPlan(
        record_population_size=True,
        record_border_distance=False,
        record_potential=False,
    )
    got = sample(archive, 0, plan)
    assert got.population_size == 1
    assert got.border_distance is None and got.potential is None


def test_sample_needs_shape_or_cache_for_potential():
    archive = archive_of(ProblemShape(2, 3), [(1, 1)])
    with pytest.raises(ValueError):
        sample(archive, 0, InstrumentationPlan())
    got = sample(archive, 0, InstrumentationPlan(), cached_potential=4)
    assert got.potential == 4


def densely_traced(variant, benchmark, seed):
    budget = default_budget(benchmark.shape.n, benchmark.shape.r)
    return run(variant, benchmark, seed, budget, InstrumentationPlan(sample_every=1))


def test_trace_covers_every_iteration():
    record = densely_traced(AlgorithmVariant.SEMO, gomm(5, 3), 8)
    iterations = [s.iteration for s in record.trace]
    assert iterations == list(range(record.coverage_iterations + 1))


def test_strict_potential_decays_to_zero():
    """Small-scale preview of the acceptance-grade monotonicity check."""
    for seed in (1, 2, 3):
        record = densely_traced(AlgorithmVariant.STRICT, gomm(8, 3), seed)
        assert not record.censored
        values = [s.potential for s in record.trace]
        assert all(a >= b for a, b in zip(values, values[1:]))
        assert values[-1] == 0


def test_population_never_shrinks_on_all_optimal_benchmark():
    for seed in (4, 5):
        record = densely_traced(AlgorithmVariant.SEMO, gomm(7, 3), seed)
        sizes = [s.population_size for s in record.trace]
        assert all(a <= b for a, b in zip(sizes, sizes[1:]))
        assert sizes[-1] == 7 * 2 + 1


def test_border_distance_absorbs_at_zero_on_all_optimal_benchmark():
    # members are never evicted there, so a border hit is permanent
    record = densely_traced(AlgorithmVariant.SEMO, gomm(7, 3), 6)
    distances = [s.border_distance for s in record.trace]
    first_zero = distances.index(0)
    assert set(distances[first_zero:]) == {0}
    assert distances[-1] == 0
