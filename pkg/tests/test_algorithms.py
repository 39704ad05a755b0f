"""Archive maintenance, coverage tracking, and the reference run loop."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from mvsemo import (
    AlgorithmVariant,
    Archive,
    CoverageTracker,
    archive_insert_semo,
    archive_insert_strict,
    coverage_check,
    glotz,
    gomm,
    is_pairwise_non_dominated,
    pareto_front,
    run,
)
from mvsemo.core import ObjectiveVector, ProblemShape
from mvsemo.harness import default_budget

VARIANTS = (AlgorithmVariant.SEMO, AlgorithmVariant.DELAYED, AlgorithmVariant.STRICT)


def seeded_archive(pairs):
    archive = Archive()
    for f1, f2 in pairs:
        outcome = archive.insert(ObjectiveVector(f1, f2), (f1, f2), strict=False)
        assert outcome.accepted
    return archive


def test_insert_replaces_equal_objectives():
    archive = seeded_archive([(2, 2)])
    outcome = archive.insert(ObjectiveVector(2, 2), ("new",), strict=False)
    assert outcome.accepted and outcome.replaced_equal
    assert len(archive) == 1
    assert archive.member_at(0) == ((2, 2), ("new",))


def test_strict_insert_rejects_equal_objectives():
    archive = seeded_archive([(2, 2)])
    outcome = archive.insert(ObjectiveVector(2, 2), ("new",), strict=True)
    assert not outcome.accepted
    assert archive.member_at(0)[1] == (2, 2)


def test_insert_keeps_incomparable_pair():
    archive = seeded_archive([(3, 1)])
    assert archive.insert(ObjectiveVector(2, 2), (0,), strict=False).accepted
    assert archive.objectives() == [(2, 2), (3, 1)]


def test_insert_rejects_dominated_candidate():
    archive = seeded_archive([(3, 3)])
    assert not archive.insert(ObjectiveVector(2, 2), (0,), strict=False).accepted
    assert not archive.insert(ObjectiveVector(3, 2), (0,), strict=False).accepted
    assert len(archive) == 1


def test_insert_evicts_dominated_member():
    archive = seeded_archive([(1, 3), (3, 1)])
    outcome = archive.insert(ObjectiveVector(3, 2), (0,), strict=False)
    assert outcome.accepted and not outcome.replaced_equal
    assert archive.objectives() == [(1, 3), (3, 2)]


def test_insert_can_evict_a_whole_run():
    archive = seeded_archive([(1, 5), (2, 3), (3, 2), (5, 0)])
    assert archive.insert(ObjectiveVector(4, 4), (0,), strict=False).accepted
    assert archive.objectives() == [(1, 5), (4, 4), (5, 0)]


def test_insert_wrappers():
    archive = Archive()
    assert archive_insert_semo(archive, (0, 0), ObjectiveVector(1, 1))
    assert not archive_insert_strict(archive, (0, 0), ObjectiveVector(1, 1))
    assert archive_insert_semo(archive, (1, 1), ObjectiveVector(1, 1))


def test_find_by_f1():
    archive = seeded_archive([(0, 4), (2, 2)])
    assert archive.find_by_f1(2) == ((2, 2), (2, 2))
    assert archive.find_by_f1(1) is None


objective_sequences = st.lists(
    st.tuples(st.integers(0, 12), st.integers(0, 12)), min_size=1, max_size=60
)


@given(objective_sequences, st.booleans())
@settings(max_examples=300)
def test_archive_stays_sorted_and_non_dominated(pairs, strict):
    archive = Archive()
    for tag, (f1, f2) in enumerate(pairs):
        archive.insert(ObjectiveVector(f1, f2), (tag,), strict=strict)
        objectives = archive.objectives()
        f1s = [obj.f1 for obj in objectives]
        f2s = [obj.f2 for obj in objectives]
        # strictly increasing f1 with strictly decreasing f2 is exactly
        # pairwise incomparability for two maximized objectives
        assert f1s == sorted(set(f1s))
        assert f2s == sorted(set(f2s), reverse=True)
    assert is_pairwise_non_dominated(archive.objectives())


@given(objective_sequences)
@settings(max_examples=200)
def test_archive_rejects_only_dominated(pairs):
    """An accepted candidate is never dominated by the prior archive, and a
    rejected one always had a weakly-better member already present."""
    archive = Archive()
    for tag, (f1, f2) in enumerate(pairs):
        before = archive.objectives()
        accepted = archive.insert(ObjectiveVector(f1, f2), (tag,), strict=False).accepted
        strictly_dominated = any(
            (u.f1 >= f1 and u.f2 > f2) or (u.f1 > f1 and u.f2 >= f2) for u in before
        )
        assert accepted == (not strictly_dominated)


def test_coverage_tracker_counts_front_points():
    shape = ProblemShape(2, 3)
    tracker = CoverageTracker(shape)
    assert not coverage_check(tracker)
    tracker.observe(ObjectiveVector(1, 2))  # off the front line, ignored
    assert tracker.attained_count == 0
    for f1 in range(5):
        tracker.observe(ObjectiveVector(f1, 4 - f1))
    assert tracker.attained_count == 5
    assert coverage_check(tracker)
    tracker.observe(ObjectiveVector(0, 4))  # idempotent
    assert tracker.attained_count == 5


def test_run_rejects_bad_arguments():
    with pytest.raises(ValueError):
        run(AlgorithmVariant.SEMO, gomm(2, 3), 1, -1)
    with pytest.raises(ValueError):
        run(AlgorithmVariant.SEMO, gomm(2, 3), -1, 100)


@pytest.mark.parametrize("variant", VARIANTS)
@pytest.mark.parametrize("make", [gomm, glotz])
def test_run_is_replayable(variant, make):
    benchmark = make(6, 3)
    first = run(variant, benchmark, 424242, default_budget(6, 3))
    second = run(variant, benchmark, 424242, default_budget(6, 3))
    assert first == second


@pytest.mark.parametrize("variant", VARIANTS)
@pytest.mark.parametrize("make", [gomm, glotz])
def test_covered_run_ends_with_exact_front(variant, make):
    """Coverage plus the size bound forces the archive to be the front."""
    benchmark = make(5, 4)
    front = set(pareto_front(benchmark).points)
    for seed in range(8):
        record = run(variant, benchmark, seed, default_budget(5, 4))
        assert not record.censored
        assert 1 <= record.coverage_iterations <= record.budget
        assert record.final_population_size == len(front)


def test_run_counts_evaluations():
    # semo and strict evaluate once per iteration plus once at startup
    record = run(AlgorithmVariant.SEMO, gomm(4, 3), 9, default_budget(4, 3))
    assert record.evaluations == record.coverage_iterations + 1

    record = run(AlgorithmVariant.STRICT, glotz(4, 3), 9, default_budget(4, 3))
    assert record.evaluations == record.coverage_iterations + 1


def test_delayed_skips_do_not_evaluate():
    record = run(AlgorithmVariant.DELAYED, gomm(4, 3), 11, default_budget(4, 3))
    assert record.evaluations <= record.coverage_iterations + 1


def test_strict_never_replaces_equal():
    for seed in range(5):
        record = run(AlgorithmVariant.STRICT, gomm(5, 3), seed, default_budget(5, 3))
        assert record.equal_replacements == 0


def test_semo_observes_neutral_churn():
    # on the all-optimal benchmark equal-objective offspring are routine
    total = sum(
        run(AlgorithmVariant.SEMO, gomm(8, 3), seed, default_budget(8, 3)).equal_replacements
        for seed in range(5)
    )
    assert total > 0


def test_budget_censors_run():
    record = run(AlgorithmVariant.SEMO, gomm(10, 4), 3, 5)
    assert record.censored
    assert record.coverage_iterations == 5  # reported value is the budget
    assert record.budget == 5


def test_zero_budget_run_is_censored_immediately():
    record = run(AlgorithmVariant.SEMO, gomm(2, 2), 0, 0)
    assert record.censored and record.coverage_iterations == 0
    assert record.evaluations == 1  # the initial solution was still evaluated


def test_runs_with_same_seed_differ_across_variants():
    records = {
        variant: run(variant, glotz(6, 3), 2718, default_budget(6, 3))
        for variant in VARIANTS
    }
    times = {rec.coverage_iterations for rec in records.values()}
    assert len(times) > 1  # variants consume draws differently


def test_archive_size_never_exceeds_front_size():
    rng = random.Random(5)
    for _ in range(50):
        n, r = rng.randint(1, 10), rng.randint(2, 5)
        archive = Archive()
        bound = n * (r - 1)
        for _ in range(200):
            f1 = rng.randint(0, bound)
            f2 = rng.randint(0, bound - f1)
            archive.insert(ObjectiveVector(f1, f2), (f1, f2), strict=False)
            assert len(archive) <= bound + 1
