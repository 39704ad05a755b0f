"""Dissect one instrumented optimizer run.

A run starts from a single random solution and repeatedly mutates a
uniformly selected archive member by one unit in one coordinate. The
archive keeps mutually non-dominated solutions until every front point is
represented. With tracing on, three observables tell the story:

  pop  archive size, which can only grow on G-OneMinMax
  dpf  distance to the nearer front border (min objective value present)
  g    decay potential of the rightmost member, 0 once (r-1)^n is found

Run:  python demos/single_run_anatomy.py
"""

from mvsemo import AlgorithmVariant, InstrumentationPlan, default_budget, gomm, run


def main():
    n, r, seed = 12, 3, 7
    benchmark = gomm(n, r)
    record = run(
        AlgorithmVariant.SEMO,
        benchmark,
        seed,
        default_budget(n, r),
        InstrumentationPlan(sample_every=200),
    )

    print(f"g-oneminmax n={n} r={r}, semo, seed {seed}")
    print(f"covered the {n * (r - 1) + 1}-point front at iteration {record.coverage_iterations}")
    print(f"evaluations: {record.evaluations}, equal-objective replacements: {record.equal_replacements}")
    print()
    print(f"{'iter':>6} {'pop':>4} {'dpf':>4} {'g':>6}")
    for s in record.trace:
        print(f"{s.iteration:>6} {s.population_size:>4} {s.border_distance:>4} {s.potential:>6}")
    print()
    last = record.trace[-1]
    print(f"final sample: population {last.population_size} (= front size), potential {last.potential}")


if __name__ == "__main__":
    main()
