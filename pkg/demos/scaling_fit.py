"""Fit a growth law to measured coverage times.

Runs a reduced sweep (fewer repetitions and sizes than the full protocol,
to stay fast) on G-OneMinMax, then fits c * n^2 * r * (r + ln n) through
the origin and prints the per-setting residual ratios. Ratios near 1.0
across the range mean the law explains the data; a drifting pattern would
mean the wrong model. The second model, c * n^2 * r^2 * ln n, is fit for
contrast.

The full protocol (100 runs, both variants, both sweeps) is one command:

  mvsemo --problem gomm --algo semo,strict --n 20,40,60,80,100 --r 4 \
         --runs 100 --seed 1 --out results/set1

Run:  python demos/scaling_fit.py
"""

from mvsemo import (
    AlgorithmVariant,
    BenchmarkKind,
    ExperimentConfig,
    ScalingModel,
    fit_scaling,
    run_experiment,
)


def main():
    config = ExperimentConfig(
        benchmark=BenchmarkKind.GOMM,
        variants=(AlgorithmVariant.SEMO,),
        settings=((16, 4), (24, 4), (32, 4), (48, 4), (64, 4)),
        runs_per_setting=30,
        base_seed=2024,
    )
    print("sweeping", [f"n={n}" for n, _ in config.settings], "at r=4 ...")
    summaries, _ = run_experiment(config)

    print()
    print(f"{'n':>4} {'mean iters':>12} {'std':>10}")
    for s in summaries:
        print(f"{s.n:>4} {s.mean_iterations:>12.1f} {s.std_iterations:>10.1f}")

    for model in (ScalingModel.N2R_RLOGN, ScalingModel.N2R2LOGN):
        fit = fit_scaling(summaries, model)
        ratios = " ".join(f"{ratio:.2f}" for ratio in fit.residual_ratios)
        print()
        print(f"model {model.value}: c = {fit.coefficient:.3f}")
        print(f"  residual ratios: {ratios}")


if __name__ == "__main__":
    main()
