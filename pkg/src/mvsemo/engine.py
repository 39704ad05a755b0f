"""Compiled fast path for untraced runs.

The kernel mirrors ``algorithms.run`` decision for decision and draw for
draw; tests assert bit-identical RunRecords across both paths. The archive
lives in flat arrays: one slot per possible first-objective value (at most
one member can hold each), plus a sorted list of occupied slots for
uniform selection and neighbor checks.

Falls back gracefully: when numba is unavailable ``HAVE_NUMBA`` is False and
``run_fast`` delegates to the pure-Python loop.
"""

from __future__ import annotations

import numpy as np

from .algorithms import AlgorithmVariant, RunRecord, run as run_reference
from .problems import Benchmark, BenchmarkKind
from .rng import validate_seed

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_PROBLEM_CODE = {BenchmarkKind.GOMM: 0, BenchmarkKind.GLOTZ: 1}
_VARIANT_CODE = {
    AlgorithmVariant.SEMO: 0,
    AlgorithmVariant.DELAYED: 1,
    AlgorithmVariant.STRICT: 2,
}

if HAVE_NUMBA:

    @njit(inline="always")
    def _next(state):
        state = state + np.uint64(0x9E3779B97F4A7C15)
        z = state
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        z = z ^ (z >> np.uint64(31))
        return state, z

    @njit(inline="always")
    def _glotz_scan(buf, n, m):
        p = 0
        while p < n and buf[p] == m:
            p += 1
        if p < n:
            prefix = p * m + buf[p]
        else:
            prefix = n * m
        s = n - 1
        while s >= 0 and buf[s] == 0:
            s -= 1
        if s >= 0:
            suffix = (n - 1 - s) * m + (m - buf[s])
        else:
            suffix = n * m
        return prefix, suffix

    @njit(inline="always")
    def _glotz_delta(sols, pslot, pf1, pf2, j, v, n, m):
        # Scan positions recovered from the parent's objectives; only the
        # changed coordinate j differs from the stored parent row.
        p = pf1 // m
        if j < p:
            prefix = j * m + (m - 1)
        elif j > p:
            prefix = pf1
        elif v < m:
            prefix = p * m + v
        else:
            t = p + 1
            while t < n and sols[pslot, t] == m:
                t += 1
            if t < n:
                prefix = t * m + sols[pslot, t]
            else:
                prefix = n * m
        s = (n - 1) - pf2 // m
        if j > s:
            suffix = (n - 1 - j) * m + (m - 1)
        elif j < s:
            suffix = pf2
        elif v > 0:
            suffix = (n - 1 - s) * m + (m - v)
        else:
            t = s - 1
            while t >= 0 and sols[pslot, t] == 0:
                t -= 1
            if t >= 0:
                suffix = (n - 1 - t) * m + (m - sols[pslot, t])
            else:
                suffix = n * m
        return prefix, suffix

    @njit(cache=True, nogil=True)
    def _simulate(problem, variant, n, r, seed, budget):
        m = r - 1
        line_total = n * m
        front_size = line_total + 1
        state = np.uint64(seed)

        sols = np.zeros((front_size, n), dtype=np.int64)
        f2_at = np.zeros(front_size, dtype=np.int64)
        occupied = np.zeros(front_size, dtype=np.uint8)
        members = np.zeros(front_size, dtype=np.int64)
        covered = np.zeros(front_size, dtype=np.uint8)
        buf = np.zeros(n, dtype=np.int64)

        for j in range(n):
            state, z = _next(state)
            buf[j] = np.int64(z % np.uint64(r))
        if problem == 0:
            f1 = 0
            for j in range(n):
                f1 += buf[j]
            f2 = line_total - f1
        else:
            f1, f2 = _glotz_scan(buf, n, m)
        evaluations = 1
        occupied[f1] = 1
        f2_at[f1] = f2
        sols[f1, :] = buf
        members[0] = f1
        count = 1
        covered_count = 0
        if f1 + f2 == line_total:
            covered[f1] = 1
            covered_count = 1
        equal_replacements = 0
        if covered_count == front_size:
            return 0, evaluations, 0, equal_replacements, count

        strict = variant == 2
        iteration = 0
        while iteration < budget:
            iteration += 1
            if variant == 1:
                state, z = _next(state)
                target = np.int64(z % np.uint64(front_size))
                if occupied[target] == 0:
                    continue
                pslot = target
            else:
                state, z = _next(state)
                pslot = members[np.int64(z % np.uint64(count))]
            pf1 = pslot
            pf2 = f2_at[pslot]

            state, z = _next(state)
            j = np.int64(z % np.uint64(n))
            state, z = _next(state)
            if (z & np.uint64(1)) == np.uint64(0):
                d = 1
            else:
                d = -1
            v = sols[pslot, j] + d
            evaluations += 1
            if v < 0 or v > m:
                discard = True
                yf1 = pf1
                yf2 = pf2
            else:
                discard = False
                if problem == 0:
                    yf1 = pf1 + d
                    yf2 = line_total - yf1
                else:
                    yf1, yf2 = _glotz_delta(sols, pslot, pf1, pf2, j, v, n, m)

            # Insertion: binary search for the first occupied slot >= yf1.
            lo = 0
            hi = count
            while lo < hi:
                mid = (lo + hi) >> 1
                if members[mid] < yf1:
                    lo = mid + 1
                else:
                    hi = mid
            pos = lo
            accepted = False
            replaced_equal = False
            remove_hi = pos
            rejected = False
            if pos < count:
                c = members[pos]
                dd = f2_at[c]
                if c == yf1:
                    if dd > yf2:
                        rejected = True
                    elif dd == yf2:
                        if strict:
                            rejected = True
                        else:
                            accepted = True
                            replaced_equal = True
                            if yf1 != pslot:
                                sols[yf1, :] = sols[pslot, :]
                            if not discard:
                                sols[yf1, j] = v
                    else:
                        remove_hi = pos + 1
                elif dd >= yf2:
                    rejected = True
            if not rejected and not accepted:
                remove_lo = pos
                while remove_lo > 0 and f2_at[members[remove_lo - 1]] <= yf2:
                    remove_lo -= 1
                for t in range(remove_lo, remove_hi):
                    occupied[members[t]] = 0
                removed = remove_hi - remove_lo
                if yf1 != pslot:
                    sols[yf1, :] = sols[pslot, :]
                if not discard:
                    sols[yf1, j] = v
                if removed == 0:
                    t = count
                    while t > pos:
                        members[t] = members[t - 1]
                        t -= 1
                    members[pos] = yf1
                    count += 1
                else:
                    members[remove_lo] = yf1
                    if removed > 1:
                        src = remove_hi
                        dst = remove_lo + 1
                        while src < count:
                            members[dst] = members[src]
                            src += 1
                            dst += 1
                        count -= removed - 1
                occupied[yf1] = 1
                f2_at[yf1] = yf2
                accepted = True
            if accepted:
                if replaced_equal:
                    equal_replacements += 1
                if yf1 + yf2 == line_total and covered[yf1] == 0:
                    covered[yf1] = 1
                    covered_count += 1
                    if covered_count == front_size:
                        return iteration, evaluations, 0, equal_replacements, count

        return budget, evaluations, 1, equal_replacements, count


def run_fast(
    variant: AlgorithmVariant, benchmark: Benchmark, seed: int, budget: int
) -> RunRecord:
    """Untraced run on the compiled kernel (reference loop when numba is
    missing). Same trajectories as ``algorithms.run`` by construction."""
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    validate_seed(seed)
    if not HAVE_NUMBA:
        return run_reference(variant, benchmark, seed, budget)
    shape = benchmark.shape
    coverage_iterations, evaluations, censored, equal_replacements, pop = _simulate(
        _PROBLEM_CODE[benchmark.kind],
        _VARIANT_CODE[variant],
        shape.n,
        shape.r,
        np.uint64(seed),
        budget,
    )
    return RunRecord(
        benchmark=benchmark.kind,
        n=shape.n,
        r=shape.r,
        variant=variant,
        seed=seed,
        budget=budget,
        coverage_iterations=int(coverage_iterations),
        evaluations=int(evaluations),
        censored=bool(censored),
        equal_replacements=int(equal_replacements),
        final_population_size=int(pop),
        trace=None,
    )
