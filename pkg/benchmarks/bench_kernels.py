"""Benchmark the compiled kernels against the pure-Python (numpy) fallback.

The three kernels dominate the catalog sweeps: subgroup closure (interval
enumeration), double-coset labeling, and exact small-matrix rank (the
subset-rank sweeps behind the independence check).

Run from the repository root:

    python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from walllat.kernels import _pure

try:
    from walllat.kernels import _compiled
except ImportError:
    _compiled = None


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_closure(backend, mult: np.ndarray, seeds) -> None:
    for seed in seeds:
        backend.closure_flags(mult, np.asarray(seed, dtype=np.int32))


def bench_double_cosets(backend, mult: np.ndarray, subgroups) -> None:
    for ids in subgroups:
        backend.double_coset_labels(mult, ids, ids)


def bench_rank(backend, matrices) -> None:
    if backend is _pure:
        for m in matrices:
            _pure.rank_int(m.tolist())
    else:
        for m in matrices:
            backend.rank_int64(m)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="fewer repeats")
    args = parser.parse_args()
    repeats = 1 if args.quick else 3

    from walllat.catalog import all_subgroups, load_group

    rows = []
    for name in ("s4", "s5", "dih50"):
        group = load_group(name).group
        mult = group.mult
        rng = np.random.default_rng(0)
        seeds = [rng.integers(0, group.order, size=2).tolist() for _ in range(200)]
        rows.append((f"closure x200 ({name}, order {group.order})",
                     lambda b, m=mult, s=seeds: bench_closure(b, m, s)))

    s4 = load_group("s4").group
    subgroup_ids = [s.ids_array() for s in all_subgroups(s4)]
    rows.append(("double cosets, all subgroup pairs of a 24-element group",
                 lambda b: bench_double_cosets(b, s4.mult, subgroup_ids)))

    rng = np.random.default_rng(1)
    matrices = [
        np.ascontiguousarray(rng.integers(-3, 4, size=(9, 36)), dtype=np.int64)
        for _ in range(3000)
    ]
    rows.append(("rank of 3000 stacked 9x36 integer matrices",
                 lambda b: bench_rank(b, matrices)))

    print(f"{'benchmark':55s} {'pure':>9s} {'compiled':>9s} {'speedup':>8s}")
    for label, fn in rows:
        pure_time = _time(lambda: fn(_pure), repeats)
        if _compiled is None:
            print(f"{label:55s} {pure_time * 1e3:8.1f}ms {'n/a':>9s} {'n/a':>8s}")
            continue
        compiled_time = _time(lambda: fn(_compiled), repeats)
        print(
            f"{label:55s} {pure_time * 1e3:8.1f}ms {compiled_time * 1e3:8.1f}ms "
            f"{pure_time / compiled_time:7.1f}x"
        )


if __name__ == "__main__":
    main()
