"""Time the numba kernels against the numpy fallback on the same inputs.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]

Both implementations are imported directly, so the SCARFKIT_BACKEND
setting does not matter here. Outputs are compared before timing.
"""
import argparse
import time

import numpy as np

from scarfkit import _kernels_numpy
from scarfkit._backend import HAS_NUMBA

if HAS_NUMBA:
    from scarfkit import _kernels_numba


def _best(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def cases(rng):
    gens = rng.integers(0, 6, size=(16, 4)).astype(np.int64)
    yield "subset_lcms r=16 n=4", "subset_lcms", (gens,)
    yield "subset_label_keys r=16 n=4", "subset_label_keys", (gens, np.int64(7))
    mat = rng.integers(-3, 4, size=(300, 300)).astype(np.int64)
    yield "rank_mod_p 300x300", "rank_mod_p", (mat, np.int64(32749))
    a = rng.integers(0, 5, size=(2000, 4)).astype(np.int64)
    b = rng.integers(0, 5, size=(500, 4)).astype(np.int64)
    yield "divisibility_matrix 2000x500", "divisibility_matrix", (a, b)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    if not HAS_NUMBA:
        print("numba unavailable; nothing to compare")
        return 0
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':32} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for label, name, inputs in cases(rng):
        fast, slow = getattr(_kernels_numba, name), getattr(_kernels_numpy, name)
        # first call compiles
        expected = slow(*inputs)
        got = fast(*inputs)
        if not np.array_equal(np.asarray(expected), np.asarray(got)):
            raise SystemExit(f"{label}: backends disagree")
        t_np = _best(slow, inputs, args.repeat)
        t_nb = _best(fast, inputs, args.repeat)
        print(f"{label:32} {t_np * 1e3:10.2f} {t_nb * 1e3:10.2f} {t_np / t_nb:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
