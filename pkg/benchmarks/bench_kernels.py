"""Benchmark the jitted kernels against the pure-Python fallback.

Usage:
    python3 benchmarks/bench_kernels.py [--sweeps 20] [--tokens 50000]

Runs each kernel both ways on identical inputs, checks the outputs agree
bit for bit, and prints the timing ratio. To benchmark a whole run under the
fallback instead, set REDRAFT_DISABLE_NUMBA=1 and invoke your workload.
"""

import argparse
import time

import numpy as np

from redraft.kernels import NUMBA_ENABLED
from redraft.kernels.gibbs import _fit_sweep, fit_sweep
from redraft.kernels.splits import _best_split, best_split


def _time(fn, *args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_gibbs(tokens, sweeps):
    rng = np.random.default_rng(0)
    n_docs, n_topics, n_vocab = 200, 8, 2000
    doc_ids = rng.integers(0, n_docs, size=tokens).astype(np.int64)
    word_ids = rng.integers(0, n_vocab, size=tokens).astype(np.int64)

    def state():
        r = np.random.default_rng(1)
        z = r.integers(0, n_topics, size=tokens).astype(np.int64)
        ndk = np.zeros((n_docs, n_topics), dtype=np.int64)
        nkw = np.zeros((n_topics, n_vocab), dtype=np.int64)
        nk = np.zeros(n_topics, dtype=np.int64)
        for i in range(tokens):
            ndk[doc_ids[i], z[i]] += 1
            nkw[z[i], word_ids[i]] += 1
            nk[z[i]] += 1
        return z, ndk, nkw, nk

    uniforms = np.random.default_rng(2).random((sweeps, tokens))

    def run(kernel):
        z, ndk, nkw, nk = state()
        t0 = time.perf_counter()
        for s in range(sweeps):
            kernel(doc_ids, word_ids, z, ndk, nkw, nk, 0.5, 0.1, uniforms[s])
        return time.perf_counter() - t0, (z, ndk, nkw, nk)

    fit_sweep(doc_ids, word_ids, *state(), 0.5, 0.1, uniforms[0])  # compile
    t_jit, out_jit = run(fit_sweep)
    t_py, out_py = run(_fit_sweep)
    for a, b in zip(out_jit, out_py):
        np.testing.assert_array_equal(a, b)
    return t_jit, t_py


def bench_split(rows, cols, repeats=5):
    rng = np.random.default_rng(3)
    x = rng.random((rows, cols))
    y = rng.integers(0, 2, size=rows).astype(np.int64)
    best_split(x, y, 2, 1)  # compile
    t_jit = _time(best_split, x, y, 2, 1, repeats=repeats)
    t_py = _time(_best_split, x, y, 2, 1, repeats=repeats)
    assert best_split(x, y, 2, 1) == _best_split(x, y, 2, 1)
    return t_jit, t_py


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--tokens", type=int, default=50_000)
    parser.add_argument("--sweeps", type=int, default=20)
    parser.add_argument("--rows", type=int, default=20_000)
    parser.add_argument("--cols", type=int, default=8)
    args = parser.parse_args()

    if not NUMBA_ENABLED:
        print("numba disabled or unavailable; nothing to compare")
        return

    print(f"{'kernel':<28}{'jit (s)':>10}{'python (s)':>12}{'speedup':>9}")
    t_jit, t_py = bench_gibbs(args.tokens, args.sweeps)
    print(f"{'gibbs sweep x' + str(args.sweeps):<28}{t_jit:>10.3f}{t_py:>12.3f}{t_py / t_jit:>8.1f}x")
    t_jit, t_py = bench_split(args.rows, args.cols)
    print(f"{'gini split scan':<28}{t_jit:>10.3f}{t_py:>12.3f}{t_py / t_jit:>8.1f}x")
    print("outputs bit-identical on both paths")


if __name__ == "__main__":
    main()
