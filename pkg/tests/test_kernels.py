"""The jitted and pure-Python kernel paths must agree bit for bit."""

import subprocess
import sys

import numpy as np

from redraft.kernels import NUMBA_ENABLED
from redraft.kernels.gibbs import _fit_sweep, fit_sweep
from redraft.kernels.splits import _best_split, best_split


def _gibbs_state(seed=0, n_docs=6, n_topics=3, n_vocab=12, total=200):
    rng = np.random.default_rng(seed)
    doc_ids = rng.integers(0, n_docs, size=total).astype(np.int64)
    word_ids = rng.integers(0, n_vocab, size=total).astype(np.int64)
    z = rng.integers(0, n_topics, size=total).astype(np.int64)
    ndk = np.zeros((n_docs, n_topics), dtype=np.int64)
    nkw = np.zeros((n_topics, n_vocab), dtype=np.int64)
    nk = np.zeros(n_topics, dtype=np.int64)
    for i in range(total):
        ndk[doc_ids[i], z[i]] += 1
        nkw[z[i], word_ids[i]] += 1
        nk[z[i]] += 1
    uniforms = rng.random(total)
    return doc_ids, word_ids, z, ndk, nkw, nk, uniforms


def test_gibbs_sweep_jit_equals_python():
    a = _gibbs_state()
    b = tuple(x.copy() for x in a)
    fit_sweep(a[0], a[1], a[2], a[3], a[4], a[5], 0.5, 0.1, a[6])
    _fit_sweep(b[0], b[1], b[2], b[3], b[4], b[5], 0.5, 0.1, b[6])
    for x, y in zip(a, b):
        np.testing.assert_array_equal(x, y)


def test_best_split_jit_equals_python():
    rng = np.random.default_rng(1)
    for _ in range(20):
        n = int(rng.integers(5, 60))
        cols = rng.random((n, int(rng.integers(1, 5))))
        y = rng.integers(0, 2, size=n).astype(np.int64)
        assert best_split(cols, y, 2, 1) == _best_split(cols, y, 2, 1)


def test_env_flag_forces_fallback():
    code = (
        "import redraft.kernels as k;"
        "import redraft.kernels.gibbs as g;"
        "print(k.NUMBA_ENABLED, g.fit_sweep is g._fit_sweep)"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"PATH": "/usr/bin:/bin", "REDRAFT_DISABLE_NUMBA": "1"},
    )
    assert out.stdout.split() == ["False", "True"]


def test_fit_results_identical_across_paths():
    """A full fit under the fallback flag matches the in-process result."""
    from redraft.topics import fit_lda

    docs = [["a", "b", "c"] * 5, ["c", "d", "e"] * 5, ["a", "e"] * 6]
    model = fit_lda(docs, 2, iterations=30, seed=4)
    code = """
import json
import numpy as np
from redraft.topics import fit_lda
docs = [["a", "b", "c"] * 5, ["c", "d", "e"] * 5, ["a", "e"] * 6]
m = fit_lda(docs, 2, iterations=30, seed=4)
print(json.dumps(m.topic_term.tolist()))
"""
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"PATH": "/usr/bin:/bin", "REDRAFT_DISABLE_NUMBA": "1"},
    )
    import json

    fallback = np.array(json.loads(out.stdout))
    np.testing.assert_array_equal(model.topic_term, fallback)


def test_numba_enabled_by_default_here():
    assert NUMBA_ENABLED
