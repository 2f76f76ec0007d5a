"""Collapsed Gibbs sampling sweeps for topic models.

The sampler draws no random numbers itself: callers pass one uniform per
token, which keeps the jitted and fallback paths exactly reproducible.
"""

import numpy as np

from . import accelerate


def _fit_sweep(doc_ids, word_ids, z, ndk, nkw, nk, alpha, beta, uniforms):
    n_topics = ndk.shape[1]
    n_vocab = nkw.shape[1]
    cum = np.empty(n_topics, dtype=np.float64)
    for i in range(word_ids.shape[0]):
        d = doc_ids[i]
        w = word_ids[i]
        k = z[i]
        ndk[d, k] -= 1
        nkw[k, w] -= 1
        nk[k] -= 1
        total = 0.0
        for t in range(n_topics):
            total += (ndk[d, t] + alpha) * (nkw[t, w] + beta) / (nk[t] + beta * n_vocab)
            cum[t] = total
        u = uniforms[i] * total
        k_new = n_topics - 1
        for t in range(n_topics):
            if u < cum[t]:
                k_new = t
                break
        z[i] = k_new
        ndk[d, k_new] += 1
        nkw[k_new, w] += 1
        nk[k_new] += 1


def _infer_sweep(word_ids, z, nd, phi, alpha, uniforms):
    n_topics = phi.shape[0]
    cum = np.empty(n_topics, dtype=np.float64)
    for i in range(word_ids.shape[0]):
        w = word_ids[i]
        k = z[i]
        nd[k] -= 1
        total = 0.0
        for t in range(n_topics):
            total += (nd[t] + alpha) * phi[t, w]
            cum[t] = total
        u = uniforms[i] * total
        k_new = n_topics - 1
        for t in range(n_topics):
            if u < cum[t]:
                k_new = t
                break
        z[i] = k_new
        nd[k_new] += 1


fit_sweep = accelerate(_fit_sweep)
infer_sweep = accelerate(_infer_sweep)
