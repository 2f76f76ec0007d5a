"""Gini split search over candidate feature columns.

Candidates are midpoints between distinct consecutive sorted values; the best
split is the strictly smallest weighted child Gini, with ties resolved by the
caller-supplied column order and then by ascending threshold (first win).
"""

import numpy as np

from . import accelerate


def _best_split(cols, y, n_labels, min_leaf):
    n = y.shape[0]
    best_gini = np.inf
    best_col = -1
    best_thr = 0.0
    left = np.zeros(n_labels, dtype=np.int64)
    right = np.zeros(n_labels, dtype=np.int64)
    for j in range(cols.shape[1]):
        order = np.argsort(cols[:, j])
        for c in range(n_labels):
            left[c] = 0
            right[c] = 0
        for i in range(n):
            right[y[order[i]]] += 1
        for i in range(n - 1):
            lab = y[order[i]]
            left[lab] += 1
            right[lab] -= 1
            v = cols[order[i], j]
            v_next = cols[order[i + 1], j]
            if v_next <= v:
                continue
            nl = i + 1
            nr = n - nl
            if nl < min_leaf or nr < min_leaf:
                continue
            gl = 1.0
            gr = 1.0
            for c in range(n_labels):
                pl = left[c] / nl
                pr = right[c] / nr
                gl -= pl * pl
                gr -= pr * pr
            gini = (nl * gl + nr * gr) / n
            if gini < best_gini:
                best_gini = gini
                best_col = j
                best_thr = (v + v_next) / 2.0
    return best_gini, best_col, best_thr


best_split = accelerate(_best_split)
