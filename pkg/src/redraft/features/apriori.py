"""Frequent term-set mining with levelwise candidate pruning."""


def mine_jargon(doc_term_sets, min_support, max_set_size=3):
    """Term sets whose document frequency meets min_support.

    doc_term_sets: one set of terms per document (already tokenized and
    stopworded). Support is the fraction of documents containing every term
    of the set. Candidates of size k are joined from frequent (k-1)-sets
    sharing a sorted prefix and pruned by downward closure before counting.

    Returns [(terms_tuple_sorted, support)] ordered by support descending,
    then size, then terms.
    """
    if not 0.0 < min_support <= 1.0:
        raise ValueError("min_support must be in (0, 1]")
    docs = [frozenset(s) for s in doc_term_sets]
    n = len(docs)
    if n == 0:
        return []

    def support(terms):
        ts = frozenset(terms)
        return sum(1 for d in docs if ts <= d) / n

    vocab = sorted({t for d in docs for t in d})
    frequent = {}
    level = []
    for t in vocab:
        s = support((t,))
        if s >= min_support:
            level.append((t,))
            frequent[(t,)] = s
    size = 1
    while level and size < max_set_size:
        size += 1
        prev = set(level)
        candidates = []
        for i, a in enumerate(level):
            for b in level[i + 1 :]:
                if a[:-1] != b[:-1]:
                    continue
                cand = a + (b[-1],)
                # downward closure: every (k-1)-subset must itself be frequent
                if all(cand[:j] + cand[j + 1 :] in prev for j in range(len(cand))):
                    candidates.append(cand)
        level = []
        for cand in candidates:
            s = support(cand)
            if s >= min_support:
                level.append(cand)
                frequent[cand] = s
    return sorted(frequent.items(), key=lambda kv: (-kv[1], len(kv[0]), kv[0]))
