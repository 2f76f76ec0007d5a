"""Sparse TF-IDF vectors and cosine comparisons against sample profiles."""

import math


def build_idf(doc_token_lists):
    """Smoothed idf: ln((1 + N) / (1 + df)) + 1 per observed term."""
    n = len(doc_token_lists)
    df = {}
    for toks in doc_token_lists:
        for t in set(toks):
            df[t] = df.get(t, 0) + 1
    return {t: math.log((1 + n) / (1 + c)) + 1.0 for t, c in df.items()}


def tfidf_vector(tokens, idf):
    """Raw term counts weighted by idf; terms unseen at build time are dropped."""
    counts = {}
    for t in tokens:
        if t in idf:
            counts[t] = counts.get(t, 0) + 1
    return {t: c * idf[t] for t, c in counts.items()}


def centroid(vectors):
    total = {}
    for v in vectors:
        for t, x in v.items():
            total[t] = total.get(t, 0.0) + x
    n = max(1, len(vectors))
    return {t: x / n for t, x in sorted(total.items())}


def cosine(a, b):
    if not a or not b:
        return 0.0
    dot = sum(x * b[t] for t, x in a.items() if t in b)
    na = math.sqrt(sum(x * x for x in a.values()))
    nb = math.sqrt(sum(x * x for x in b.values()))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return dot / (na * nb)


def tfidf_similarity(tokens, profile, idf):
    """Cosine between the text's TF-IDF vector and a profile centroid."""
    return cosine(tfidf_vector(tokens, idf), profile)
