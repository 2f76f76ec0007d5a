"""Topic-based segmentation and segmentation evaluation.

Documents split at sentence gaps where the topic distributions of the
adjacent sliding windows diverge: per gap we take the cosine similarity of
the two window distributions, turn the similarity valley into a depth score,
and place boundaries where depth exceeds a threshold. Segment character
offsets always tile the source document exactly.
"""

import math
from dataclasses import dataclass

import numpy as np

from .textutil import sentence_spans, tokenize
from .topics import infer_topic_dist


class SegmentationError(ValueError):
    pass


@dataclass(frozen=True)
class Segment:
    start_char: int
    end_char: int
    text: str
    topic_dist: np.ndarray
    sentence_count: int


def _cosine(a, b):
    na, nb = float(np.linalg.norm(a)), float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.dot(a, b) / (na * nb))


def _depth_scores(sims):
    """TextTiling valley depth: climb to the left and right peaks."""
    depths = []
    for i, s in enumerate(sims):
        left = s
        j = i - 1
        while j >= 0 and sims[j] >= left:
            left = sims[j]
            j -= 1
        right = s
        j = i + 1
        while j < len(sims) and sims[j] >= right:
            right = sims[j]
            j += 1
        depths.append((left - s) + (right - s))
    return depths


DEPTH_FLOOR = 0.3


def gap_boundaries(doc, model, stopwords, window=2, depth_threshold=None, depth_floor=DEPTH_FLOOR):
    """Sentence-gap indices (1-based: gap g splits before sentence g).

    A gap becomes a boundary when its depth clears both the per-document
    relative threshold (mean + 0.5 std of depths) and an absolute floor; the
    floor keeps inference noise on topically uniform documents from ever
    producing boundaries, which a purely relative cut cannot.
    """
    spans = sentence_spans(doc)
    n = len(spans)
    if n <= 1:
        return [], spans
    sent_tokens = [
        [t for t in tokenize(doc[a:b]) if t not in stopwords] for a, b in spans
    ]
    sims = []
    for g in range(1, n):
        left = [t for toks in sent_tokens[max(0, g - window) : g] for t in toks]
        right = [t for toks in sent_tokens[g : g + window] for t in toks]
        dl, _ = infer_topic_dist(model, left)
        dr, _ = infer_topic_dist(model, right)
        sims.append(_cosine(dl, dr))
    depths = _depth_scores(sims)
    if depth_threshold is None:
        depth_threshold = float(np.mean(depths) + 0.5 * np.std(depths))
    cut = max(depth_threshold, depth_floor)
    return [g for g, depth in zip(range(1, n), depths) if depth > cut], spans


def _segment_from_sentences(doc, spans, first, last_exclusive, model, stopwords):
    start = spans[first][0]
    end = spans[last_exclusive - 1][1] if last_exclusive == len(spans) else spans[last_exclusive][0]
    text = doc[start:end]
    dist, _ = infer_topic_dist(model, [t for t in tokenize(text) if t not in stopwords])
    return Segment(
        start_char=start,
        end_char=end,
        text=text,
        topic_dist=dist,
        sentence_count=last_exclusive - first,
    )


def topictiling_segment(
    doc, model, stopwords, window=2, depth_threshold=None, min_segment_sentences=2,
    depth_floor=DEPTH_FLOOR,
):
    """Segments tiling the document; single-sentence docs yield one segment."""
    if doc == "":
        return []
    boundaries, spans = gap_boundaries(doc, model, stopwords, window, depth_threshold, depth_floor)
    starts = [0] + boundaries
    ends = boundaries + [len(spans)]
    segments = [
        _segment_from_sentences(doc, spans, a, b, model, stopwords)
        for a, b in zip(starts, ends)
    ]
    # merge fragments into the topically closer neighbour
    while len(segments) > 1:
        short = next(
            (i for i, s in enumerate(segments) if s.sentence_count < min_segment_sentences),
            None,
        )
        if short is None:
            break
        cand = []
        if short > 0:
            cand.append((short - 1, _cosine(segments[short].topic_dist, segments[short - 1].topic_dist)))
        if short < len(segments) - 1:
            cand.append((short + 1, _cosine(segments[short].topic_dist, segments[short + 1].topic_dist)))
        other = max(cand, key=lambda c: (c[1], -c[0]))[0]  # tie: prefer left
        a, b = min(short, other), max(short, other)
        sent_first = sum(s.sentence_count for s in segments[:a])
        merged = _segment_from_sentences(
            doc,
            spans,
            sent_first,
            sent_first + segments[a].sentence_count + segments[b].sentence_count,
            model,
            stopwords,
        )
        segments = segments[:a] + [merged] + segments[b + 1 :]
    return segments


def window_diff(reference, hypothesis, doc_length, k):
    """Fraction of k-unit windows whose boundary counts disagree.

    doc_length counts sentences; boundaries are gap indices in [1, doc_length).
    """
    if k < 1:
        raise SegmentationError("k must be >= 1")
    if doc_length <= k:
        raise SegmentationError("doc_length must exceed k")
    ref = set(reference)
    hyp = set(hypothesis)
    windows = doc_length - k
    diff = 0
    for i in range(windows):
        lo, hi = i, i + k  # gaps g with lo < g <= hi
        rb = sum(1 for g in ref if lo < g <= hi)
        hb = sum(1 for g in hyp if lo < g <= hi)
        diff += rb != hb
    return diff / windows


def default_window_k(reference, doc_length):
    """Half the mean reference segment length, rounded, at least 1."""
    segs = len(reference) + 1
    return max(1, round(doc_length / segs / 2))


def benchmark_segmenters(segmenters, gold_corpus, k=None):
    """Mean WindowDiff per segmenter; lowest mean wins, ties by registration.

    segmenters: [(name, fn)] where fn(doc) returns boundary gap indices.
    gold_corpus: [(doc, reference_boundaries)].
    """
    if not gold_corpus:
        raise SegmentationError("gold corpus is empty")
    results = []
    for order, (name, fn) in enumerate(segmenters):
        scores = []
        for doc, reference in gold_corpus:
            n = len(sentence_spans(doc))
            kk = k if k is not None else default_window_k(reference, n)
            scores.append(window_diff(reference, fn(doc), n, kk))
        results.append(
            {"name": name, "meanWindowDiff": float(np.mean(scores)), "order": order}
        )
    ranked = sorted(results, key=lambda r: (r["meanWindowDiff"], r["order"]))
    for rank, r in enumerate(ranked, 1):
        r["rank"] = rank
        del r["order"]
    return {"results": ranked, "recommended": ranked[0]["name"]}
