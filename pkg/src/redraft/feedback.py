"""Explainers: feature-bound generators of prescriptive feedback text.

Each explainer binds a subset of schema features. Scoring multiplies the
binding matrix with the normalized responsibility vector and averages over
each explainer's bound features; the top-k above the threshold run their
generators. Generators are pure functions of the text, vectors, and corpus
resources, so identical inputs always produce identical feedback strings.
"""

from dataclasses import dataclass, field

import numpy as np

from .features.extract import raw_features
from .textutil import tokenize
from .topics import infer_topic_dist


@dataclass(frozen=True)
class GenContext:
    text: str
    vector: np.ndarray
    raw: dict
    resources: object
    schema: object


@dataclass(frozen=True)
class Explainer:
    explainer_id: int
    name: str
    bound_features: tuple
    generate: callable


@dataclass
class Registry:
    explainers: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.explainers)

    def __len__(self):
        return len(self.explainers)

    def ids(self):
        return [e.explainer_id for e in self.explainers]

    def by_id(self, explainer_id):
        for e in self.explainers:
            if e.explainer_id == explainer_id:
                return e
        raise KeyError(explainer_id)


@dataclass(frozen=True)
class FeedbackItem:
    explainer_id: int
    name: str
    score: float
    text: str


@dataclass
class ScopeFeedback:
    start_char: int
    end_char: int
    label: str
    confidence: float
    items: list
    low_quality: bool = False


@dataclass
class FeedbackReport:
    doc_label: str
    doc_confidence: float
    doc_items: list
    segments: list  # ScopeFeedback per segment, in document order
    degenerate: bool = False
    diagnostics: list = field(default_factory=list)
    doc_low_quality: bool = False

    def to_json_dict(self):
        def items(lst):
            return [
                {
                    "explainerId": it.explainer_id,
                    "name": it.name,
                    "score": float(it.score),
                    "text": it.text,
                }
                for it in lst
            ]

        return {
            "docQuality": {
                "label": self.doc_label,
                "confidence": float(self.doc_confidence),
                "lowQuality": self.doc_low_quality,
            },
            "docFeedback": items(self.doc_items),
            "segments": [
                {
                    "startChar": s.start_char,
                    "endChar": s.end_char,
                    "label": s.label,
                    "confidence": float(s.confidence),
                    "lowQuality": s.low_quality,
                    "feedback": items(s.items),
                }
                for s in self.segments
            ],
            "degenerate": self.degenerate,
            "diagnostics": list(self.diagnostics),
        }


def binding_matrix(registry, schema):
    """0/1 matrix, one row per explainer, columns in schema order."""
    a = np.zeros((len(registry), len(schema)))
    for j, e in enumerate(registry):
        for name in e.bound_features:
            a[j, schema.index(name)] = 1.0
    return a


def score_explainers(snorm, matrix, registry, k, t):
    """Top-k (id, score) with score strictly above t, ties to smaller id.

    The score of an explainer is the mean normalized responsibility of its
    bound features.
    """
    if len(registry) == 0:
        return []
    sums = matrix @ np.asarray(snorm, dtype=np.float64)
    supports = matrix.sum(axis=1)
    scored = []
    for j, e in enumerate(registry):
        if supports[j] == 0:
            continue
        scored.append((e.explainer_id, float(sums[j] / supports[j])))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return [(eid, s) for eid, s in scored if s > t][: max(0, k)]


def run_explainers(scored, registry, ctx, diagnostics=None):
    items = []
    for eid, score in scored:
        e = registry.by_id(eid)
        try:
            text = e.generate(ctx)
        except Exception as exc:  # one bad generator must not sink the report
            if diagnostics is not None:
                diagnostics.append(f"explainer {e.name} ({eid}) failed: {exc}")
            continue
        if text:
            items.append(FeedbackItem(explainer_id=eid, name=e.name, score=score, text=text))
    return items


# --- built-in explainers ------------------------------------------------------

def _not_enough_detail(ctx):
    present = set(tokenize(ctx.text))
    terms = [t for t in ctx.resources.jargon_terms if t not in present][:5]
    if not terms:
        terms = [t for t in ctx.resources.high_top_terms if t not in present][:5]
    if terms:
        return "Try adding information about: " + ", ".join(terms)
    return "Try adding more specific details about your subject."


def _off_topic(ctx):
    lda = ctx.resources.lda
    content = [t for t in tokenize(ctx.text) if t not in ctx.resources.stopwords]
    dist, _ = infer_topic_dist(lda, content)
    dominant = int(np.argmax(dist))
    order = np.argsort(-lda.topic_weights, kind="stable")
    labels = [
        "/".join(lda.top_terms(int(k), 3)) for k in order if int(k) != dominant
    ][:5]
    if not labels:
        return None
    return "Try discussing some of these topics: " + "; ".join(labels)


def _subjectivity(ctx):
    return "Please make your writing more balanced and neutral"


def _friendliness(ctx):
    return "Try making your writing more friendly and inclusive."


def _readability(ctx):
    return "Try breaking long sentences into shorter ones and using simpler words."


NOT_ENOUGH_DETAIL = 1
OFF_TOPIC = 2
READABILITY = 3
SUBJECTIVITY = 4
FRIENDLINESS = 5


def builtin_registry(domain, schema):
    """Explainer sets per domain; three of the four are shared.

    reviews: detail, topic, readability, subjectivity.
    profiles: detail, topic, readability, friendliness (bound to the
    social/inclusive lexicon-tag features).
    """
    cat = schema.names_in_category
    shared = [
        Explainer(NOT_ENOUGH_DETAIL, "notEnoughDetail", tuple(cat("informativeness")), _not_enough_detail),
        Explainer(OFF_TOPIC, "offTopic", tuple(cat("topic")), _off_topic),
        Explainer(READABILITY, "readability", tuple(cat("readability")), _readability),
    ]
    if domain == "reviews":
        extra = Explainer(SUBJECTIVITY, "subjectivity", tuple(cat("subjectivity")), _subjectivity)
    elif domain == "profiles":
        bound = tuple(
            n for n in ("social_term_ratio", "inclusive_term_ratio") if n in schema.names
        )
        extra = Explainer(FRIENDLINESS, "friendliness", bound, _friendliness)
    else:
        raise ValueError(f"unknown domain {domain!r}")
    return Registry(explainers=shared + [extra])


def generate_feedback(
    text,
    segments,
    doc_pred,
    segment_preds,
    snorm_doc,
    snorm_segments,
    registry,
    resources,
    schema,
    doc_vector,
    segment_vectors,
    k=2,
    t=0.0,
    max_utility_label=None,
):
    """Assemble the report: document scope plus every low-quality segment.

    doc_pred / segment_preds: (label, confidence). snorm_* may be None for
    scopes predicted high quality (no feedback is computed there).
    """
    diagnostics = []
    doc_label, doc_conf = doc_pred
    doc_items = []
    if snorm_doc is not None:
        scored = score_explainers(snorm_doc, binding_matrix(registry, schema), registry, k, t)
        ctx = GenContext(
            text=text, vector=doc_vector, raw=raw_features(text, resources),
            resources=resources, schema=schema,
        )
        doc_items = run_explainers(scored, registry, ctx, diagnostics)
    seg_scopes = []
    for seg, pred, snorm, vec in zip(segments, segment_preds, snorm_segments, segment_vectors):
        label, conf = pred
        items = []
        if snorm is not None:
            scored = score_explainers(snorm, binding_matrix(registry, schema), registry, k, t)
            ctx = GenContext(
                text=seg.text, vector=vec, raw=raw_features(seg.text, resources),
                resources=resources, schema=schema,
            )
            items = run_explainers(scored, registry, ctx, diagnostics)
        seg_scopes.append(
            ScopeFeedback(
                start_char=seg.start_char,
                end_char=seg.end_char,
                label=label,
                confidence=conf,
                items=items,
                low_quality=snorm is not None,
            )
        )
    return FeedbackReport(
        doc_label=doc_label,
        doc_confidence=doc_conf,
        doc_items=doc_items,
        segments=seg_scopes,
        diagnostics=diagnostics,
        doc_low_quality=snorm_doc is not None,
    )
