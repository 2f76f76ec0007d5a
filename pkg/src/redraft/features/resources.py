"""Corpus-derived resources backing the feature extractors.

Everything is built deterministically from the training documents and a seed:
the topic model, the idf table, mined jargon, TF-IDF profiles of sampled
high/low quality documents, and their top content terms. The valence lexicon
and stopword list are packaged files referenced by the bundle, not copied
into it.
"""

from dataclasses import dataclass, field

import numpy as np

from ..textutil import tokenize
from ..topics import LdaModel, fit_lda
from .apriori import mine_jargon
from .lexicon import Lexicon, load_lexicon, load_stopwords
from .tfidf import build_idf, centroid, tfidf_vector


@dataclass
class FeatureResources:
    lexicon: Lexicon
    stopwords: frozenset
    idf: dict
    jargon: list  # [(terms_tuple, support)] over the whole corpus
    jargon_terms: list  # distinct suggestable terms, best support first
    high_profile: dict
    low_profile: dict
    high_top_terms: list
    low_top_terms: list
    lda: LdaModel
    positive_label: str
    seed: int = 0

    def to_json_dict(self):
        return {
            "idf": {t: float(v) for t, v in sorted(self.idf.items())},
            "jargon": [[list(terms), float(s)] for terms, s in self.jargon],
            "jargonTerms": list(self.jargon_terms),
            "highProfile": {t: float(v) for t, v in sorted(self.high_profile.items())},
            "lowProfile": {t: float(v) for t, v in sorted(self.low_profile.items())},
            "highTopTerms": list(self.high_top_terms),
            "lowTopTerms": list(self.low_top_terms),
            "lda": self.lda.to_json_dict(),
            "positiveLabel": self.positive_label,
            "seed": self.seed,
        }

    @classmethod
    def from_json_dict(cls, obj, lexicon=None, stopwords=None):
        return cls(
            lexicon=lexicon or load_lexicon(),
            stopwords=stopwords or load_stopwords(),
            idf=dict(obj["idf"]),
            jargon=[(tuple(terms), float(s)) for terms, s in obj["jargon"]],
            jargon_terms=list(obj["jargonTerms"]),
            high_profile=dict(obj["highProfile"]),
            low_profile=dict(obj["lowProfile"]),
            high_top_terms=list(obj["highTopTerms"]),
            low_top_terms=list(obj["lowTopTerms"]),
            lda=LdaModel.from_json_dict(obj["lda"]),
            positive_label=obj["positiveLabel"],
            seed=int(obj.get("seed", 0)),
        )


def _top_content_terms(token_lists, stopwords, k=20):
    counts = {}
    for toks in token_lists:
        for t in toks:
            if t not in stopwords:
                counts[t] = counts.get(t, 0) + 1
    return [t for t, _c in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:k]]


def build_resources(
    documents,
    positive_label,
    seed=0,
    n_topics=4,
    lda_iterations=150,
    alpha=0.5,
    beta=0.1,
    jargon_min_support=0.2,
    jargon_max_size=2,
    sample_size=50,
    lexicon=None,
    stopwords=None,
):
    """documents: (text, label) pairs from the training split."""
    lexicon = lexicon or load_lexicon()
    stopwords = stopwords or load_stopwords()
    token_lists = [tokenize(text) for text, _label in documents]
    content_lists = [[t for t in toks if t not in stopwords] for toks in token_lists]

    lda = fit_lda(
        token_lists, n_topics, iterations=lda_iterations, alpha=alpha, beta=beta,
        seed=seed, stopwords=stopwords,
    )
    idf = build_idf(content_lists)

    rng = np.random.default_rng(seed)
    high_idx = [i for i, (_t, lab) in enumerate(documents) if lab == positive_label]
    low_idx = [i for i, (_t, lab) in enumerate(documents) if lab != positive_label]

    def sample(idx):
        if len(idx) <= sample_size:
            return list(idx)
        return sorted(rng.choice(idx, size=sample_size, replace=False).tolist())

    high_s, low_s = sample(high_idx), sample(low_idx)
    high_profile = centroid([tfidf_vector(content_lists[i], idf) for i in high_s])
    low_profile = centroid([tfidf_vector(content_lists[i], idf) for i in low_s])
    high_top = _top_content_terms([token_lists[i] for i in high_s], stopwords)
    low_top = _top_content_terms([token_lists[i] for i in low_s], stopwords)

    jargon = mine_jargon(
        [set(content_lists[i]) for i in high_s],
        min_support=jargon_min_support,
        max_set_size=jargon_max_size,
    )
    seen = set()
    jargon_terms = []
    for terms, _s in jargon:
        for t in terms:
            if t not in seen:
                seen.add(t)
                jargon_terms.append(t)

    return FeatureResources(
        lexicon=lexicon,
        stopwords=stopwords,
        idf=idf,
        jargon=jargon,
        jargon_terms=jargon_terms,
        high_profile=high_profile,
        low_profile=low_profile,
        high_top_terms=high_top,
        low_top_terms=low_top,
        lda=lda,
        positive_label=positive_label,
        seed=seed,
    )
