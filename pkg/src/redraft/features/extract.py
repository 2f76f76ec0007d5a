"""The text quality feature library.

Five categories, one deterministic extractor per feature. Several literature
features need taggers or proprietary lexicons we do not ship; those are
replaced by named surrogates (capitalized-run counts for entity mentions,
lexicon tag ratios for adjectives and social language, function-word ratios
for part-of-speech distributions) so nothing claims parity it does not have.
"""

import numpy as np

from ..textutil import (
    FIRST_PERSON,
    cased_tokens,
    count_syllables,
    sentence_spans,
    sentences,
    tokenize,
)
from ..topics import infer_topic_dist, topic_entropy
from .readability import readability_scores
from .tfidf import tfidf_similarity, tfidf_vector

FEATURE_DEFS = (
    # informativeness
    ("word_count", "informativeness"),
    ("sentence_count", "informativeness"),
    ("char_count", "informativeness"),
    ("avg_word_len", "informativeness"),
    ("avg_sentence_len", "informativeness"),
    ("jargon_hit_count", "informativeness"),
    ("jargon_coverage", "informativeness"),
    ("capitalized_run_count", "informativeness"),
    # topic
    ("topic_entropy", "topic"),
    ("top_topic_prob", "topic"),
    ("second_topic_prob", "topic"),
    ("top_topic_id_norm", "topic"),
    ("topic_vocab_coverage", "topic"),
    # subjectivity
    ("mean_valence", "subjectivity"),
    ("valence_spread", "subjectivity"),
    ("positive_ratio", "subjectivity"),
    ("negative_ratio", "subjectivity"),
    ("lexicon_coverage", "subjectivity"),
    ("upper_case_ratio", "subjectivity"),
    ("first_person_ratio", "subjectivity"),
    ("exclamation_density", "subjectivity"),
    ("evaluative_term_ratio", "subjectivity"),
    ("social_term_ratio", "subjectivity"),
    ("inclusive_term_ratio", "subjectivity"),
    # readability
    ("ari", "readability"),
    ("coleman_liau", "readability"),
    ("flesch_reading_ease", "readability"),
    ("gunning_fog", "readability"),
    ("smog", "readability"),
    ("punctuation_ratio", "readability"),
    ("function_word_ratio", "readability"),
    ("lexical_diversity", "readability"),
    ("avg_syllables_per_word", "readability"),
    ("readability_degenerate", "readability"),
    # similarity
    ("tfidf_sim_high", "similarity"),
    ("tfidf_sim_low", "similarity"),
    ("top_terms_overlap_high", "similarity"),
    ("top_terms_overlap_low", "similarity"),
)

FEATURE_NAMES = tuple(name for name, _cat in FEATURE_DEFS)

_PUNCT = set(".,!?;:'\"()-")


def subjectivity_scores(text, lexicon):
    """Valence and style statistics from the lexicon and casing rules.

    Tokens missing from the lexicon contribute no valence; coverage reports
    how sparse the match was so models can weigh the signal accordingly.
    """
    toks = tokenize(text)
    n = len(toks)
    matched = [lexicon.valence[t] for t in toks if t in lexicon.valence]
    letters = [ch for ch in text if ch.isalpha()]
    sentence_means = []
    for sent in sentences(text):
        vals = [lexicon.valence[t] for t in tokenize(sent) if t in lexicon.valence]
        if vals:
            sentence_means.append(float(np.mean(vals)))
    first_person_count = sum(1 for t in toks if t in FIRST_PERSON)

    def tag_ratio(tag):
        return sum(1 for t in toks if tag in lexicon.tags.get(t, ())) / n if n else 0.0

    return {
        "mean_valence": float(np.mean(matched)) if matched else 0.0,
        "valence_spread": float(np.std(sentence_means)) if len(sentence_means) > 1 else 0.0,
        "positive_ratio": sum(1 for t in toks if lexicon.valence.get(t, 0.0) > 0) / n if n else 0.0,
        "negative_ratio": sum(1 for t in toks if lexicon.valence.get(t, 0.0) < 0) / n if n else 0.0,
        "lexicon_coverage": len(matched) / n if n else 0.0,
        "upper_case_ratio": (
            sum(1 for ch in letters if ch.isupper()) / len(letters) if letters else 0.0
        ),
        "first_person_count": first_person_count,
        "first_person_ratio": first_person_count / n if n else 0.0,
        "evaluative_term_ratio": tag_ratio("evaluative"),
        "social_term_ratio": tag_ratio("social"),
        "inclusive_term_ratio": tag_ratio("inclusive"),
    }


def _capitalized_run_count(text):
    """Maximal runs of two or more consecutive capitalized tokens."""
    runs = 0
    length = 0
    for tok in cased_tokens(text):
        if tok[0].isupper() and tok[1:].islower() and len(tok) > 1:
            length += 1
        else:
            runs += length >= 2
            length = 0
    return runs + (length >= 2)


def raw_features(text, resources):
    """All raw (unnormalized) feature values for one text."""
    toks = tokenize(text)
    content = [t for t in toks if t not in resources.stopwords]
    n = len(toks)
    spans = sentence_spans(text.strip())
    n_sents = len(spans)

    out = {}
    out["word_count"] = float(n)
    out["sentence_count"] = float(n_sents)
    out["char_count"] = float(len(text))
    out["avg_word_len"] = sum(len(t) for t in toks) / n if n else 0.0
    out["avg_sentence_len"] = n / n_sents if n_sents else 0.0
    present = set(toks)
    out["jargon_hit_count"] = float(sum(1 for t in resources.jargon_terms if t in present))
    top20 = resources.jargon_terms[:20]
    out["jargon_coverage"] = (
        sum(1 for t in top20 if t in present) / len(top20) if top20 else 0.0
    )
    out["capitalized_run_count"] = float(_capitalized_run_count(text))

    dist, in_vocab = infer_topic_dist(resources.lda, content)
    order = np.argsort(-dist, kind="stable")
    out["topic_entropy"] = topic_entropy(dist)
    out["top_topic_prob"] = float(dist[order[0]])
    out["second_topic_prob"] = float(dist[order[1]]) if len(dist) > 1 else 0.0
    out["top_topic_id_norm"] = float(order[0]) / max(1, resources.lda.n_topics - 1)
    out["topic_vocab_coverage"] = in_vocab / n if n else 0.0

    subj = subjectivity_scores(text, resources.lexicon)
    for key in (
        "mean_valence",
        "valence_spread",
        "positive_ratio",
        "negative_ratio",
        "lexicon_coverage",
        "upper_case_ratio",
        "first_person_ratio",
        "evaluative_term_ratio",
        "social_term_ratio",
        "inclusive_term_ratio",
    ):
        out[key] = subj[key]
    out["exclamation_density"] = text.count("!") / n if n else 0.0

    rs = readability_scores(text)
    out["ari"] = rs.ari
    out["coleman_liau"] = rs.coleman_liau
    out["flesch_reading_ease"] = rs.flesch_reading_ease
    out["gunning_fog"] = rs.gunning_fog
    out["smog"] = rs.smog
    out["punctuation_ratio"] = (
        sum(1 for ch in text if ch in _PUNCT) / len(text) if text else 0.0
    )
    out["function_word_ratio"] = (
        sum(1 for t in toks if t in resources.stopwords) / n if n else 0.0
    )
    out["lexical_diversity"] = len(set(toks)) / n if n else 0.0
    out["avg_syllables_per_word"] = sum(count_syllables(t) for t in toks) / n if n else 0.0
    out["readability_degenerate"] = 1.0 if rs.degenerate else 0.0

    out["tfidf_sim_high"] = tfidf_similarity(content, resources.high_profile, resources.idf)
    out["tfidf_sim_low"] = tfidf_similarity(content, resources.low_profile, resources.idf)
    out["top_terms_overlap_high"] = (
        sum(1 for t in resources.high_top_terms if t in present) / len(resources.high_top_terms)
        if resources.high_top_terms
        else 0.0
    )
    out["top_terms_overlap_low"] = (
        sum(1 for t in resources.low_top_terms if t in present) / len(resources.low_top_terms)
        if resources.low_top_terms
        else 0.0
    )
    return out


def extract_features(text, resources, schema):
    """Normalized feature vector under the given schema."""
    return schema.normalize_raw(raw_features(text, resources))
