"""Closed-form readability indices over deterministic text statistics."""

import math
from dataclasses import dataclass

from ..textutil import count_syllables, sentence_spans, tokenize


@dataclass(frozen=True)
class ReadabilityScores:
    ari: float
    coleman_liau: float
    flesch_reading_ease: float
    gunning_fog: float
    smog: float
    degenerate: bool = False


def text_stats(text):
    toks = tokenize(text)
    words = len(toks)
    sents = len(sentence_spans(text.strip()))
    letters = sum(1 for t in toks for ch in t if ch.isalpha())
    syllables = sum(count_syllables(t) for t in toks)
    complex_words = sum(1 for t in toks if count_syllables(t) >= 3)
    return words, sents, letters, syllables, complex_words


def readability_scores(text):
    """ARI, Coleman-Liau, Flesch reading ease, Gunning fog, SMOG.

    Zero words or zero sentences cannot be scored; those return all zeros with
    the degenerate flag set instead of raising, so live pipelines never abort
    on a half-typed draft.
    """
    words, sents, letters, syllables, complex_words = text_stats(text)
    if words == 0 or sents == 0:
        return ReadabilityScores(0.0, 0.0, 0.0, 0.0, 0.0, degenerate=True)
    ari = 4.71 * (letters / words) + 0.5 * (words / sents) - 21.43
    coleman_liau = 0.0588 * (100.0 * letters / words) - 0.296 * (100.0 * sents / words) - 15.8
    flesch = 206.835 - 1.015 * (words / sents) - 84.6 * (syllables / words)
    fog = 0.4 * ((words / sents) + 100.0 * (complex_words / words))
    smog = 1.0430 * math.sqrt(complex_words * 30.0 / sents) + 3.1291
    return ReadabilityScores(ari, coleman_liau, flesch, fog, smog)
