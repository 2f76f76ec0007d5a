"""Deterministic tokenization, sentence spans, and syllable counting.

Everything here is intentionally rule-based: the same text must produce the
same output on every run and platform, because model features, segment
offsets, and cached feedback all depend on it.
"""

import re

_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)
_SENT_END_RE = re.compile(r"[.!?]+(?=\s|$)")
_VOWEL_GROUP_RE = re.compile(r"[aeiouy]+")

FIRST_PERSON = frozenset({"i", "me", "my", "mine", "we", "our", "ours", "us"})


def tokenize(text):
    """Lowercased alphanumeric tokens (underscore excluded)."""
    return [t.lower() for t in _WORD_RE.findall(text)]


def cased_tokens(text):
    return _WORD_RE.findall(text)


def sentence_spans(text):
    """(start, end) spans that tile the text exactly.

    A sentence ends at {., !, ?} followed by whitespace or EOL; each span
    absorbs the trailing punctuation and whitespace up to the next start, so
    concatenating the slices reproduces the document byte for byte.
    """
    if not text:
        return []
    starts = [0]
    for m in _SENT_END_RE.finditer(text):
        j = m.end()
        while j < len(text) and text[j].isspace():
            j += 1
        if j < len(text) and j > starts[-1]:
            starts.append(j)
    spans = []
    for i, s in enumerate(starts):
        e = starts[i + 1] if i + 1 < len(starts) else len(text)
        spans.append((s, e))
    return spans


def sentences(text):
    return [text[a:b] for a, b in sentence_spans(text)]


def count_syllables(word):
    """Vowel-group heuristic: contiguous [aeiouy] runs, silent final e dropped."""
    w = word.lower()
    groups = len(_VOWEL_GROUP_RE.findall(w))
    if groups > 1 and w.endswith("e") and not w.endswith(("le", "ee", "ye")):
        groups -= 1
    return max(1, groups)
