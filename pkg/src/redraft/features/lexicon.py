"""Valence lexicon and stopword list, loaded from packaged TSV/text files.

Lexicon rows: term<TAB>valence<TAB>comma-separated tags (tags optional).
The packaged lexicon is a small hand-curated open list; swap in a larger one
via the path arguments as long as the format matches.
"""

from dataclasses import dataclass
from importlib import resources as importlib_resources


@dataclass(frozen=True)
class Lexicon:
    valence: dict  # term -> float in [-1, 1]
    tags: dict  # term -> frozenset of tag strings

    def terms_tagged(self, tag):
        return {t for t, ts in self.tags.items() if tag in ts}


def _packaged(name):
    return importlib_resources.files("redraft").joinpath("data", name)


def load_lexicon(path=None):
    source = open(path, encoding="utf-8") if path else _packaged("lexicon.tsv").open("r", encoding="utf-8")
    valence = {}
    tags = {}
    with source as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            term = parts[0].strip().lower()
            valence[term] = float(parts[1])
            tag_field = parts[2].strip() if len(parts) > 2 else ""
            tags[term] = frozenset(t for t in tag_field.split(",") if t)
    return Lexicon(valence=valence, tags=tags)


def load_stopwords(path=None):
    source = open(path, encoding="utf-8") if path else _packaged("stopwords.txt").open("r", encoding="utf-8")
    with source as fh:
        return frozenset(w.strip().lower() for w in fh if w.strip())
