"""Extractor registry: resolvable ids behind feature-table declarations.

Every library feature doubles as an extractor id; applications register
custom ids (the user-defined extractors feature tables reference) alongside
them. Declarations naming unregistered ids fail resolution here rather than
silently producing empty columns.
"""

from .extract import FEATURE_NAMES, raw_features


class ExtractorRegistry:
    def __init__(self):
        self._extractors = {}
        for name in FEATURE_NAMES:
            self._extractors[name] = _library_extractor(name)

    def register(self, extractor_id, fn):
        """fn(text, resources) -> float; ids are unique."""
        if extractor_id in self._extractors:
            raise ValueError(f"extractor id {extractor_id!r} already registered")
        self._extractors[extractor_id] = fn
        return fn

    def ids(self):
        return sorted(self._extractors)

    def resolve(self, extractor_id):
        try:
            return self._extractors[extractor_id]
        except KeyError:
            raise KeyError(f"unknown extractor id {extractor_id!r}") from None

    def validate_feature_table(self, feature_table):
        """Every entry's extractor id must resolve; returns the resolved map."""
        missing = [e.extractor for e in feature_table.entries if e.extractor not in self._extractors]
        if missing:
            raise KeyError(
                f"feature table {feature_table.name!r} references unregistered extractors: {missing}"
            )
        return {e.feature: self._extractors[e.extractor] for e in feature_table.entries}


def _library_extractor(name):
    def extract(text, resources):
        return raw_features(text, resources)[name]

    return extract


def default_registry():
    return ExtractorRegistry()
