"""Feature schemas: ordered, named feature sets with raw-range normalization.

A schema fixes the coordinate order of every feature vector. Raw values are
mapped into [0, 1] by the per-feature raw range, clamping anything outside.
"""

from dataclasses import dataclass

import numpy as np

CATEGORIES = (
    "informativeness",
    "topic",
    "subjectivity",
    "readability",
    "similarity",
    "custom",
)


class SchemaError(ValueError):
    pass


@dataclass(frozen=True)
class Feature:
    name: str
    category: str
    raw_min: float
    raw_max: float


class FeatureSchema:
    def __init__(self, features):
        features = list(features)
        names = [f.name for f in features]
        if len(set(names)) != len(names):
            raise SchemaError("duplicate feature names")
        for f in features:
            if f.category not in CATEGORIES:
                raise SchemaError(f"unknown category {f.category!r} for {f.name}")
            if not f.raw_min < f.raw_max:
                raise SchemaError(f"raw_min must be < raw_max for {f.name}")
        self.features = features
        self._index = {f.name: i for i, f in enumerate(features)}

    def __len__(self):
        return len(self.features)

    @property
    def names(self):
        return [f.name for f in self.features]

    def index(self, name):
        return self._index[name]

    def names_in_category(self, category):
        return [f.name for f in self.features if f.category == category]

    def normalize_raw(self, raw):
        """Map a raw {name: value} dict to a clamped vector in [0, 1]^n."""
        out = np.empty(len(self.features), dtype=np.float64)
        for i, f in enumerate(self.features):
            span = f.raw_max - f.raw_min
            out[i] = min(1.0, max(0.0, (float(raw[f.name]) - f.raw_min) / span))
        return out

    def to_json_dict(self):
        return {
            "features": [
                {
                    "name": f.name,
                    "category": f.category,
                    "rawMin": f.raw_min,
                    "rawMax": f.raw_max,
                }
                for f in self.features
            ]
        }

    @classmethod
    def from_json_dict(cls, obj):
        return cls(
            Feature(e["name"], e["category"], float(e["rawMin"]), float(e["rawMax"]))
            for e in obj["features"]
        )


def schema_from_raw_rows(rows, feature_defs):
    """Build a schema whose raw ranges are the observed min/max per feature.

    rows: iterable of raw {name: value} dicts; feature_defs: (name, category)
    pairs in coordinate order. Constant columns get a unit-width range so the
    raw_min < raw_max invariant holds.
    """
    rows = list(rows)
    if not rows:
        raise SchemaError("no rows to derive raw ranges from")
    feats = []
    for name, category in feature_defs:
        vals = [float(r[name]) for r in rows]
        lo, hi = min(vals), max(vals)
        if not lo < hi:
            hi = lo + 1.0
        feats.append(Feature(name, category, lo, hi))
    return FeatureSchema(feats)
