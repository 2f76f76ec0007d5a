"""Model store, training pipeline, and the HTTP service.

A bundle is everything one corpus needs at serve time: the topic model and
feature resources, a document-level and a segment-level quality forest, and
the baseline responsibility statistics used to normalize scores. Bundles are
immutable once published; republishing a corpus name requires a version bump
and readers always see either the old or the new version. All bundle files
are canonical JSON with no timestamps, so identical training inputs produce
byte-identical bundles.
"""

import json
import os
import threading
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from .corpus import CorpusError, LabeledCorpus
from .feedback import FeedbackReport, builtin_registry, generate_feedback
from .features import FEATURE_DEFS, build_resources, extract_features
from .features.resources import FeatureResources
from .forest import (
    ForestParams,
    canonical_dumps,
    forest_from_dict,
    forest_to_dict,
    train_forest,
)
from .responsibility import ImpactConfig, feature_responsibility, zscore
from .schema import schema_from_raw_rows
from .segmenting import topictiling_segment
from .features.extract import raw_features


class ServiceError(ValueError):
    pass


class UnknownCorpusError(KeyError):
    pass


@dataclass(frozen=True)
class BundleConfig:
    seed: int = 0
    domain: str = "reviews"
    positive_label: str = "high"
    n_topics: int = 4
    lda_iterations: int = 150
    lda_alpha: float = 0.5
    lda_beta: float = 0.1
    num_trees: int = 20
    max_depth: int = 6
    min_leaf: int = 2
    features_per_split: int = 8
    window: int = 2
    depth_threshold: float = None
    min_segment_sentences: int = 2
    top_k: int = 2
    score_threshold: float = 0.0
    baseline_size: int = 50
    jargon_min_support: float = 0.2
    jargon_max_size: int = 2

    @classmethod
    def from_dict(cls, obj):
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(obj) - known
        if unknown:
            raise ServiceError(f"unknown config keys: {sorted(unknown)}")
        return cls(**obj)


@dataclass
class Bundle:
    name: str
    version: int
    config: BundleConfig
    resources: FeatureResources
    doc_model: object
    seg_model: object
    doc_baseline: tuple  # (mean, std) arrays
    seg_baseline: tuple

    @property
    def labels(self):
        return self.doc_model.labels


def _forest_params(config):
    return ForestParams(
        num_trees=config.num_trees,
        max_depth=config.max_depth,
        min_leaf=config.min_leaf,
        features_per_split=config.features_per_split,
        seed=config.seed,
    )


def _baseline(vectors, model, cfg, size):
    vectors = vectors[:size]
    if len(vectors) < 2:
        raise ServiceError("degenerate corpus: need at least 2 low-quality baseline points")
    raws = np.array([feature_responsibility(v, model, cfg) for v in vectors])
    return raws.mean(axis=0), raws.std(axis=0)


def train_bundle(name, corpus: LabeledCorpus, config: BundleConfig, version=1):
    """Fit resources and both quality models from the training split.

    Segment training rows inherit their parent document's label. Baseline
    responsibility statistics come from the low-quality training points of
    each scope.
    """
    train_docs = corpus.require_trainable()
    labels = sorted({d.label for d in train_docs})
    if len(labels) != 2 or config.positive_label not in labels:
        raise CorpusError(
            f"expected two labels including {config.positive_label!r}, got {labels}"
        )
    negative = next(lab for lab in labels if lab != config.positive_label)
    utility = {config.positive_label: 1.0, negative: 0.0}

    resources = build_resources(
        [(d.text, d.label) for d in train_docs],
        positive_label=config.positive_label,
        seed=config.seed,
        n_topics=config.n_topics,
        lda_iterations=config.lda_iterations,
        alpha=config.lda_alpha,
        beta=config.lda_beta,
        jargon_min_support=config.jargon_min_support,
        jargon_max_size=config.jargon_max_size,
    )

    doc_raws = [raw_features(d.text, resources) for d in train_docs]
    doc_schema = schema_from_raw_rows(doc_raws, FEATURE_DEFS)
    doc_x = np.array([doc_schema.normalize_raw(r) for r in doc_raws])
    doc_y = [d.label for d in train_docs]
    doc_model = train_forest(doc_x, doc_y, doc_schema, _forest_params(config), utility)

    seg_texts, seg_labels = [], []
    for d in train_docs:
        for seg in topictiling_segment(
            d.text,
            resources.lda,
            resources.stopwords,
            window=config.window,
            depth_threshold=config.depth_threshold,
            min_segment_sentences=config.min_segment_sentences,
        ):
            seg_texts.append(seg.text)
            seg_labels.append(d.label)
    seg_raws = [raw_features(t, resources) for t in seg_texts]
    seg_schema = schema_from_raw_rows(seg_raws, FEATURE_DEFS)
    seg_x = np.array([seg_schema.normalize_raw(r) for r in seg_raws])
    seg_model = train_forest(seg_x, seg_labels, seg_schema, _forest_params(config), utility)

    cfg = ImpactConfig()
    doc_low = [doc_x[i] for i, d in enumerate(train_docs) if d.label == negative]
    seg_low = [seg_x[i] for i, lab in enumerate(seg_labels) if lab == negative]
    doc_baseline = _baseline(doc_low, doc_model, cfg, config.baseline_size)
    seg_baseline = _baseline(seg_low, seg_model, cfg, config.baseline_size)

    return Bundle(
        name=name,
        version=version,
        config=config,
        resources=resources,
        doc_model=doc_model,
        seg_model=seg_model,
        doc_baseline=doc_baseline,
        seg_baseline=seg_baseline,
    )


def get_feedback(bundle, text):
    """Segment, predict both scopes, explain the low-quality ones."""
    config = bundle.config
    resources = bundle.resources
    cfg = ImpactConfig()
    registry = builtin_registry(config.domain, bundle.doc_model.schema)

    if not text.strip():
        return FeedbackReport(
            doc_label="", doc_confidence=0.0, doc_items=[], segments=[], degenerate=True
        )

    doc_vec = extract_features(text, resources, bundle.doc_model.schema)
    doc_lid, doc_conf = bundle.doc_model.predict(doc_vec)
    doc_label = bundle.doc_model.labels[doc_lid]

    segments = topictiling_segment(
        text,
        resources.lda,
        resources.stopwords,
        window=config.window,
        depth_threshold=config.depth_threshold,
        min_segment_sentences=config.min_segment_sentences,
    )
    seg_vecs = [extract_features(s.text, resources, bundle.seg_model.schema) for s in segments]
    seg_preds = []
    for v in seg_vecs:
        lid, conf = bundle.seg_model.predict(v)
        seg_preds.append((bundle.seg_model.labels[lid], conf))

    def snorm_for(vec, model, baseline, label):
        if model.utility[model.label_id(label)] >= model.max_utility():
            return None
        raw = feature_responsibility(vec, model, cfg)
        return zscore(raw, baseline[0], baseline[1])

    snorm_doc = snorm_for(doc_vec, bundle.doc_model, bundle.doc_baseline, doc_label)
    snorm_segments = [
        snorm_for(v, bundle.seg_model, bundle.seg_baseline, lab)
        for v, (lab, _c) in zip(seg_vecs, seg_preds)
    ]
    return generate_feedback(
        text,
        segments,
        (doc_label, doc_conf),
        seg_preds,
        snorm_doc,
        snorm_segments,
        registry,
        resources,
        bundle.doc_model.schema,
        doc_vec,
        seg_vecs,
        k=config.top_k,
        t=config.score_threshold,
    )


# --- persistence ---------------------------------------------------------------

def _bundle_files(bundle):
    return {
        "manifest.json": {
            "name": bundle.name,
            "version": bundle.version,
            "labels": bundle.labels,
            "domain": bundle.config.domain,
            "config": asdict(bundle.config),
        },
        "doc_model.json": forest_to_dict(bundle.doc_model),
        "seg_model.json": forest_to_dict(bundle.seg_model),
        "resources.json": bundle.resources.to_json_dict(),
        "baselines.json": {
            "doc": {
                "mean": [float(x) for x in bundle.doc_baseline[0]],
                "std": [float(x) for x in bundle.doc_baseline[1]],
            },
            "seg": {
                "mean": [float(x) for x in bundle.seg_baseline[0]],
                "std": [float(x) for x in bundle.seg_baseline[1]],
            },
        },
    }


def save_bundle(bundle, directory):
    os.makedirs(directory, exist_ok=True)
    for fname, obj in _bundle_files(bundle).items():
        with open(os.path.join(directory, fname), "w", encoding="utf-8") as fh:
            fh.write(canonical_dumps(obj))


def load_bundle(directory):
    def read(fname):
        with open(os.path.join(directory, fname), encoding="utf-8") as fh:
            return json.load(fh)

    manifest = read("manifest.json")
    baselines = read("baselines.json")
    return Bundle(
        name=manifest["name"],
        version=int(manifest["version"]),
        config=BundleConfig.from_dict(manifest["config"]),
        resources=FeatureResources.from_json_dict(read("resources.json")),
        doc_model=forest_from_dict(read("doc_model.json")),
        seg_model=forest_from_dict(read("seg_model.json")),
        doc_baseline=(
            np.array(baselines["doc"]["mean"]),
            np.array(baselines["doc"]["std"]),
        ),
        seg_baseline=(
            np.array(baselines["seg"]["mean"]),
            np.array(baselines["seg"]["std"]),
        ),
    )


class ModelStore:
    """Versioned bundle directories under one root; atomic publish.

    Layout: <root>/<corpus>/v<version>/<files>. A publish writes into a
    scratch directory and renames it into place, so concurrent readers see
    either the previous version or the complete new one.
    """

    def __init__(self, root):
        self.root = root
        os.makedirs(root, exist_ok=True)
        self._lock = threading.Lock()
        self._cache = {}

    def _versions(self, name):
        base = os.path.join(self.root, name)
        if not os.path.isdir(base):
            return []
        out = []
        for entry in os.listdir(base):
            if entry.startswith("v") and entry[1:].isdigit():
                out.append(int(entry[1:]))
        return sorted(out)

    def names(self):
        return sorted(
            n
            for n in os.listdir(self.root)
            if os.path.isdir(os.path.join(self.root, n)) and self._versions(n)
        )

    def latest_version(self, name):
        versions = self._versions(name)
        return versions[-1] if versions else 0

    def next_version(self, name):
        return self.latest_version(name) + 1

    def publish(self, bundle, version=None):
        with self._lock:
            current = self.latest_version(bundle.name)
            version = current + 1 if version is None else version
            if version <= current:
                raise ServiceError(
                    f"version {version} not above published v{current}; bump required"
                )
            bundle = replace(bundle, version=version)
            final = os.path.join(self.root, bundle.name, f"v{version}")
            scratch = final + ".tmp"
            save_bundle(bundle, scratch)
            os.replace(scratch, final)
            self._cache[(bundle.name, version)] = bundle
            return version

    def get(self, name, version=None):
        version = version or self.latest_version(name)
        if not version:
            raise UnknownCorpusError(name)
        key = (name, version)
        with self._lock:
            if key not in self._cache:
                directory = os.path.join(self.root, name, f"v{version}")
                if not os.path.isdir(directory):
                    raise UnknownCorpusError(f"{name} v{version}")
                self._cache[key] = load_bundle(directory)
            return self._cache[key]

    def describe(self):
        out = []
        for name in self.names():
            for version in self._versions(name):
                manifest_path = os.path.join(self.root, name, f"v{version}", "manifest.json")
                with open(manifest_path, encoding="utf-8") as fh:
                    manifest = json.load(fh)
                out.append(
                    {
                        "name": name,
                        "version": version,
                        "labels": manifest["labels"],
                        "domain": manifest["domain"],
                    }
                )
        return out
