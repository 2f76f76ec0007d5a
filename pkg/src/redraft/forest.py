"""Random forests whose decision paths are first-class, serialisable objects.

Trees are stored as flat lists of root-to-leaf paths. Each path carries its
comparison conditions, its vote, and the label counts of the bootstrap samples
that reached the leaf, so downstream analysis can reason about the paths
directly instead of re-walking node structures.

Tie-breaking is fixed everywhere: higher utility first, then smaller label id.
Training is deterministic given the seed; per-tree generators are derived from
the master seed so tree construction order never matters.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .kernels.splits import best_split
from .schema import FeatureSchema

LE = "le"
GT = "gt"


class ForestError(ValueError):
    pass


@dataclass(frozen=True)
class ForestParams:
    num_trees: int = 10
    max_depth: int = 6
    min_leaf: int = 1
    features_per_split: int = 0  # 0 means all features
    seed: int = 0


@dataclass(frozen=True)
class DecisionPath:
    conditions: tuple  # ((feature_index, "le"|"gt", threshold), ...)
    vote: int
    counts: dict  # label id -> bootstrap sample count

    def matches(self, x):
        for feat, op, thr in self.conditions:
            v = x[feat]
            if op == LE:
                if not v <= thr:
                    return False
            elif not v > thr:
                return False
        return True

    def interval(self, feature):
        """The (lo, hi] interval this path allows for one feature.

        lo is exclusive (from > conditions), hi inclusive (from <= conditions);
        unconstrained sides are infinite.
        """
        lo, hi = -math.inf, math.inf
        for feat, op, thr in self.conditions:
            if feat != feature:
                continue
            if op == GT:
                lo = max(lo, thr)
            else:
                hi = min(hi, thr)
        return lo, hi

    @property
    def touched_features(self):
        return sorted({c[0] for c in self.conditions})

    def purity(self):
        total = sum(self.counts.values())
        if total == 0:
            raise ForestError("empty leaf: no samples behind path")
        return self.counts[self.vote] / total


def path_confidence(path):
    """Fraction of the leaf's samples whose label matches the path's vote."""
    return path.purity()


@dataclass(frozen=True)
class Tree:
    paths: tuple

    def match(self, x):
        for p in self.paths:
            if p.matches(x):
                return p
        raise ForestError("no path matched; tree does not partition the space")


@dataclass
class RandomForest:
    schema: FeatureSchema
    trees: list
    labels: list  # label id -> label string
    utility: np.ndarray  # label id -> utility value
    seed: int
    n_features: int = 0
    params: ForestParams = field(default=ForestParams())

    def __post_init__(self):
        if not self.n_features:
            if self.schema is not None:
                self.n_features = len(self.schema)
            else:
                self.n_features = 1 + max(
                    (c[0] for _ti, p in self.iter_paths() for c in p.conditions),
                    default=-1,
                )

    def label_id(self, label):
        return self.labels.index(label)

    def best_label(self, candidates):
        """Deterministic winner among label ids: higher utility, then smaller id."""
        return min(candidates, key=lambda lid: (-self.utility[lid], lid))

    def tree_votes(self, x):
        return [t.match(x).vote for t in self.trees]

    def predict(self, x):
        """Majority vote over trees -> (label id, fraction of trees agreeing)."""
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.n_features,):
            raise ForestError(
                f"schema mismatch: expected {self.n_features} features, got {x.shape}"
            )
        votes = self.tree_votes(x)
        counts = np.bincount(votes, minlength=len(self.labels))
        top = counts.max()
        winner = self.best_label([lid for lid in range(len(self.labels)) if counts[lid] == top])
        return winner, counts[winner] / len(self.trees)

    def predict_label(self, x):
        lid, conf = self.predict(x)
        return self.labels[lid], conf

    def max_utility(self):
        return float(self.utility.max())

    def iter_paths(self):
        for ti, tree in enumerate(self.trees):
            for path in tree.paths:
                yield ti, path


def index_paths_by_utility(model):
    """Every path exactly once, keyed by the utility of its vote."""
    index = {}
    for ti, path in model.iter_paths():
        index.setdefault(float(model.utility[path.vote]), []).append((ti, path))
    return index


def improving_paths(model, base_utility):
    """All (tree index, path) whose vote utility strictly exceeds base_utility."""
    out = []
    for u, entries in sorted(index_paths_by_utility(model).items()):
        if u > base_utility:
            out.extend(entries)
    return out


def default_utility(labels):
    """Evenly spaced utilities by reverse sorted-order position.

    Matches the high/low naming convention ("high" < "low" sorts first and
    gets utility 1.0). Pass an explicit mapping for anything else.
    """
    n = len(labels)
    if n == 1:
        return {labels[0]: 1.0}
    return {lab: (n - 1 - i) / (n - 1) for i, lab in enumerate(sorted(labels))}


def _leaf_vote(counts, utility):
    top = counts.max()
    best = min(
        (lid for lid in range(len(counts)) if counts[lid] == top),
        key=lambda lid: (-utility[lid], lid),
    )
    return best


def _grow(X, y, idx, depth, conds, params, utility, rng, paths):
    counts = np.bincount(y[idx], minlength=len(utility))
    n_labels = len(utility)
    pure = counts.max() == idx.shape[0]
    if depth >= params.max_depth or pure or idx.shape[0] < 2 * params.min_leaf:
        split = None
    else:
        n_feat = X.shape[1]
        k = params.features_per_split or n_feat
        k = min(k, n_feat)
        feats = np.sort(rng.choice(n_feat, size=k, replace=False))
        gini, col, thr = best_split(
            np.ascontiguousarray(X[idx][:, feats]), y[idx], n_labels, params.min_leaf
        )
        parent = 1.0 - float(((counts / idx.shape[0]) ** 2).sum())
        split = (int(feats[col]), float(thr)) if col >= 0 and gini < parent else None
    if split is None:
        vote = _leaf_vote(counts, utility)
        paths.append(
            DecisionPath(
                conditions=tuple(conds),
                vote=vote,
                counts={lid: int(c) for lid, c in enumerate(counts) if c > 0},
            )
        )
        return
    feat, thr = split
    mask = X[idx, feat] <= thr
    _grow(X, y, idx[mask], depth + 1, conds + [(feat, LE, thr)], params, utility, rng, paths)
    _grow(X, y, idx[~mask], depth + 1, conds + [(feat, GT, thr)], params, utility, rng, paths)


def train_forest(X, labels, schema, params, utility=None):
    """Bagged CART training over normalized feature vectors.

    X: (n, d) array in [0, 1]; labels: per-row label strings. Deterministic
    given params.seed. Raises on empty or single-label input.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] == 0:
        raise ForestError("empty corpus")
    if schema is not None and X.shape[1] != len(schema):
        raise ForestError("schema mismatch: feature count differs from schema size")
    label_list = sorted(set(labels))
    if len(label_list) < 2:
        raise ForestError("degenerate labels: need at least two distinct labels")
    if utility is None:
        utility = default_utility(label_list)
    missing = [lab for lab in label_list if lab not in utility]
    if missing:
        raise ForestError(f"utility undefined for labels {missing}")
    util = np.array([float(utility[lab]) for lab in label_list])
    y = np.array([label_list.index(lab) for lab in labels], dtype=np.int64)

    master = np.random.default_rng(params.seed)
    tree_seeds = master.integers(0, 2**31 - 1, size=params.num_trees)
    trees = []
    n = X.shape[0]
    for ti in range(params.num_trees):
        rng = np.random.default_rng(int(tree_seeds[ti]))
        boot = rng.integers(0, n, size=n)
        paths = []
        _grow(X[boot], y[boot], np.arange(n), 0, [], params, util, rng, paths)
        trees.append(Tree(paths=tuple(paths)))
    return RandomForest(
        schema=schema,
        trees=trees,
        labels=label_list,
        utility=util,
        seed=params.seed,
        n_features=X.shape[1],
        params=params,
    )


# --- persistence ------------------------------------------------------------

def canonical_dumps(obj):
    """Canonical JSON: sorted keys, no whitespace, repr-exact floats."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def forest_to_dict(model):
    return {
        "schema": model.schema.to_json_dict() if model.schema is not None else None,
        "trees": [
            {
                "paths": [
                    {
                        "conds": [[f, op, thr] for f, op, thr in p.conditions],
                        "vote": model.labels[p.vote],
                        "counts": {model.labels[lid]: c for lid, c in p.counts.items()},
                    }
                    for p in t.paths
                ]
            }
            for t in model.trees
        ],
        "labels": model.labels,
        "utility": {lab: float(model.utility[i]) for i, lab in enumerate(model.labels)},
        "seed": model.seed,
        "nFeatures": model.n_features,
        "params": {
            "numTrees": model.params.num_trees,
            "maxDepth": model.params.max_depth,
            "minLeaf": model.params.min_leaf,
            "featuresPerSplit": model.params.features_per_split,
            "seed": model.params.seed,
        },
    }


def forest_from_dict(obj):
    labels = list(obj["labels"])
    lid = {lab: i for i, lab in enumerate(labels)}
    trees = []
    for t in obj["trees"]:
        paths = []
        for p in t["paths"]:
            paths.append(
                DecisionPath(
                    conditions=tuple((int(f), op, float(thr)) for f, op, thr in p["conds"]),
                    vote=lid[p["vote"]],
                    counts={lid[lab]: int(c) for lab, c in p["counts"].items()},
                )
            )
        trees.append(Tree(paths=tuple(paths)))
    params = obj.get("params", {})
    return RandomForest(
        schema=FeatureSchema.from_json_dict(obj["schema"]) if obj.get("schema") else None,
        trees=trees,
        labels=labels,
        utility=np.array([float(obj["utility"][lab]) for lab in labels]),
        seed=int(obj["seed"]),
        n_features=int(obj.get("nFeatures", 0)),
        params=ForestParams(
            num_trees=params.get("numTrees", len(trees)),
            max_depth=params.get("maxDepth", 0),
            min_leaf=params.get("minLeaf", 1),
            features_per_split=params.get("featuresPerSplit", 0),
            seed=params.get("seed", int(obj["seed"])),
        ),
    )


def serialize_forest(model):
    return canonical_dumps(forest_to_dict(model))


def deserialize_forest(text):
    return forest_from_dict(json.loads(text))
