import numpy as np
import pytest

from redraft.forest import DecisionPath, ForestParams, RandomForest, Tree
from redraft.responsibility import ImpactConfig


def make_forest(trees, labels=("hi", "lo"), utility=(1.0, 0.0), seed=0, n_features=0):
    """Hand-built forest from [(conditions, vote_label, counts_by_label)] trees."""
    label_list = list(labels)
    built = []
    for paths in trees:
        ps = []
        for conds, vote, counts in paths:
            ps.append(
                DecisionPath(
                    conditions=tuple(conds),
                    vote=label_list.index(vote),
                    counts={label_list.index(k): v for k, v in counts.items()},
                )
            )
        built.append(Tree(paths=tuple(ps)))
    return RandomForest(
        schema=None,
        trees=built,
        labels=label_list,
        utility=np.array(utility, dtype=np.float64),
        seed=seed,
        n_features=n_features,
        params=ForestParams(num_trees=len(built)),
    )


@pytest.fixture
def quality_tree():
    """Single tree over (len, emotion) in raw units, domain [0, 100].

    The current point (len=10, emotion=30) lands on the low leaf. Two leaves
    vote high: one reachable by dropping emotion to 10, one by dropping
    emotion to 15 while pushing len past 20.
    """
    LEN, EMO = 0, 1
    paths = [
        ([(EMO, "le", 10.0)], "high", {"high": 5}),
        ([(EMO, "gt", 10.0), (EMO, "le", 15.0), (LEN, "le", 20.0)], "low", {"low": 4}),
        ([(EMO, "gt", 10.0), (EMO, "le", 15.0), (LEN, "gt", 20.0)], "high", {"high": 3}),
        ([(EMO, "gt", 10.0), (EMO, "gt", 15.0)], "low", {"low": 6}),
    ]
    model = make_forest([paths], labels=("high", "low"))
    d = np.array([10.0, 30.0])
    cfg = ImpactConfig(lower=0.0, upper=100.0)
    return model, d, cfg
