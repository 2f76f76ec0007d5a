"""Exhaustive ground truth for maximum-influence perturbations on small models.

Forest predictions are piecewise constant on the grid induced by every split
threshold, so for a fixed feature subset the best perturbation restricted to
that subset is found by visiting each grid cell of the restriction and taking
the L2-closest in-cell point. Desk-scale only; inputs beyond the configured
bounds are rejected rather than approximated.

Impact here uses the general form: utility gain of the landed prediction,
discounted by the move's length, weighted by the forest majority fraction at
the landing point. The path-scan heuristic's purity-weighted form lives in
the responsibility module; keep the two apart so each stays testable.
"""

import itertools
import json
import math
from dataclasses import dataclass

import numpy as np

from .forest import DecisionPath, ForestParams, RandomForest, Tree
from .responsibility import (
    ImpactConfig,
    InfeasiblePathError,
    UnreachablePathError,
    apply_perturbation,
    feature_responsibility,
    landing_delta_gt,
    landing_delta_le,
    perturbation_norm,
)


class OracleTooLargeError(ValueError):
    pass


def general_impact(d, p, model, cfg):
    """Impact of an arbitrary perturbation under the general definition.

    Empty perturbations have impact 0 by convention (no movement allowed).
    """
    if not p:
        return 0.0
    x = apply_perturbation(d, p)
    if np.any(x < cfg.lower) or np.any(x > cfg.upper):
        raise UnreachablePathError("perturbation leaves the feature domain")
    base_label, _ = model.predict(np.asarray(d, dtype=np.float64))
    landed_label, conf = model.predict(x)
    gain = float(model.utility[landed_label] - model.utility[base_label])
    return gain / perturbation_norm(p) * conf


def feature_breakpoints(model, feature, cfg):
    """Sorted distinct split thresholds on one feature, inside the domain."""
    thrs = {
        thr
        for _ti, path in model.iter_paths()
        for f, _op, thr in path.conditions
        if f == feature and cfg.lower <= thr < cfg.upper
    }
    return sorted(thrs)


def _cells(breaks, lower, upper):
    """Intervals covering [lower, upper]: [lower, t1], then (t_i, t_i+1]."""
    edges = [lower] + list(breaks) + [upper]
    out = []
    for j in range(len(edges) - 1):
        if edges[j] < edges[j + 1] or j == 0:
            out.append((edges[j], edges[j + 1], j == 0))
    return out


def _cell_delta(v, cell, eps):
    """Delta to the L2-closest point of the cell, landing-exact in floats."""
    lo, hi, first = cell
    if v > hi:
        return landing_delta_le(v, hi)
    if not first and v <= lo:
        return landing_delta_gt(v, lo, eps)
    return 0.0


def exact_max_influence(d, subset, model, cfg, max_features=4, max_breakpoints=16):
    """Best perturbation confined to `subset`, by exhausting the cell grid.

    Returns ({} , 0.0) when no restricted move improves utility. Ties keep the
    first cell in lexicographic enumeration order.
    """
    d = np.asarray(d, dtype=np.float64)
    subset = sorted(set(subset))
    if len(subset) > max_features:
        raise OracleTooLargeError("instance too large for oracle: feature subset bound")
    if not subset:
        return {}, 0.0
    per_feature = []
    for feat in subset:
        breaks = feature_breakpoints(model, feat, cfg)
        if len(breaks) > max_breakpoints:
            raise OracleTooLargeError("instance too large for oracle: breakpoint bound")
        per_feature.append(_cells(breaks, cfg.lower, cfg.upper))
    base_label, _ = model.predict(d)
    base_u = float(model.utility[base_label])
    best = ({}, 0.0)
    for combo in itertools.product(*per_feature):
        p = {}
        for feat, cell in zip(subset, combo):
            delta = _cell_delta(d[feat], cell, cfg.epsilon)
            if delta != 0.0:
                p[feat] = delta
        if not p:
            continue
        x = apply_perturbation(d, p)
        landed, conf = model.predict(x)
        gain = float(model.utility[landed]) - base_u
        if gain <= 0.0:
            continue
        impact = gain / perturbation_norm(p) * conf
        if impact > best[1]:
            best = (p, impact)
    return best


def _perturbation_key(p):
    return tuple(sorted(p.items()))


def oracle_responsibility(d, model, cfg, max_power=6, candidates="cells"):
    """Exact responsibility by power-set enumeration.

    candidates="cells": one best perturbation per feature subset from the cell
    grid, deduplicated as a set union, impacts summed per touched feature.
    candidates="paths": restricts the candidate moves to the per-path minimal
    perturbations, one winner per (tree, perturbed set); this is the reference
    the path-scan heuristic matches exactly on single-tree models.
    """
    d = np.asarray(d, dtype=np.float64)
    n = model.n_features
    if n > max_power:
        raise OracleTooLargeError("instance too large for oracle: power-set bound")
    raw = np.zeros(n)
    base_label, _ = model.predict(d)
    if float(model.utility[base_label]) >= model.max_utility():
        return raw
    if candidates == "paths":
        winners = _path_candidates(d, model, cfg)
    elif candidates == "cells":
        seen = {}
        for r in range(1, n + 1):
            for subset in itertools.combinations(range(n), r):
                p, impact = exact_max_influence(d, subset, model, cfg)
                if p and impact > 0.0:
                    seen.setdefault(_perturbation_key(p), impact)
        winners = seen.items()
    else:
        raise ValueError(f"unknown candidate source {candidates!r}")
    for key, impact in winners:
        for feat, _delta in key:
            raw[feat] += impact
    return raw


def _path_candidates(d, model, cfg):
    """Best general-impact move per (tree, perturbed set) among path minima.

    Independent of the heuristic's scan: walks every path, rebuilds the
    feasible box per feature, and clamps into it.
    """
    base_label, _ = model.predict(d)
    base_u = float(model.utility[base_label])
    groups = {}
    for ti, path in model.iter_paths():
        if float(model.utility[path.vote]) <= base_u:
            continue
        try:
            p = _nearest_in_path_box(d, path, model, cfg)
        except (InfeasiblePathError, UnreachablePathError):
            continue
        if not p:
            continue
        impact = general_impact(d, p, model, cfg)
        key = (ti, tuple(sorted(p)))
        entry = (impact, _perturbation_key(p))
        if key not in groups or entry[0] > groups[key][0]:
            groups[key] = entry
    return [(pk, impact) for impact, pk in groups.values()]


def _feature_satisfied(path, feature, value):
    for f, op, thr in path.conditions:
        if f != feature:
            continue
        if op == "le":
            if not value <= thr:
                return False
        elif not value > thr:
            return False
    return True


def _nearest_in_path_box(d, path, model, cfg):
    """Closest in-domain point matching the path, by candidate-delta search.

    Per coordinate the optimum is either no move, a move onto a threshold
    (inclusive side), or a move just past one (strict side); scanning those
    candidates sidesteps the heuristic's interval-intersection code. Each
    candidate delta is landing-exact, and feasibility is tested on the landed
    value itself.
    """
    p = {}
    for feat in sorted({c[0] for c in path.conditions}):
        v = d[feat]
        thrs = sorted({thr for f, _op, thr in path.conditions if f == feat})
        candidates = [0.0]
        for thr in thrs:
            candidates.append(landing_delta_le(v, thr))
            candidates.append(landing_delta_gt(v, thr, cfg.epsilon))
        feasible = []
        for delta in candidates:
            landed = v + delta
            if cfg.lower <= landed <= cfg.upper and _feature_satisfied(path, feat, landed):
                feasible.append(delta)
        if not feasible:
            raise UnreachablePathError("unreachable path box")
        delta = min(feasible, key=abs)
        if delta != 0.0:
            p[feat] = delta
    return p


# --- random desk-scale instances and the agreement report --------------------

def random_instance(rng, n_features, n_trees, max_depth, pure_leaves=True):
    """A random forest over [0,1]^n built by recursive box splitting.

    Thresholds stay inside the live box so every path is satisfiable; labels
    are binary hi/lo with utilities 1/0.
    """
    labels = ["hi", "lo"]
    utility = np.array([1.0, 0.0])

    def grow(depth, box, conds, paths):
        if depth >= max_depth or (depth > 0 and rng.random() < 0.25):
            vote = int(rng.integers(0, 2))
            counts = {vote: int(rng.integers(2, 9))}
            if not pure_leaves:
                minority = int(rng.integers(0, counts[vote]))  # strictly fewer
                if minority:
                    counts[1 - vote] = minority
            paths.append(DecisionPath(conditions=tuple(conds), vote=vote, counts=counts))
            return
        feat = int(rng.integers(0, n_features))
        lo, hi = box[feat]
        thr = float(lo + (hi - lo) * (0.2 + 0.6 * rng.random()))
        left = dict(box)
        left[feat] = (lo, thr)
        right = dict(box)
        right[feat] = (thr, hi)
        grow(depth + 1, left, conds + [(feat, "le", thr)], paths)
        grow(depth + 1, right, conds + [(feat, "gt", thr)], paths)

    trees = []
    for _ in range(n_trees):
        paths = []
        grow(0, {f: (0.0, 1.0) for f in range(n_features)}, [], paths)
        trees.append(Tree(paths=tuple(paths)))
    return RandomForest(
        schema=None,
        trees=trees,
        labels=labels,
        utility=utility,
        seed=0,
        n_features=n_features,
        params=ForestParams(num_trees=n_trees, max_depth=max_depth),
    )


def random_low_utility_point(rng, model, attempts=200):
    for _ in range(attempts):
        d = rng.random(model.n_features)
        lid, _ = model.predict(d)
        if float(model.utility[lid]) < model.max_utility():
            return d
    return None


@dataclass
class AgreementReport:
    instances: int
    top1_agreement: float
    mean_rank_correlation: float

    def to_json(self):
        return json.dumps(
            {
                "instances": self.instances,
                "top1Agreement": self.top1_agreement,
                "meanRankCorrelation": self.mean_rank_correlation,
            },
            sort_keys=True,
        )


def agreement_report(instances=100, seed=7, n_features=4, n_trees=2, max_depth=3):
    """How often the heuristic's top feature matches the exact oracle's.

    Also reports the mean Spearman correlation between the two raw score
    vectors; instances where either vector is constant contribute 0 there.
    """
    from scipy.stats import spearmanr

    rng = np.random.default_rng(seed)
    cfg = ImpactConfig()
    agree = 0
    correlations = []
    done = 0
    while done < instances:
        model = random_instance(rng, n_features, n_trees, max_depth, pure_leaves=True)
        d = random_low_utility_point(rng, model)
        if d is None:
            continue
        heur = feature_responsibility(d, model, cfg)
        orac = oracle_responsibility(d, model, cfg)
        if not heur.any() or not orac.any():
            continue
        done += 1
        if int(heur.argmax()) == int(orac.argmax()):
            agree += 1
        if np.ptp(heur) > 0 and np.ptp(orac) > 0:
            rho = float(spearmanr(heur, orac)[0])
            correlations.append(0.0 if math.isnan(rho) else rho)
        else:
            correlations.append(0.0)
    return AgreementReport(
        instances=done,
        top1_agreement=agree / done,
        mean_rank_correlation=float(np.mean(correlations)),
    )
