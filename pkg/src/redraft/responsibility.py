"""Per-feature responsibility scores from improving decision paths.

For a point predicted below the best utility, every path voting a higher
utility prescribes a minimal (L2) move that would make the point match it.
Each move's impact is the utility gain discounted by the move's length and
weighted by a confidence term. Within a tree, moves touching the same feature
set are collapsed to the single highest-impact one; summing the survivors per
touched feature yields the raw responsibility vector.

Raw scores are biased toward features near tree roots (they appear in more
feature sets), so they are z-scored against a baseline sample of low-quality
points before any downstream ranking.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .forest import GT, LE, improving_paths, path_confidence

PATH_PURITY = "path_purity"
FOREST_MAJORITY = "forest_majority"


class InfeasiblePathError(ValueError):
    """The path's own conditions leave no satisfiable interval."""


class UnreachablePathError(ValueError):
    """The required target lies outside the feature domain."""


class InconsistentModelError(ValueError):
    """Zero-length perturbation paired with a nonzero utility gain."""


@dataclass(frozen=True)
class ImpactConfig:
    epsilon: float = 1e-6  # margin placed past strict (>) bounds
    confidence_source: str = PATH_PURITY
    lower: float = 0.0  # feature domain; vectors and thresholds live inside it
    upper: float = 1.0

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be > 0")
        if self.confidence_source not in (PATH_PURITY, FOREST_MAJORITY):
            raise ValueError(f"unknown confidence source {self.confidence_source!r}")


@dataclass
class ScanCounter:
    """Instrumentation: how many impact evaluations a scan performed."""

    impact_evals: int = 0


@dataclass
class ResponsibilityVector:
    raw: np.ndarray
    normalized: np.ndarray = None
    baseline_mean: np.ndarray = None
    baseline_std: np.ndarray = None


def perturbation_norm(p):
    return math.sqrt(sum(v * v for v in p.values()))


def apply_perturbation(d, p):
    x = np.array(d, dtype=np.float64, copy=True)
    for i, v in p.items():
        x[i] += v
    return x


def perturbed_set(p):
    return frozenset(p.keys())


def landing_delta_le(v, bound):
    """Largest delta whose float landing v + delta stays <= bound.

    delta = bound - v alone can round the landing one ulp past an inclusive
    threshold; nudge until the landed value really satisfies it.
    """
    delta = bound - v
    while v + delta > bound:
        delta = math.nextafter(delta, -math.inf)
    return delta


def landing_delta_gt(v, bound, eps):
    """Delta landing v about eps past a strict lower bound."""
    delta = (bound + eps) - v
    while v + delta <= bound:
        delta = math.nextafter(delta, math.inf)
    return delta


def min_perturbation(d, path, cfg):
    """The unique L2-minimal move (up to epsilon) making d match path.

    Violated <= bounds are met exactly; violated > bounds are passed by
    epsilon. Targets outside [cfg.lower, cfg.upper] make the path unreachable.
    """
    deltas = {}
    for feat in sorted({c[0] for c in path.conditions}):
        lo, hi = path.interval(feat)
        if not lo < hi:
            raise InfeasiblePathError(f"feature {feat}: empty interval ({lo}, {hi}]")
        v = d[feat]
        if lo < v <= hi:
            continue
        delta = landing_delta_le(v, hi) if v > hi else landing_delta_gt(v, lo, cfg.epsilon)
        landed = v + delta
        if landed > hi:
            raise InfeasiblePathError(
                f"feature {feat}: interval ({lo}, {hi}] narrower than epsilon"
            )
        if not cfg.lower <= landed <= cfg.upper:
            raise UnreachablePathError(
                f"unreachable path: feature {feat} target {landed} outside domain"
            )
        deltas[feat] = delta
    return deltas


def path_impact(d, path, model, cfg, minp=None, counter=None):
    """Utility gain over the minimal move's length, times confidence."""
    if minp is None:
        minp = min_perturbation(d, path, cfg)
    base_label, _ = model.predict(d)
    gain = float(model.utility[path.vote] - model.utility[base_label])
    delta = perturbation_norm(minp)
    if delta == 0.0:
        if gain != 0.0:
            raise InconsistentModelError(
                "inconsistent model state: zero-norm perturbation with nonzero utility gain"
            )
        raise InconsistentModelError("zero-norm perturbation: d already matches the path")
    if counter is not None:
        counter.impact_evals += 1
    if cfg.confidence_source == PATH_PURITY:
        conf = path_confidence(path)
    else:
        _, conf = model.predict(apply_perturbation(d, minp))
    return gain / delta * conf


def scan_improving(d, model, cfg):
    """Every reachable improving path with its minimal move, pre-grouping.

    Returns (tree_index, path_ordinal, path, perturbation) tuples. Paths whose
    target leaves the domain are dropped; so are already-matched improving
    paths (possible once three or more trees disagree), since they prescribe
    no change.
    """
    d = np.asarray(d, dtype=np.float64)
    base_label, _ = model.predict(d)
    base_u = float(model.utility[base_label])
    ordinals = {}
    for ti, tree in enumerate(model.trees):
        for k, p in enumerate(tree.paths):
            ordinals[(ti, id(p))] = k
    out = []
    for ti, path in improving_paths(model, base_u):
        try:
            minp = min_perturbation(d, path, cfg)
        except (InfeasiblePathError, UnreachablePathError):
            continue
        if not minp:
            continue
        out.append((ti, ordinals[(ti, id(path))], path, minp))
    return out


def _grouped_winners(d, model, cfg, counter=None):
    """Per tree, one winner per perturbed feature set.

    Ties on impact go to the lexicographically smallest feature-index
    sequence, then the smallest path ordinal. Impact is evaluated exactly once
    per reachable improving path, so the scan stays linear in path count.
    """
    winners = {}
    for ti, ordinal, path, minp in scan_improving(d, model, cfg):
        impact = path_impact(d, path, model, cfg, minp=minp, counter=counter)
        key = tuple(sorted(minp))
        rank = (-impact, key, ordinal)
        groups = winners.setdefault(ti, {})
        if key not in groups or rank < groups[key][0]:
            groups[key] = (rank, (path, minp, impact))
    return winners


def maximal_impact_paths(d, tree_index, model, cfg, counter=None):
    """The winning (path, perturbation, impact) per feature set of one tree."""
    groups = _grouped_winners(np.asarray(d, dtype=np.float64), model, cfg, counter).get(
        tree_index, {}
    )
    return [entry for _, entry in (groups[k] for k in sorted(groups))]


def feature_responsibility(d, model, cfg, counter=None):
    """Raw responsibility: per-feature sum of surviving path impacts.

    All-zero when d already sits at the maximum utility (no feedback needed).
    """
    d = np.asarray(d, dtype=np.float64)
    raw = np.zeros(model.n_features)
    base_label, _ = model.predict(d)
    if float(model.utility[base_label]) >= model.max_utility():
        return raw
    for groups in _grouped_winners(d, model, cfg, counter).values():
        for _rank, (_path, minp, impact) in groups.values():
            for feat in minp:
                raw[feat] += impact
    return raw


def baseline_stats(baseline, model, cfg):
    """Per-feature mean/std of raw responsibilities over a low-quality sample."""
    baseline = list(baseline)
    if len(baseline) < 2:
        raise ValueError("baseline must contain at least 2 points")
    raws = np.array([feature_responsibility(b, model, cfg) for b in baseline])
    return raws.mean(axis=0), raws.std(axis=0)


def zscore(raw, mean, std):
    out = np.zeros_like(raw)
    nz = std > 0
    out[nz] = (raw[nz] - mean[nz]) / std[nz]
    return out


def normalize_responsibility(raw, baseline, model, cfg):
    """z-score a raw responsibility vector against the baseline sample."""
    mean, std = baseline_stats(baseline, model, cfg)
    return ResponsibilityVector(
        raw=np.asarray(raw, dtype=np.float64),
        normalized=zscore(np.asarray(raw, dtype=np.float64), mean, std),
        baseline_mean=mean,
        baseline_std=std,
    )
