import math

import numpy as np
import pytest

from redraft.exact import (
    OracleTooLargeError,
    agreement_report,
    exact_max_influence,
    general_impact,
    oracle_responsibility,
    random_instance,
    random_low_utility_point,
)
from redraft.responsibility import (
    ImpactConfig,
    apply_perturbation,
    feature_responsibility,
    scan_improving,
)
from tests.conftest import make_forest

LEN, EMO = 0, 1


def test_empty_subset_no_movement(quality_tree):
    model, d, cfg = quality_tree
    assert exact_max_influence(d, [], model, cfg) == ({}, 0.0)


def test_quality_tree_emotion_subset(quality_tree):
    model, d, cfg = quality_tree
    p, impact = exact_max_influence(d, [EMO], model, cfg)
    assert set(p) == {EMO}
    assert p[EMO] == pytest.approx(-20.0, abs=1e-9)
    assert impact == pytest.approx(0.05, abs=1e-9)


def test_subset_bound_enforced(quality_tree):
    model, d, cfg = quality_tree
    with pytest.raises(OracleTooLargeError, match="too large"):
        exact_max_influence(d, [0, 1], model, cfg, max_features=1)


def test_power_set_bound_enforced():
    rng = np.random.default_rng(0)
    model = random_instance(rng, 7, 1, 2)
    with pytest.raises(OracleTooLargeError, match="too large"):
        oracle_responsibility(np.full(7, 0.5), model, ImpactConfig())


def test_oracle_dominates_all_path_perturbations():
    """Per feature subset, the oracle's best is an upper bound for every
    path-derived perturbation touching only that subset."""
    rng = np.random.default_rng(12)
    cfg = ImpactConfig()
    done = 0
    while done < 60:
        model = random_instance(rng, 5, 2, 3)
        d = random_low_utility_point(rng, model)
        if d is None:
            continue
        done += 1
        for _ti, _ordinal, _path, minp in scan_improving(d, model, cfg):
            subset = sorted(minp)
            _p, best = exact_max_influence(d, subset, model, cfg)
            assert general_impact(d, minp, model, cfg) <= best + 1e-9


def test_subset_monotone_opportunity():
    rng = np.random.default_rng(13)
    cfg = ImpactConfig()
    done = 0
    while done < 40:
        model = random_instance(rng, 4, 2, 3)
        d = random_low_utility_point(rng, model)
        if d is None:
            continue
        done += 1
        _, i01 = exact_max_influence(d, [0, 1], model, cfg)
        for sub in ([0], [1]):
            _, ismall = exact_max_influence(d, sub, model, cfg)
            assert ismall <= i01 + 1e-12


def test_identical_perturbations_deduplicated():
    # one improving path touching only feature 0: every superset subset finds
    # the same best perturbation, which must contribute exactly once
    paths = [
        ([(0, "le", 0.3)], "hi", {"hi": 2}),
        ([(0, "gt", 0.3)], "lo", {"lo": 2}),
    ]
    model = make_forest([paths], n_features=3)
    cfg = ImpactConfig()
    d = np.array([0.9, 0.5, 0.5])
    p, impact = exact_max_influence(d, [0, 1, 2], model, cfg)
    assert set(p) == {0}
    raw = oracle_responsibility(d, model, cfg)
    assert raw[0] == pytest.approx(impact)  # not multiplied by subset count
    assert raw[1] == raw[2] == 0.0


def test_oracle_zero_vector_at_max_utility(quality_tree):
    model, _d, cfg = quality_tree
    high = np.array([10.0, 5.0])
    assert not oracle_responsibility(high, model, cfg).any()


def test_cell_local_optimality():
    """Nudging the oracle's answer by +-eps/2 per coordinate never improves it.

    Valid competitors must keep the epsilon margin past strict bounds, so
    nudges landing within epsilon above a breakpoint are not counterexamples.
    """
    from redraft.exact import feature_breakpoints

    rng = np.random.default_rng(14)
    cfg = ImpactConfig()
    done = 0
    while done < 100:
        model = random_instance(rng, 3, 2, 3)
        d = random_low_utility_point(rng, model)
        if d is None:
            continue
        p, impact = exact_max_influence(d, [0, 1], model, cfg)
        if not p:
            continue
        done += 1
        for feat in p:
            breaks = feature_breakpoints(model, feat, cfg)
            for sign in (-1.0, 1.0):
                q = dict(p)
                q[feat] = q[feat] + sign * cfg.epsilon / 2
                x = apply_perturbation(d, q)
                if np.any(x < cfg.lower) or np.any(x > cfg.upper):
                    continue
                if any(t < x[feat] < t + cfg.epsilon for t in breaks):
                    continue
                assert general_impact(d, q, model, cfg) <= impact + 1e-9


def test_single_tree_heuristic_matches_oracle():
    rng = np.random.default_rng(15)
    cfg = ImpactConfig()
    done = 0
    while done < 50:
        model = random_instance(rng, 4, 1, 4)
        d = random_low_utility_point(rng, model)
        if d is None:
            continue
        done += 1
        heur = feature_responsibility(d, model, cfg)
        orac = oracle_responsibility(d, model, cfg, candidates="paths")
        np.testing.assert_allclose(heur, orac, atol=1e-9)


def test_agreement_report_structure_and_determinism():
    rep1 = agreement_report(instances=10, seed=3)
    rep2 = agreement_report(instances=10, seed=3)
    assert rep1.to_json() == rep2.to_json()
    assert rep1.instances == 10
    assert 0.0 <= rep1.top1_agreement <= 1.0
    assert -1.0 <= rep1.mean_rank_correlation <= 1.0
    assert set(__import__("json").loads(rep1.to_json())) == {
        "instances",
        "top1Agreement",
        "meanRankCorrelation",
    }


def test_general_impact_empty_perturbation_is_zero(quality_tree):
    model, d, cfg = quality_tree
    assert general_impact(d, {}, model, cfg) == 0.0
