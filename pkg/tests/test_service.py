import io
import json

import numpy as np
import pytest
from fastapi.testclient import TestClient

from redraft.corpus import CorpusError, Document, LabeledCorpus
from redraft.features import extract_features
from redraft.http_api import create_app
from redraft.segmenting import topictiling_segment
from redraft.service import (
    BundleConfig,
    ModelStore,
    ServiceError,
    get_feedback,
    load_bundle,
    save_bundle,
    train_bundle,
)
from tests.corpora import make_planted_doc, planted_corpus

CONFIG = BundleConfig(seed=11, n_topics=4, lda_iterations=80, num_trees=15, max_depth=5)


@pytest.fixture(scope="module")
def corpus():
    return planted_corpus(seed=100)


@pytest.fixture(scope="module")
def bundle(corpus):
    return train_bundle("laptops", corpus, CONFIG)


def test_training_rejects_single_label():
    docs = [Document("only one label here.", "low", "train") for _ in range(5)]
    with pytest.raises(CorpusError):
        train_bundle("bad", LabeledCorpus(docs), CONFIG)


def test_segment_model_inherits_labels_accurately(corpus, bundle):
    hits = total = 0
    for doc in corpus.subset("test"):
        segments = topictiling_segment(
            doc.text, bundle.resources.lda, bundle.resources.stopwords
        )
        for seg in segments:
            vec = extract_features(seg.text, bundle.resources, bundle.seg_model.schema)
            pred, _conf = bundle.seg_model.predict_label(vec)
            hits += pred == doc.label
            total += 1
    assert total >= 30
    assert hits / total >= 0.85


def test_doc_model_separates_held_out(corpus, bundle):
    hits = total = 0
    for doc in corpus.subset("test"):
        vec = extract_features(doc.text, bundle.resources, bundle.doc_model.schema)
        pred, _ = bundle.doc_model.predict_label(vec)
        hits += pred == doc.label
        total += 1
    assert hits / total >= 0.85


def test_training_deterministic_identical_bundle_files(tmp_path, corpus):
    small = BundleConfig(seed=7, n_topics=2, lda_iterations=40, num_trees=6, max_depth=4)
    a = train_bundle("det", corpus, small)
    b = train_bundle("det", corpus, small)
    save_bundle(a, tmp_path / "a")
    save_bundle(b, tmp_path / "b")
    for name in ("manifest.json", "doc_model.json", "seg_model.json", "resources.json", "baselines.json"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_bundle_roundtrip_preserves_feedback(tmp_path, bundle):
    save_bundle(bundle, tmp_path / "v1")
    clone = load_bundle(tmp_path / "v1")
    rng = np.random.default_rng(1)
    text, _ = make_planted_doc(rng, "low_long")
    a = get_feedback(bundle, text).to_json_dict()
    b = get_feedback(clone, text).to_json_dict()
    assert a == b


def test_feedback_offsets_tile_text(bundle):
    rng = np.random.default_rng(2)
    text, _ = make_planted_doc(rng, "high")
    report = get_feedback(bundle, text).to_json_dict()
    joined = "".join(
        text[s["startChar"] : s["endChar"]] for s in report["segments"]
    )
    assert joined == text


def test_high_quality_text_gets_no_feedback(bundle):
    rng = np.random.default_rng(3)
    for _ in range(10):
        text, _ = make_planted_doc(rng, "high")
        report = get_feedback(bundle, text)
        if report.doc_label == "high" and all(s.label == "high" for s in report.segments):
            assert report.doc_items == []
            assert all(s.items == [] for s in report.segments)
            return
    raise AssertionError("no fully high-quality report produced")


def test_low_quality_single_topic_text_mentions_topics(bundle):
    rng = np.random.default_rng(4)
    for _ in range(10):
        text, _ = make_planted_doc(rng, "low_long")
        report = get_feedback(bundle, text)
        names = [it.name for it in report.doc_items] + [
            it.name for s in report.segments for it in s.items
        ]
        if "offTopic" in names:
            return
    raise AssertionError("offTopic never selected for single-topic low docs")


def test_low_quality_scopes_have_items_with_positive_scores(bundle):
    rng = np.random.default_rng(5)
    text, _ = make_planted_doc(rng, "low_short")
    report = get_feedback(bundle, text)
    assert report.doc_label == "low"
    assert report.doc_items, "low document should receive document-level feedback"
    for item in report.doc_items:
        assert item.score > bundle.config.score_threshold


def test_empty_text_degenerate_report(bundle):
    report = get_feedback(bundle, "   ")
    assert report.degenerate
    assert report.segments == [] and report.doc_items == []


def test_store_publish_versioning(tmp_path, bundle):
    store = ModelStore(tmp_path / "store")
    v1 = store.publish(bundle)
    assert v1 == 1
    v2 = store.publish(bundle)
    assert v2 == 2
    with pytest.raises(ServiceError, match="bump"):
        store.publish(bundle, version=1)
    assert store.get("laptops").version == 2
    assert store.get("laptops", version=1).version == 1
    assert [m["version"] for m in store.describe() if m["name"] == "laptops"] == [1, 2]


# --- HTTP ----------------------------------------------------------------------

@pytest.fixture(scope="module")
def client(tmp_path_factory, bundle):
    store = ModelStore(tmp_path_factory.mktemp("store"))
    store.publish(bundle)
    app = create_app(store)
    return TestClient(app)


def test_http_feedback_ok(client):
    rng = np.random.default_rng(6)
    text, _ = make_planted_doc(rng, "low_short")
    r = client.post("/feedback", json={"corpus": "laptops", "text": text})
    assert r.status_code == 200
    body = r.json()
    assert body["docQuality"]["label"] in ("high", "low")
    assert isinstance(body["segments"], list)


def test_http_feedback_unknown_corpus_404(client):
    r = client.post("/feedback", json={"corpus": "nope", "text": "hello."})
    assert r.status_code == 404
    assert "error" in r.json()


def test_http_feedback_malformed_400(client):
    r = client.post("/feedback", content=b"{not json", headers={"content-type": "application/json"})
    assert r.status_code == 400
    r = client.post("/feedback", json={"corpus": "laptops"})
    assert r.status_code == 400


def test_http_feedback_byte_identical(client):
    rng = np.random.default_rng(7)
    text, _ = make_planted_doc(rng, "low_long")
    r1 = client.post("/feedback", json={"corpus": "laptops", "text": text})
    r2 = client.post("/feedback", json={"corpus": "laptops", "text": text})
    assert r1.content == r2.content


def test_http_validate_rating_domain(client):
    r = client.post(
        "/validate",
        json={"table": "reviews", "record": {"product_id": "ThinkPad X1 Carbon", "rating": 7, "review": "x"}},
    )
    assert r.status_code == 200
    violations = r.json()["violations"]
    assert len(violations) == 1
    assert violations[0]["constraint"] == "reviews_rating_domain"
    assert violations[0]["generic"]
    assert violations[0]["custom"] == "rating must be between 1 and 5"


def test_http_validate_unknown_table_404(client):
    r = client.post("/validate", json={"table": "ghosts", "record": {}})
    assert r.status_code == 404


def test_http_models_lists_bundles(client):
    r = client.get("/models")
    assert r.status_code == 200
    names = [m["name"] for m in r.json()["models"]]
    assert "laptops" in names


def test_http_train_then_poll(client, corpus):
    lines = "\n".join(
        json.dumps({"text": d.text, "label": d.label, "split": d.split})
        for d in corpus.documents
    )
    params = {"seed": 3, "n_topics": 2, "lda_iterations": 30, "num_trees": 5, "max_depth": 4}
    r = client.post(
        "/train",
        data={"corpus": "fresh", "params": json.dumps(params)},
        files={"documents": ("docs.jsonl", io.BytesIO(lines.encode()), "application/x-ndjson")},
    )
    assert r.status_code == 202
    assert r.json()["status"] == "training"
    r = client.get("/models")
    body = r.json()
    assert body["training"]["fresh"]["status"] == "ready"
    assert "fresh" in [m["name"] for m in body["models"]]
    r = client.post("/feedback", json={"corpus": "fresh", "text": "Bad battery!"})
    assert r.status_code == 200


def test_http_train_rejects_bad_uploads(client):
    r = client.post(
        "/train",
        data={"corpus": "x", "params": "{"},
        files={"documents": ("d.jsonl", io.BytesIO(b"{}"), "text/plain")},
    )
    assert r.status_code == 400
    r = client.post(
        "/train",
        data={"corpus": "x", "params": "{}"},
        files={"documents": ("d.jsonl", io.BytesIO(b"not json"), "text/plain")},
    )
    assert r.status_code == 400


def test_http_catalog_prefix_matches(client):
    r = client.get("/catalog/products", params={"prefix": "think"})
    assert r.status_code == 200
    assert r.json()["matches"] == ["ThinkPad X1 Carbon"]
