"""Latent topic model fit by collapsed Gibbs sampling.

Fitting is deterministic given the seed: topic assignments are initialized
and resampled from a seeded generator, with one uniform drawn per token per
sweep outside the kernel. Online inference derives its seed from a hash of
the tokens themselves, so repeated calls on the same text agree without any
shared mutable state.
"""

import zlib
from dataclasses import dataclass, field

import numpy as np

from .kernels.gibbs import fit_sweep, infer_sweep


class TopicModelError(ValueError):
    pass


@dataclass
class LdaModel:
    n_topics: int
    alpha: float
    beta: float
    vocab: dict  # term -> column index
    topic_term: np.ndarray  # (K, V), rows sum to 1
    topic_weights: np.ndarray  # (K,), corpus-wide topic mass, sums to 1
    seed: int
    iterations: int
    infer_iterations: int = field(default=30)

    def to_json_dict(self):
        return {
            "nTopics": self.n_topics,
            "alpha": self.alpha,
            "beta": self.beta,
            "vocab": sorted(self.vocab, key=self.vocab.get),
            "topicTerm": [[float(x) for x in row] for row in self.topic_term],
            "topicWeights": [float(x) for x in self.topic_weights],
            "seed": self.seed,
            "iterations": self.iterations,
            "inferIterations": self.infer_iterations,
        }

    @classmethod
    def from_json_dict(cls, obj):
        return cls(
            n_topics=int(obj["nTopics"]),
            alpha=float(obj["alpha"]),
            beta=float(obj["beta"]),
            vocab={t: i for i, t in enumerate(obj["vocab"])},
            topic_term=np.array(obj["topicTerm"], dtype=np.float64),
            topic_weights=np.array(obj["topicWeights"], dtype=np.float64),
            seed=int(obj["seed"]),
            iterations=int(obj["iterations"]),
            infer_iterations=int(obj.get("inferIterations", 30)),
        )

    def top_terms(self, topic, k=3):
        inv = sorted(self.vocab, key=self.vocab.get)
        order = np.argsort(-self.topic_term[topic], kind="stable")
        return [inv[i] for i in order[:k]]


def fit_lda(token_lists, n_topics, iterations=200, alpha=0.5, beta=0.1, seed=0, stopwords=frozenset()):
    if n_topics < 2:
        raise TopicModelError("need at least 2 topics")
    filtered = [[t for t in toks if t not in stopwords] for toks in token_lists]
    vocab_terms = sorted({t for toks in filtered for t in toks})
    if not vocab_terms:
        raise TopicModelError("vocabulary empty after stopword removal")
    vocab = {t: i for i, t in enumerate(vocab_terms)}

    doc_ids = []
    word_ids = []
    for di, toks in enumerate(filtered):
        for t in toks:
            doc_ids.append(di)
            word_ids.append(vocab[t])
    doc_ids = np.array(doc_ids, dtype=np.int64)
    word_ids = np.array(word_ids, dtype=np.int64)
    total = word_ids.shape[0]

    rng = np.random.default_rng(seed)
    z = rng.integers(0, n_topics, size=total).astype(np.int64)
    ndk = np.zeros((len(filtered), n_topics), dtype=np.int64)
    nkw = np.zeros((n_topics, len(vocab)), dtype=np.int64)
    nk = np.zeros(n_topics, dtype=np.int64)
    for i in range(total):
        ndk[doc_ids[i], z[i]] += 1
        nkw[z[i], word_ids[i]] += 1
        nk[z[i]] += 1

    for _ in range(iterations):
        uniforms = rng.random(total)
        fit_sweep(doc_ids, word_ids, z, ndk, nkw, nk, float(alpha), float(beta), uniforms)

    weighted = nkw + beta
    topic_term = weighted / weighted.sum(axis=1, keepdims=True)
    topic_weights = (nk + alpha) / (nk + alpha).sum()
    return LdaModel(
        n_topics=n_topics,
        alpha=float(alpha),
        beta=float(beta),
        vocab=vocab,
        topic_term=topic_term,
        topic_weights=topic_weights,
        seed=seed,
        iterations=iterations,
    )


def _text_seed(tokens):
    return zlib.crc32(" ".join(tokens).encode("utf-8"))


def infer_topic_dist(model, tokens, iterations=None):
    """Fold-in Gibbs inference -> (distribution, in-vocabulary token count).

    No in-vocabulary tokens yields the uniform distribution with count 0.
    """
    ids = np.array([model.vocab[t] for t in tokens if t in model.vocab], dtype=np.int64)
    k = model.n_topics
    if ids.shape[0] == 0:
        return np.full(k, 1.0 / k), 0
    iterations = model.infer_iterations if iterations is None else iterations
    rng = np.random.default_rng(_text_seed(tokens))
    z = rng.integers(0, k, size=ids.shape[0]).astype(np.int64)
    nd = np.zeros(k, dtype=np.int64)
    for t in z:
        nd[t] += 1
    for _ in range(iterations):
        uniforms = rng.random(ids.shape[0])
        infer_sweep(ids, z, nd, model.topic_term, float(model.alpha), uniforms)
    theta = (nd + model.alpha) / (ids.shape[0] + k * model.alpha)
    return theta, int(ids.shape[0])


def topic_entropy(dist):
    p = np.asarray(dist, dtype=np.float64)
    nz = p[p > 0]
    return float(-(nz * np.log(nz)).sum())
