"""Latent Dirichlet Allocation fit by collapsed Gibbs sampling.

The sampler scans documents sequentially and tokens within a document in
ascending term-index order. All randomness comes from a seeded numpy
PCG64 generator whose uniforms are handed to the sweep kernel, so a fixed
seed reproduces phi and theta bit-for-bit regardless of whether the numba
or the interpreted kernel path is active.

Point estimates are the smoothed final-state counts:

    phi[k][v]   = (n_kv + beta) / (n_k + V*beta)
    theta[d][k] = (n_dk + alpha) / (n_d + K*alpha)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import kernels
from .corpus import BowCorpus
from .errors import DataError, require

SparseDoc = Sequence[tuple[int, int]]


@dataclass(frozen=True)
class LdaHyperparams:
    k: int
    alpha: float = 0.01
    beta: float = 0.1
    iterations: int = 1000
    burn_in: int = 200
    seed: int = 42

    def __post_init__(self):
        require(self.k >= 1, "topic count k must be >= 1")
        require(self.alpha > 0, "alpha must be positive")
        require(self.beta > 0, "beta must be positive")
        require(self.iterations >= 1, "iterations must be positive")
        require(0 <= self.burn_in < self.iterations, "burn_in must be in [0, iterations)")
        require(0 <= self.seed < 2**64, "seed must fit in 64 bits")

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "alpha": self.alpha,
            "beta": self.beta,
            "iterations": self.iterations,
            "burn_in": self.burn_in,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LdaHyperparams":
        return cls(**d)


@dataclass
class TopicModel:
    hyper: LdaHyperparams
    phi: np.ndarray  # (K, V), rows sum to 1
    theta: np.ndarray  # (M, K), rows sum to 1
    vocab_fingerprint: str
    trained_on: int
    log_likelihood_trace: list[float] = field(default_factory=list, repr=False)

    @property
    def k(self) -> int:
        return self.phi.shape[0]

    @property
    def n_terms(self) -> int:
        return self.phi.shape[1]

    def top_word_indices(self, topic: int, top_j: int) -> list[int]:
        """Indices of the ``top_j`` most probable words, ties broken by index."""
        row = self.phi[topic]
        order = np.argsort(-row, kind="stable")
        return [int(i) for i in order[:top_j]]

    def top_words(self, vocabulary, top_j: int) -> list[list[str]]:
        return [
            [vocabulary.terms[i] for i in self.top_word_indices(k, top_j)]
            for k in range(self.k)
        ]

    def to_json(self) -> str:
        payload = {
            "hyper": self.hyper.to_dict(),
            "vocab_fingerprint": self.vocab_fingerprint,
            "trained_on": self.trained_on,
            "phi": [[float(x) for x in row] for row in self.phi],
            "theta": [[float(x) for x in row] for row in self.theta],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "TopicModel":
        try:
            payload = json.loads(text)
            return cls(
                hyper=LdaHyperparams.from_dict(payload["hyper"]),
                phi=np.asarray(payload["phi"], dtype=np.float64),
                theta=np.asarray(payload["theta"], dtype=np.float64),
                vocab_fingerprint=payload["vocab_fingerprint"],
                trained_on=int(payload["trained_on"]),
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise DataError(f"malformed topic model JSON: {exc}") from exc

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "TopicModel":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class ThetaEstimate:
    """Inferred document-topic vector; ``empty_doc`` marks all-zero input."""

    theta: np.ndarray
    empty_doc: bool = False


def _flatten(corpus: BowCorpus) -> tuple[np.ndarray, np.ndarray]:
    doc_ids: list[int] = []
    term_ids: list[int] = []
    for d, doc in enumerate(corpus.docs):
        for idx, count in doc:
            doc_ids.extend([d] * count)
            term_ids.extend([idx] * count)
    return (
        np.asarray(doc_ids, dtype=np.int32),
        np.asarray(term_ids, dtype=np.int32),
    )


def _sparse_pairs(corpus: BowCorpus) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    pd, pt, pc = [], [], []
    for d, doc in enumerate(corpus.docs):
        for idx, count in doc:
            pd.append(d)
            pt.append(idx)
            pc.append(count)
    return (
        np.asarray(pd, dtype=np.int64),
        np.asarray(pt, dtype=np.int64),
        np.asarray(pc, dtype=np.float64),
    )


def _estimates(
    n_dk: np.ndarray, n_kv: np.ndarray, n_k: np.ndarray, alpha: float, beta: float
) -> tuple[np.ndarray, np.ndarray]:
    v = n_kv.shape[1]
    k = n_dk.shape[1]
    phi = (n_kv + beta) / (n_k + v * beta)[:, None]
    n_d = n_dk.sum(axis=1)
    theta = (n_dk + alpha) / (n_d + k * alpha)[:, None]
    return phi, theta


def _corpus_loglik(
    pairs: tuple[np.ndarray, np.ndarray, np.ndarray],
    phi: np.ndarray,
    theta: np.ndarray,
) -> float:
    pd, pt, pc = pairs
    probs = np.einsum("pk,pk->p", theta[pd], phi[:, pt].T)
    return float(np.dot(pc, np.log(probs)))


def train(corpus: BowCorpus, hyper: LdaHyperparams) -> TopicModel:
    """Fit a topic model; deterministic for a fixed ``hyper.seed``.

    Documents emptied by preprocessing contribute no tokens and end up
    with uniform theta rows; they are not an error. An entirely empty
    corpus is.
    """
    doc_ids, term_ids = _flatten(corpus)
    if doc_ids.size == 0:
        raise DataError("corpus has no non-empty documents")
    k, v, m = hyper.k, corpus.n_terms, corpus.n_docs
    if k > sum(1 for doc in corpus.docs if doc):
        import warnings

        warnings.warn(f"k={k} exceeds the number of non-empty documents", stacklevel=2)

    rng = np.random.Generator(np.random.PCG64(hyper.seed))
    z = rng.integers(0, k, size=doc_ids.size).astype(np.int32)

    n_dk = np.zeros((m, k), dtype=np.int64)
    n_kv = np.zeros((k, v), dtype=np.int64)
    n_k = np.zeros(k, dtype=np.int64)
    np.add.at(n_dk, (doc_ids, z), 1)
    np.add.at(n_kv, (z, term_ids), 1)
    np.add.at(n_k, z, 1)

    pairs = _sparse_pairs(corpus)
    trace: list[float] = []
    for _ in range(hyper.iterations):
        uniforms = rng.random(doc_ids.size)
        kernels.gibbs_sweep(
            doc_ids, term_ids, z, n_dk, n_kv, n_k, hyper.alpha, hyper.beta, uniforms
        )
        phi_it, theta_it = _estimates(n_dk, n_kv, n_k, hyper.alpha, hyper.beta)
        trace.append(_corpus_loglik(pairs, phi_it, theta_it))

    assert int(n_k.sum()) == doc_ids.size, "sampler lost tokens"
    assert np.array_equal(n_kv.sum(axis=1), n_k), "topic counts diverged"

    phi, theta = _estimates(n_dk, n_kv, n_k, hyper.alpha, hyper.beta)
    return TopicModel(
        hyper=hyper,
        phi=phi,
        theta=theta,
        vocab_fingerprint=corpus.vocabulary.fingerprint(),
        trained_on=m,
        log_likelihood_trace=trace,
    )


def infer_theta(
    model: TopicModel, doc: SparseDoc, iterations: int = 200, seed: int = 42
) -> ThetaEstimate:
    """Gibbs-infer a topic mixture for one document with phi held fixed."""
    require(iterations >= 1, "iterations must be positive")
    k, v = model.k, model.n_terms
    term_ids: list[int] = []
    for idx, count in doc:
        if not 0 <= idx < v:
            raise DataError(f"term index {idx} outside model vocabulary [0, {v})")
        if count < 1:
            raise DataError(f"non-positive count {count} in document")
        term_ids.extend([idx] * count)
    if not term_ids:
        return ThetaEstimate(theta=np.full(k, 1.0 / k), empty_doc=True)

    term_arr = np.asarray(term_ids, dtype=np.int32)
    rng = np.random.Generator(np.random.PCG64(seed))
    z = rng.integers(0, k, size=term_arr.size).astype(np.int32)
    n_k_doc = np.bincount(z, minlength=k).astype(np.int64)

    alpha = model.hyper.alpha
    for _ in range(iterations):
        uniforms = rng.random(term_arr.size)
        kernels.infer_sweep(term_arr, z, n_k_doc, model.phi, alpha, uniforms)

    theta = (n_k_doc + alpha) / (term_arr.size + k * alpha)
    return ThetaEstimate(theta=theta, empty_doc=False)


def log_likelihood(model: TopicModel, corpus: BowCorpus) -> float:
    """Corpus log likelihood under the model's mixed word distributions."""
    if corpus.vocabulary.fingerprint() != model.vocab_fingerprint:
        raise DataError("corpus vocabulary does not match the model fingerprint")
    if corpus.n_docs != model.theta.shape[0]:
        raise DataError(
            f"corpus has {corpus.n_docs} documents but model was trained on "
            f"{model.theta.shape[0]}"
        )
    return _corpus_loglik(_sparse_pairs(corpus), model.phi, model.theta)
