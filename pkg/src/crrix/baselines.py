"""Supervised baselines: multinomial Naive Bayes and class-weighted linear SVM.

Both operate on raw term counts over a frozen vocabulary and exist to
contrast against the distance-threshold classifier on imbalanced data.
Class 1 is the policy-related (minority) class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .corpus import BowCorpus
from .errors import DataError, require

SparseDoc = Sequence[tuple[int, int]]


def _check_binary_labels(labels: Sequence[int], n_docs: int) -> np.ndarray:
    if len(labels) != n_docs:
        raise DataError(f"labels length {len(labels)} != document count {n_docs}")
    arr = np.asarray(labels, dtype=np.int64)
    if not np.all((arr == 0) | (arr == 1)):
        raise DataError("labels must be 0 or 1")
    if arr.min() == arr.max():
        raise DataError("training data contains a single class")
    return arr


@dataclass
class NbModel:
    log_priors: np.ndarray  # (2,)
    log_cond: np.ndarray  # (2, V)
    smoothing: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "log_priors": self.log_priors.tolist(),
                "log_cond": self.log_cond.tolist(),
                "smoothing": self.smoothing,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "NbModel":
        d = json.loads(text)
        return cls(
            log_priors=np.asarray(d["log_priors"]),
            log_cond=np.asarray(d["log_cond"]),
            smoothing=float(d["smoothing"]),
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "NbModel":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def nb_train(corpus: BowCorpus, labels: Sequence[int], smoothing: float = 1.0) -> NbModel:
    """Multinomial NB with additive smoothing over raw term counts."""
    require(smoothing > 0, "smoothing must be positive")
    y = _check_binary_labels(labels, corpus.n_docs)
    v = corpus.n_terms
    term_counts = np.zeros((2, v), dtype=np.float64)
    class_docs = np.zeros(2, dtype=np.float64)
    for doc, label in zip(corpus.docs, y):
        class_docs[label] += 1
        for idx, count in doc:
            term_counts[label, idx] += count
    log_priors = np.log(class_docs / class_docs.sum())
    totals = term_counts.sum(axis=1, keepdims=True)
    log_cond = np.log((term_counts + smoothing) / (totals + smoothing * v))
    return NbModel(log_priors=log_priors, log_cond=log_cond, smoothing=smoothing)


def nb_predict(model: NbModel, doc: SparseDoc) -> int:
    """Argmax class; exact ties go to class 0."""
    scores = model.log_priors.copy()
    for idx, count in doc:
        scores += count * model.log_cond[:, idx]
    return 1 if scores[1] > scores[0] else 0


@dataclass
class SvmModel:
    weights: np.ndarray  # (V,)
    bias: float
    class_weights: tuple[float, float]  # (weight for class 1, weight for class 0)
    lam: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "weights": self.weights.tolist(),
                "bias": self.bias,
                "class_weights": list(self.class_weights),
                "lam": self.lam,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "SvmModel":
        d = json.loads(text)
        return cls(
            weights=np.asarray(d["weights"]),
            bias=float(d["bias"]),
            class_weights=tuple(d["class_weights"]),
            lam=float(d["lam"]),
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "SvmModel":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def svm_train(
    corpus: BowCorpus,
    labels: Sequence[int],
    class_weights: tuple[float, float] = (1.0, 1.0),
    lam: float = 0.01,
    epochs: int = 10,
    seed: int = 42,
) -> SvmModel:
    """Primal weighted hinge loss by epoch-ordered subgradient descent.

    Documents are visited in a seed-determined permutation each epoch
    with step size 1/(lam*t); higher ``class_weights[0]`` penalizes
    misclassifying the minority class 1 harder.
    """
    if lam <= 0:
        raise DataError("regularization lam must be positive")
    if epochs <= 0:
        raise DataError("epochs must be positive")
    y = _check_binary_labels(labels, corpus.n_docs)
    signs = np.where(y == 1, 1.0, -1.0)
    weights_by_class = np.where(y == 1, class_weights[0], class_weights[1])

    v = corpus.n_terms
    w = np.zeros(v, dtype=np.float64)
    b = 0.0
    rng = np.random.Generator(np.random.PCG64(seed))
    docs_idx = [np.asarray([i for i, _ in doc], dtype=np.int64) for doc in corpus.docs]
    docs_cnt = [np.asarray([c for _, c in doc], dtype=np.float64) for doc in corpus.docs]

    t = 0
    for _ in range(epochs):
        order = rng.permutation(corpus.n_docs)
        for d in order:
            t += 1
            eta = 1.0 / (lam * t)
            idx, cnt = docs_idx[d], docs_cnt[d]
            score = float(w[idx] @ cnt) + b if idx.size else b
            margin = signs[d] * score
            w *= 1.0 - eta * lam
            if margin < 1.0:
                step = eta * weights_by_class[d] * signs[d]
                if idx.size:
                    w[idx] += step * cnt
                b += step
    return SvmModel(weights=w, bias=b, class_weights=tuple(class_weights), lam=lam)


def svm_predict(model: SvmModel, doc: SparseDoc) -> int:
    """Sign of the linear score; zero maps to class 0."""
    score = model.bias
    for idx, count in doc:
        score += model.weights[idx] * count
    return 1 if score > 0 else 0
