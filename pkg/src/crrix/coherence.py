"""Topic-quality scoring and topic-count selection.

Three corpus-statistics measures over each topic's top-J words:

* UMass: document co-occurrence, asymmetric log conditional probability.
* UCI: sliding-window co-occurrence, pairwise PMI.
* Cv: sliding-window NPMI context vectors compared by cosine similarity
  against their per-topic aggregate.

Window counting operates on a bag-of-words corpus, which carries no token
order; each document is laid out canonically (terms in ascending index
order, repeated by count) and a boolean window of configurable width is
slid over that sequence. A document shorter than the window forms exactly
one window.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .corpus import BowCorpus, Vocabulary
from .errors import DataError, require
from .lda import LdaHyperparams, TopicModel, train


class Measure(str, Enum):
    UCI = "uci"
    UMASS = "umass"
    CV = "cv"


@dataclass(frozen=True)
class CoherenceConfig:
    top_j: int = 10
    epsilon: float = 1e-12
    gamma: float = 1.0
    window: int = 110
    measure: Measure = Measure.CV

    def __post_init__(self):
        require(self.top_j >= 2, "top_j must be >= 2")
        require(self.epsilon > 0, "epsilon must be positive")
        require(self.window >= 1, "window must be positive")


@dataclass
class CooccurrenceStats:
    """Marginal and pairwise occurrence probabilities for selected terms.

    Keys of ``p_pair`` are index pairs with the smaller index first.
    """

    p_single: dict[int, float]
    p_pair: dict[tuple[int, int], float]
    basis: str  # "document" | "sliding-window"


@dataclass
class CoherenceResult:
    score: float
    per_topic: list[float]
    measure: Measure


def _pair_key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def _canonical_tokens(doc: list[tuple[int, int]]) -> np.ndarray:
    out: list[int] = []
    for idx, count in doc:
        out.extend([idx] * count)
    return np.asarray(out, dtype=np.int64)


def document_cooccurrence(
    corpus: BowCorpus, terms: set[int], pairs: set[tuple[int, int]]
) -> CooccurrenceStats:
    """Boolean per-document counting over all documents in the corpus."""
    n_docs = corpus.n_docs
    singles = dict.fromkeys(terms, 0)
    joints = dict.fromkeys(pairs, 0)
    for doc in corpus.docs:
        present = {idx for idx, _ in doc} & terms
        for t in present:
            singles[t] += 1
        for a, b in pairs:
            if a in present and b in present:
                joints[(a, b)] += 1
    return CooccurrenceStats(
        p_single={t: c / n_docs for t, c in singles.items()},
        p_pair={p: c / n_docs for p, c in joints.items()},
        basis="document",
    )


def window_cooccurrence(
    corpus: BowCorpus, terms: set[int], pairs: set[tuple[int, int]], window: int
) -> CooccurrenceStats:
    """Boolean sliding-window counting over canonical token sequences."""
    term_list = sorted(terms)
    pos = {t: i for i, t in enumerate(term_list)}
    single_counts = np.zeros(len(term_list), dtype=np.int64)
    joint_counts = dict.fromkeys(pairs, 0)
    total_windows = 0

    for doc in corpus.docs:
        tokens = _canonical_tokens(doc)
        n = tokens.size
        if n == 0:
            continue
        n_windows = max(1, n - window + 1)
        total_windows += n_windows
        if n <= window:
            present = {idx for idx, _ in doc} & terms
            for t in present:
                single_counts[pos[t]] += n_windows
            for a, b in pairs:
                if a in present and b in present:
                    joint_counts[(a, b)] += n_windows
            continue
        # presence[t_i, w] = term appears in the window starting at w
        presence = np.zeros((len(term_list), n_windows), dtype=bool)
        for i, t in enumerate(term_list):
            occ = np.concatenate(([0], np.cumsum(tokens == t)))
            presence[i] = (occ[window:] - occ[:-window]) > 0
        single_counts += presence.sum(axis=1)
        for a, b in pairs:
            joint_counts[(a, b)] += int(np.sum(presence[pos[a]] & presence[pos[b]]))

    if total_windows == 0:
        raise DataError("reference corpus has no non-empty documents")
    return CooccurrenceStats(
        p_single={t: single_counts[pos[t]] / total_windows for t in term_list},
        p_pair={p: c / total_windows for p, c in joint_counts.items()},
        basis="sliding-window",
    )


def _top_word_sets(model: TopicModel, top_j: int) -> list[list[int]]:
    return [model.top_word_indices(k, top_j) for k in range(model.k)]


def _require_training_corpus(model: TopicModel, corpus: BowCorpus) -> None:
    if corpus.vocabulary.fingerprint() != model.vocab_fingerprint:
        raise DataError("corpus vocabulary does not match the model fingerprint")


def coherence_umass(
    model: TopicModel, corpus: BowCorpus, cfg: CoherenceConfig
) -> CoherenceResult:
    """Document-based asymmetric coherence on the training corpus."""
    _require_training_corpus(model, corpus)
    tops = _top_word_sets(model, cfg.top_j)
    terms = {t for ws in tops for t in ws}
    pairs = {
        _pair_key(ws[i], ws[j])
        for ws in tops
        for i in range(1, len(ws))
        for j in range(i)
    }
    stats = document_cooccurrence(corpus, terms, pairs)
    for t in terms:
        if stats.p_single[t] <= 0.0:
            raise DataError(
                f"top word index {t} has zero document frequency; "
                "corpus is not the training corpus"
            )

    per_topic: list[float] = []
    for ws in tops:
        j = len(ws)
        acc = 0.0
        for i in range(1, j):
            for jj in range(i):
                p_joint = stats.p_pair[_pair_key(ws[i], ws[jj])]
                acc += np.log((p_joint + cfg.epsilon) / stats.p_single[ws[jj]])
        per_topic.append(2.0 / (j * (j - 1)) * acc)
    return CoherenceResult(
        score=float(np.mean(per_topic)), per_topic=per_topic, measure=Measure.UMASS
    )


def _reference_top_words(
    model: TopicModel,
    reference: BowCorpus,
    cfg: CoherenceConfig,
    vocabulary: Vocabulary | None,
) -> list[list[int]]:
    """Top words per topic as reference-corpus indices.

    When the reference is the training corpus the indices map 1:1;
    otherwise the training vocabulary is required to translate term
    strings, and words absent from the reference are dropped with a
    warning.
    """
    tops = _top_word_sets(model, cfg.top_j)
    if reference.vocabulary.fingerprint() == model.vocab_fingerprint:
        return tops
    if vocabulary is None:
        raise DataError(
            "reference corpus differs from the training corpus; "
            "pass the training vocabulary to translate top words"
        )
    translated: list[list[int]] = []
    for k, ws in enumerate(tops):
        kept: list[int] = []
        for t in ws:
            term = vocabulary.terms[t]
            ref_idx = reference.vocabulary.index.get(term)
            if ref_idx is None:
                warnings.warn(
                    f"topic {k}: top word {term!r} absent from reference vocabulary; "
                    "pairs involving it are skipped",
                    stacklevel=3,
                )
            else:
                kept.append(ref_idx)
        translated.append(kept)
    if all(len(ws) < 2 for ws in translated):
        raise DataError("all top-word pairs were skipped against the reference corpus")
    return translated


def coherence_uci(
    model: TopicModel,
    reference: BowCorpus,
    cfg: CoherenceConfig,
    vocabulary: Vocabulary | None = None,
) -> CoherenceResult:
    """Pairwise PMI coherence with sliding-window probabilities."""
    tops = _reference_top_words(model, reference, cfg, vocabulary)
    terms = {t for ws in tops for t in ws}
    pairs = {
        _pair_key(ws[i], ws[j])
        for ws in tops
        for i in range(len(ws))
        for j in range(i + 1, len(ws))
    }
    stats = window_cooccurrence(reference, terms, pairs, cfg.window)

    per_topic: list[float] = []
    for ws in tops:
        j = len(ws)
        if j < 2:
            per_topic.append(float("nan"))
            continue
        acc = 0.0
        for i in range(j):
            for jj in range(i + 1, j):
                p_joint = stats.p_pair[_pair_key(ws[i], ws[jj])]
                acc += np.log(
                    (p_joint + cfg.epsilon)
                    / (stats.p_single[ws[i]] * stats.p_single[ws[jj]])
                )
        per_topic.append(2.0 / (j * (j - 1)) * acc)
    valid = [s for s in per_topic if not np.isnan(s)]
    return CoherenceResult(score=float(np.mean(valid)), per_topic=per_topic, measure=Measure.UCI)


def npmi(p_joint: float, p_i: float, p_j: float, epsilon: float) -> float:
    """Normalized pointwise mutual information, in [-1, 1] up to epsilon."""
    return float(np.log((p_joint + epsilon) / (p_i * p_j)) / -np.log(p_joint + epsilon))


def coherence_cv(
    model: TopicModel,
    reference: BowCorpus,
    cfg: CoherenceConfig,
    vocabulary: Vocabulary | None = None,
) -> CoherenceResult:
    """NPMI context-vector coherence with cosine confirmation.

    Per topic, each top word's context vector holds NPMI against every
    top word of the same topic (itself included), raised to ``gamma``;
    the topic score is the mean cosine similarity between each context
    vector and the sum of all of them.
    """
    tops = _reference_top_words(model, reference, cfg, vocabulary)
    terms = {t for ws in tops for t in ws}
    pairs = {
        _pair_key(a, b) for ws in tops for a in ws for b in ws
    }
    stats = window_cooccurrence(reference, terms, pairs, cfg.window)

    per_topic: list[float] = []
    for k, ws in enumerate(tops):
        j = len(ws)
        if j < 2:
            per_topic.append(float("nan"))
            continue
        vecs = np.empty((j, j))
        for i in range(j):
            for jj in range(j):
                p_joint = stats.p_pair[_pair_key(ws[i], ws[jj])]
                vecs[i, jj] = npmi(
                    p_joint, stats.p_single[ws[i]], stats.p_single[ws[jj]], cfg.epsilon
                ) ** cfg.gamma
        aggregate = vecs.sum(axis=0)
        agg_norm = np.linalg.norm(aggregate)
        sims = np.zeros(j)
        for i in range(j):
            v_norm = np.linalg.norm(vecs[i])
            if v_norm == 0.0 or agg_norm == 0.0:
                warnings.warn(
                    f"topic {k}: zero-norm context vector; similarity set to 0",
                    stacklevel=2,
                )
                continue
            sims[i] = float(np.dot(vecs[i], aggregate) / (v_norm * agg_norm))
        per_topic.append(float(sims.mean()))
    valid = [s for s in per_topic if not np.isnan(s)]
    return CoherenceResult(score=float(np.mean(valid)), per_topic=per_topic, measure=Measure.CV)


def score_model(
    model: TopicModel,
    reference: BowCorpus,
    cfg: CoherenceConfig,
    vocabulary: Vocabulary | None = None,
) -> CoherenceResult:
    if cfg.measure is Measure.UMASS:
        return coherence_umass(model, reference, cfg)
    if cfg.measure is Measure.UCI:
        return coherence_uci(model, reference, cfg, vocabulary)
    return coherence_cv(model, reference, cfg, vocabulary)


@dataclass
class SelectKResult:
    best_k: int
    scores: list[tuple[int, float]]
    models: dict[int, TopicModel]


def select_k(
    corpus: BowCorpus,
    k_range: tuple[int, int],
    hyper_template: LdaHyperparams,
    cfg: CoherenceConfig,
    keep_models: bool = False,
) -> SelectKResult:
    """Train one model per k in the inclusive range and pick the argmax.

    Each model's seed is the template seed XOR k; ties break toward the
    smaller k.
    """
    k_min, k_max = k_range
    require(k_min >= 2, "k range must start at 2 or above")
    require(k_max >= k_min, "k range is empty")

    scores: list[tuple[int, float]] = []
    models: dict[int, TopicModel] = {}
    best_k, best_score = None, -np.inf
    for k in range(k_min, k_max + 1):
        hyper = replace(hyper_template, k=k, seed=hyper_template.seed ^ k)
        model = train(corpus, hyper)
        result = score_model(model, corpus, cfg)
        scores.append((k, result.score))
        if keep_models:
            models[k] = model
        if result.score > best_score:
            best_k, best_score = k, result.score
    assert best_k is not None
    return SelectKResult(best_k=best_k, scores=scores, models=models)
