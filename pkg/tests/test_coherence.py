"""Coherence measures checked against independent brute-force oracles.

The oracles below re-derive every probability by explicit enumeration
(documents, or one window position at a time) and re-state the formulas
from scratch; they share no counting code with the implementation.
"""

import math
from dataclasses import replace

import numpy as np
import pytest

from crrix.coherence import (
    CoherenceConfig,
    Measure,
    coherence_cv,
    coherence_uci,
    coherence_umass,
    document_cooccurrence,
    select_k,
    window_cooccurrence,
)
from crrix.errors import DataError, UsageError
from crrix.lda import LdaHyperparams, train

from conftest import block_phi, make_bow, sample_synthetic_corpus, zipf_block_phi


def _model_with_tops(bow, tops, k=None):
    """Train a throwaway model, then overwrite phi so that each topic's
    top words are exactly the given index lists (descending weight)."""
    k = k or len(tops)
    model = train(bow, LdaHyperparams(k=k, iterations=5, burn_in=1, seed=1))
    v = bow.n_terms
    phi = np.full((k, v), 1e-9)
    for t, words in enumerate(tops):
        for rank, w in enumerate(words):
            phi[t, w] = 1.0 - 0.01 * rank
    model.phi = phi / phi.sum(axis=1, keepdims=True)
    return model


# --- independent oracles ---------------------------------------------------

def oracle_doc_probs(docs_as_sets, terms):
    n = len(docs_as_sets)
    single = {t: sum(1 for d in docs_as_sets if t in d) / n for t in terms}
    pair = {}
    for a in terms:
        for b in terms:
            pair[(a, b)] = sum(1 for d in docs_as_sets if a in d and b in d) / n
    return single, pair


def oracle_window_probs(token_seqs, terms, window):
    """Enumerate every window position explicitly."""
    windows = []
    for seq in token_seqs:
        if not seq:
            continue
        if len(seq) <= window:
            windows.append(set(seq))
        else:
            for start in range(len(seq) - window + 1):
                windows.append(set(seq[start : start + window]))
    n = len(windows)
    single = {t: sum(1 for w in windows if t in w) / n for t in terms}
    pair = {}
    for a in terms:
        for b in terms:
            pair[(a, b)] = sum(1 for w in windows if a in w and b in w) / n
    return single, pair


def oracle_umass(tops, single, pair, eps):
    scores = []
    for ws in tops:
        j = len(ws)
        acc = 0.0
        for i in range(1, j):
            for jj in range(i):
                acc += math.log((pair[(ws[i], ws[jj])] + eps) / single[ws[jj]])
        scores.append(2.0 / (j * (j - 1)) * acc)
    return float(np.mean(scores)), scores


def oracle_uci(tops, single, pair, eps):
    scores = []
    for ws in tops:
        j = len(ws)
        acc = 0.0
        for i in range(j):
            for jj in range(i + 1, j):
                acc += math.log(
                    (pair[(ws[i], ws[jj])] + eps) / (single[ws[i]] * single[ws[jj]])
                )
        scores.append(2.0 / (j * (j - 1)) * acc)
    return float(np.mean(scores)), scores


def oracle_cv(tops, single, pair, eps, gamma):
    def npmi(a, b):
        return (
            math.log((pair[(a, b)] + eps) / (single[a] * single[b]))
            / -math.log(pair[(a, b)] + eps)
        )

    scores = []
    for ws in tops:
        vecs = [[npmi(wi, wj) ** gamma for wj in ws] for wi in ws]
        agg = [sum(col) for col in zip(*vecs)]

        def cos(u, v):
            nu = math.sqrt(sum(x * x for x in u))
            nv = math.sqrt(sum(x * x for x in v))
            return sum(a * b for a, b in zip(u, v)) / (nu * nv)

        scores.append(float(np.mean([cos(v, agg) for v in vecs])))
    return float(np.mean(scores)), scores


def _canonical_seq(doc):
    seq = []
    for idx, count in sorted(doc):
        seq.extend([idx] * count)
    return seq


# --- the toy corpus shared by the oracle-equivalence tests -----------------

TOY_DOCS = [
    {0: 2, 1: 1, 2: 1},
    {0: 1, 1: 1, 3: 2},
    {2: 3, 3: 1, 4: 1},
    {0: 1, 4: 2},
    {1: 2, 2: 1, 4: 1, 5: 1},
]
TOY_TOPS = [[0, 1, 2], [3, 4, 5]]


@pytest.fixture()
def toy_bow():
    return make_bow([dict(d) for d in TOY_DOCS], 6)


@pytest.fixture()
def toy_model(toy_bow):
    return _model_with_tops(toy_bow, TOY_TOPS)


class TestUMass:
    def test_perfect_cooccurrence_near_zero(self):
        docs = [{0: 1, 1: 2}, {0: 2, 1: 1}, {0: 1, 1: 1}]
        bow = make_bow(docs, 2)
        model = _model_with_tops(bow, [[0, 1]], k=1)
        cfg = CoherenceConfig(top_j=2)
        result = coherence_umass(model, bow, cfg)
        assert result.score == pytest.approx(0.0, abs=1e-9)

    def test_never_cooccurring_closed_form(self):
        # w1 in half the docs, never with w0
        docs = [{0: 1}, {1: 1}, {0: 1, 2: 1}, {1: 1, 2: 1}]
        bow = make_bow(docs, 3)
        model = _model_with_tops(bow, [[1, 0]], k=1)  # w_j = index 0, P = 0.5
        cfg = CoherenceConfig(top_j=2, epsilon=1e-12)
        result = coherence_umass(model, bow, cfg)
        assert result.score == pytest.approx(math.log(2e-12), rel=1e-12)

    def test_matches_brute_force_oracle(self, toy_bow, toy_model):
        cfg = CoherenceConfig(top_j=3)
        result = coherence_umass(toy_model, toy_bow, cfg)
        sets = [set(d) for d in TOY_DOCS]
        single, pair = oracle_doc_probs(sets, range(6))
        expected, per_topic = oracle_umass(TOY_TOPS, single, pair, cfg.epsilon)
        assert result.score == pytest.approx(expected, abs=1e-12)
        assert result.per_topic == pytest.approx(per_topic, abs=1e-12)

    def test_adding_cooccurrence_doc_never_decreases_pair_score(self):
        def pair_score(docs):
            n = len(docs)
            d_joint = sum(1 for d in docs if 0 in d and 1 in d) / n
            d_cond = sum(1 for d in docs if 1 in d) / n
            return math.log((d_joint + 1e-12) / d_cond)

        docs = [{0: 1}, {1: 1}, {0: 1, 1: 1}, {2: 1}]
        grown = docs + [{0: 1, 1: 1}]
        assert pair_score(grown) >= pair_score(docs)

    def test_fingerprint_mismatch_rejected(self, toy_bow, toy_model):
        other = make_bow([{0: 1}, {1: 1}], 2)
        with pytest.raises(DataError, match="fingerprint"):
            coherence_umass(toy_model, other, CoherenceConfig(top_j=2))


class TestUci:
    def test_always_cooccurring_log2(self):
        # two docs of 2 terms each (single window apiece): both words in
        # half of all windows, always together
        docs = [{0: 1, 1: 1}, {2: 1, 3: 1}]
        bow = make_bow(docs, 4)
        model = _model_with_tops(bow, [[0, 1]], k=1)
        cfg = CoherenceConfig(top_j=2, window=10)
        result = coherence_uci(model, bow, cfg)
        assert result.score == pytest.approx(math.log(2.0), abs=1e-9)

    def test_independent_words_near_zero(self):
        # presence of 0 and 1 statistically independent across 4 windows
        docs = [{0: 1, 1: 1}, {0: 1, 2: 1}, {1: 1, 3: 1}, {2: 1, 3: 1}]
        bow = make_bow(docs, 4)
        model = _model_with_tops(bow, [[0, 1]], k=1)
        result = coherence_uci(model, bow, CoherenceConfig(top_j=2, window=10))
        assert result.score == pytest.approx(0.0, abs=1e-9)

    def test_matches_brute_force_window_oracle(self, toy_bow, toy_model):
        cfg = CoherenceConfig(top_j=3, window=3)
        result = coherence_uci(toy_model, toy_bow, cfg)
        seqs = [_canonical_seq(sorted(d.items())) for d in TOY_DOCS]
        single, pair = oracle_window_probs(seqs, range(6), cfg.window)
        expected, per_topic = oracle_uci(TOY_TOPS, single, pair, cfg.epsilon)
        assert result.score == pytest.approx(expected, abs=1e-12)
        assert result.per_topic == pytest.approx(per_topic, abs=1e-12)

    def test_absent_word_skipped_with_warning(self, toy_bow, toy_model):
        reference = make_bow([{0: 1, 1: 1}, {0: 2, 2: 1}, {1: 1, 2: 2}], 3, term_prefix="w")
        # reference vocabulary w000..w002 lacks w003..w005
        with pytest.warns(UserWarning, match="absent from reference"):
            result = coherence_uci(
                toy_model, reference, CoherenceConfig(top_j=3), vocabulary=toy_bow.vocabulary
            )
        assert math.isnan(result.per_topic[1])
        assert not math.isnan(result.score)

    def test_cross_corpus_without_vocabulary_rejected(self, toy_bow, toy_model):
        reference = make_bow([{0: 1, 1: 1}], 2)
        with pytest.raises(DataError, match="training vocabulary"):
            coherence_uci(toy_model, reference, CoherenceConfig(top_j=2))


class TestCv:
    def test_identical_statistics_pair_scores_one(self):
        # words 0 and 1 always appear together: indistinguishable stats
        docs = [{0: 1, 1: 1}, {0: 1, 1: 1, 2: 1}, {2: 2, 3: 1}]
        bow = make_bow(docs, 4)
        model = _model_with_tops(bow, [[0, 1]], k=1)
        result = coherence_cv(model, bow, CoherenceConfig(top_j=2, window=10))
        assert result.score == pytest.approx(1.0, abs=1e-9)

    def test_npmi_upper_bound_for_comoving_word(self):
        # P(w_i, w_j) = P(w_i) = P(w_j): numerator log((P+eps)/P^2) over
        # -log(P+eps) cancels to 1, the perfect-association bound
        from crrix.coherence import npmi

        for p in (0.25, 0.1, 0.01):
            assert npmi(p, p, p, 1e-12) == pytest.approx(1.0, abs=1e-9)

    def test_matches_independent_reimplementation(self, toy_bow, toy_model):
        cfg = CoherenceConfig(top_j=3, window=3)
        result = coherence_cv(toy_model, toy_bow, cfg)
        seqs = [_canonical_seq(sorted(d.items())) for d in TOY_DOCS]
        single, pair = oracle_window_probs(seqs, range(6), cfg.window)
        expected, per_topic = oracle_cv(TOY_TOPS, single, pair, cfg.epsilon, cfg.gamma)
        assert result.score == pytest.approx(expected, abs=1e-9)
        assert result.per_topic == pytest.approx(per_topic, abs=1e-9)

    def test_npmi_within_bounds_on_fixture(self, toy_bow):
        from crrix.coherence import npmi

        seqs = [_canonical_seq(sorted(d.items())) for d in TOY_DOCS]
        single, pair = oracle_window_probs(seqs, range(6), 3)
        for (a, b), p_joint in pair.items():
            value = npmi(p_joint, single[a], single[b], 1e-12)
            assert -1.0 - 1e-6 <= value <= 1.0 + 1e-6


class TestInvariance:
    def test_measures_invariant_under_topic_reordering(self, toy_bow, toy_model):
        cfg = CoherenceConfig(top_j=3, window=3)
        reordered = _model_with_tops(toy_bow, TOY_TOPS[::-1])
        for fn in (coherence_umass, coherence_uci, coherence_cv):
            a = fn(toy_model, toy_bow, cfg)
            b = fn(reordered, toy_bow, cfg)
            assert a.score == pytest.approx(b.score, abs=1e-12)
            assert sorted(a.per_topic) == pytest.approx(sorted(b.per_topic), abs=1e-12)


class TestCooccurrenceStats:
    def test_pair_bounded_by_singles(self, toy_bow):
        terms = set(range(6))
        pairs = {(a, b) for a in terms for b in terms if a < b}
        for stats in (
            document_cooccurrence(toy_bow, terms, pairs),
            window_cooccurrence(toy_bow, terms, pairs, 3),
        ):
            for (a, b), p in stats.p_pair.items():
                assert p <= min(stats.p_single[a], stats.p_single[b]) + 1e-15
                assert 0.0 <= p <= 1.0


class TestSelectK:
    def test_singleton_range(self):
        bow, _ = sample_synthetic_corpus(block_phi(2, 10), m=20, alpha_star=0.2, seed=3)
        hyper = LdaHyperparams(k=2, iterations=20, burn_in=5, seed=3)
        result = select_k(bow, (3, 3), hyper, CoherenceConfig(top_j=3, window=5))
        assert result.best_k == 3
        assert [k for k, _ in result.scores] == [3]

    def test_invalid_range_rejected(self):
        bow, _ = sample_synthetic_corpus(block_phi(2, 10), m=10, alpha_star=0.2, seed=3)
        hyper = LdaHyperparams(k=2, iterations=5, burn_in=1, seed=3)
        with pytest.raises(UsageError):
            select_k(bow, (1, 3), hyper, CoherenceConfig())
        with pytest.raises(UsageError):
            select_k(bow, (4, 3), hyper, CoherenceConfig())

    def test_deterministic_under_fixed_seed(self):
        bow, _ = sample_synthetic_corpus(block_phi(3, 12), m=40, alpha_star=0.15, seed=9)
        hyper = LdaHyperparams(k=2, iterations=40, burn_in=10, seed=9)
        cfg = CoherenceConfig(top_j=4, window=20)
        a = select_k(bow, (2, 4), hyper, cfg)
        b = select_k(bow, (2, 4), hyper, cfg)
        assert a.best_k == b.best_k
        assert a.scores == b.scores

    def test_recovers_planted_topic_count(self):
        bow, _ = sample_synthetic_corpus(
            zipf_block_phi(4, 40), m=200, alpha_star=0.08, seed=17, tokens_lo=40, tokens_hi=81
        )
        hyper = LdaHyperparams(k=2, iterations=150, burn_in=30, seed=17)
        cfg = CoherenceConfig(top_j=8, window=30, measure=Measure.CV)
        result = select_k(bow, (2, 8), hyper, cfg)
        assert result.best_k in (3, 4, 5)
        by_k = dict(result.scores)
        assert by_k[4] >= by_k[2]
