import datetime as dt
from importlib import resources

import numpy as np
import pytest

from crrix.corpus import BowCorpus, DocMeta, Label, Vocabulary


def data_path(name: str) -> str:
    return str(resources.files("crrix.data").joinpath(name))


@pytest.fixture(scope="session")
def mini_corpus_path() -> str:
    return data_path("mini_corpus.jsonl")


@pytest.fixture(scope="session")
def market_csv_path() -> str:
    return data_path("market.csv")


def make_bow(
    doc_counts: list[dict[int, int]],
    n_terms: int,
    labels: list[Label] | None = None,
    term_prefix: str = "w",
) -> BowCorpus:
    """Assemble a BowCorpus directly from per-document count dicts."""
    terms = [f"{term_prefix}{i:03d}" for i in range(n_terms)]
    docs = [sorted((i, c) for i, c in counts.items()) for counts in doc_counts]
    df = [0] * n_terms
    for doc in docs:
        for idx, _ in doc:
            df[idx] += 1
    labels = labels or [Label.UNLABELED] * len(docs)
    meta = [
        DocMeta(id=f"d{i:04d}", date=dt.date(2019, 1, 1) + dt.timedelta(days=i), label=lab)
        for i, lab in enumerate(labels)
    ]
    return BowCorpus(vocabulary=Vocabulary(terms, df), docs=docs, doc_meta=meta)


def block_phi(k: int, v: int, own_mass: float = 0.9) -> np.ndarray:
    """Topic-word distributions with most mass on disjoint word blocks."""
    assert v % k == 0
    block = v // k
    phi = np.full((k, v), (1.0 - own_mass) / (v - block))
    for t in range(k):
        phi[t, t * block : (t + 1) * block] = own_mass / block
    return phi


def zipf_block_phi(k: int, v: int, own_mass: float = 0.9, s: float = 1.1) -> np.ndarray:
    """Block topics with Zipf-like within-block weights.

    The head words dominate each block, so over-splitting a topic yields
    sub-topics that share their block's dominant words; coherence then
    peaks at the planted topic count instead of creeping upward.
    """
    assert v % k == 0
    block = v // k
    phi = np.full((k, v), (1.0 - own_mass) / (v - block))
    weights = 1.0 / np.arange(1, block + 1) ** s
    weights = weights / weights.sum() * own_mass
    for t in range(k):
        phi[t, t * block : (t + 1) * block] = weights
    return phi


def sample_synthetic_corpus(
    phi_star: np.ndarray,
    m: int,
    alpha_star: float,
    seed: int,
    tokens_lo: int = 80,
    tokens_hi: int = 121,
    labels: list[Label] | None = None,
) -> tuple[BowCorpus, np.ndarray]:
    """Draw documents from known topic-word distributions.

    This generator is the recovery oracle: models trained on its output
    are compared back against ``phi_star`` / the returned theta matrix.
    """
    k, v = phi_star.shape
    rng = np.random.default_rng(seed)
    theta_star = rng.dirichlet([alpha_star] * k, size=m)
    doc_counts = []
    for d in range(m):
        n_tokens = int(rng.integers(tokens_lo, tokens_hi))
        z = rng.choice(k, size=n_tokens, p=theta_star[d])
        counts: dict[int, int] = {}
        for topic in z:
            w = int(rng.choice(v, p=phi_star[topic]))
            counts[w] = counts.get(w, 0) + 1
        doc_counts.append(counts)
    return make_bow(doc_counts, v, labels=labels), theta_star


def greedy_topic_match(phi_hat: np.ndarray, phi_star: np.ndarray) -> list[int]:
    """Assign each true topic the closest unclaimed estimated topic (L1)."""
    k = phi_star.shape[0]
    taken: set[int] = set()
    match = []
    for t in range(k):
        dists = [
            (np.abs(phi_hat[j] - phi_star[t]).sum(), j) for j in range(k) if j not in taken
        ]
        _, best = min(dists)
        taken.add(best)
        match.append(best)
    return match
