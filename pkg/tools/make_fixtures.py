"""Generate the bundled demo corpus, market series, and fixture manifest.

Run from the repository root:

    python tools/make_fixtures.py

Outputs land in src/crrix/data/. The manifest freezes corpus statistics
(vocabulary size, token count) computed by one preprocessing run with
default settings, so tests can assert against known values.
"""

import json
import sys
import datetime as dt
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from crrix.corpus import load_corpus, preprocess  # noqa: E402

DATA_DIR = ROOT / "src" / "crrix" / "data"
SEED = 20190401

REGULATORY_WORDS = [
    "regulation", "law", "tax", "ban", "government", "sec", "compliance",
    "license", "court", "ruling", "policy", "sanction", "legislation",
    "enforcement", "lawsuit", "treasury", "senate", "legal", "framework",
    "guidance", "aml", "kyc", "regulator", "statute", "jurisdiction",
]
MARKET_WORDS = [
    "price", "trading", "rally", "bull", "bear", "volume", "futures",
    "investor", "portfolio", "chart", "resistance", "support", "momentum",
    "liquidity", "volatility", "correction", "profit", "loss", "position",
    "leverage", "margin", "settlement", "derivative", "index",
]
TECH_WORDS = [
    "blockchain", "protocol", "node", "wallet", "software", "upgrade",
    "fork", "network", "consensus", "smart", "contract", "ledger",
    "scaling", "layer", "privacy", "signature", "hash", "release",
    "developer", "client", "testnet", "mainnet", "bug", "patch",
]
MINING_WORDS = [
    "miner", "mining", "asic", "pool", "energy", "rig", "difficulty",
    "reward", "halving", "electricity", "farm", "hashrate", "block",
    "nonce", "cooling", "hardware", "chip", "datacenter", "megawatt",
    "efficiency", "throughput", "overclock", "firmware", "silicon",
]
SHARED_WORDS = [
    "bitcoin", "crypto", "cryptocurrency", "market", "exchange", "news",
    "week", "report", "company", "digital", "money", "asset", "analyst",
    "industry", "global", "update", "announcement", "community",
]
FILLER = [
    "the", "a", "of", "and", "to", "in", "for", "on", "with", "at", "it",
    "is", "was", "this", "that",
]

TOPICS = {
    "regulatory": REGULATORY_WORDS,
    "market": MARKET_WORDS,
    "tech": TECH_WORDS,
    "mining": MINING_WORDS,
}
SOURCES = ["coinwire", "blockdaily"]


def make_body(rng, topic: str, n_tokens: int) -> str:
    pool = TOPICS[topic]
    words = []
    for _ in range(n_tokens):
        r = rng.random()
        if r < 0.55:
            words.append(pool[rng.integers(len(pool))])
        elif r < 0.80:
            words.append(SHARED_WORDS[rng.integers(len(SHARED_WORDS))])
        else:
            words.append(FILLER[rng.integers(len(FILLER))])
    # sprinkle light punctuation so tokenization has something to strip
    out = []
    for i, w in enumerate(words):
        out.append(w + ("." if (i + 1) % 12 == 0 else ""))
    return " ".join(out)


def main() -> None:
    rng = np.random.default_rng(SEED)
    start = dt.date(2019, 1, 1)
    span_days = 180

    # 200 articles: 40 regulatory-topic (30 labeled regulatory, 10 unlabeled),
    # 160 others (20 labeled non-regulatory, 140 unlabeled)
    plan = (
        [("regulatory", "regulatory")] * 30
        + [("regulatory", None)] * 10
        + [("market", "non-regulatory")] * 8
        + [("tech", "non-regulatory")] * 6
        + [("mining", "non-regulatory")] * 6
        + [("market", None)] * 50
        + [("tech", None)] * 46
        + [("mining", None)] * 44
    )
    assert len(plan) == 200
    order = rng.permutation(len(plan))

    rows = []
    for n, pos in enumerate(order):
        topic, label = plan[pos]
        date = start + dt.timedelta(days=int(rng.integers(span_days)))
        n_tokens = int(rng.integers(60, 140))
        title_pool = TOPICS[topic]
        title = " ".join(
            title_pool[rng.integers(len(title_pool))] for _ in range(3)
        )
        rows.append(
            {
                "id": f"art-{n:04d}",
                "date": date.isoformat(),
                "source": SOURCES[int(rng.integers(len(SOURCES)))],
                "title": title,
                "body": make_body(rng, topic, n_tokens),
                "label": label,
                "_topic": topic,  # hidden truth, stripped below
            }
        )
    rows.sort(key=lambda r: (r["date"], r["id"]))

    corpus_path = DATA_DIR / "mini_corpus.jsonl"
    truth_path = DATA_DIR / "mini_corpus_truth.json"
    with corpus_path.open("w", encoding="utf-8") as fh:
        for r in rows:
            public = {k: v for k, v in r.items() if not k.startswith("_")}
            fh.write(json.dumps(public, sort_keys=True) + "\n")
    truth = {r["id"]: r["_topic"] for r in rows}
    truth_path.write_text(json.dumps(truth, sort_keys=True, indent=0) + "\n", "utf-8")

    # market series: daily value responding to regulatory article density
    reg_dates = sorted(
        dt.date.fromisoformat(r["date"]) for r in rows if r["_topic"] == "regulatory"
    )
    values = []
    level = 50.0
    for day in range(span_days + 7):
        date = start + dt.timedelta(days=day)
        pressure = sum(1 for d in reg_dates if 0 <= (date - d).days < 7)
        level = 0.9 * level + 5.0 + 1.5 * pressure + rng.normal(0, 1.0)
        values.append((date, round(level, 4)))
    market_path = DATA_DIR / "market.csv"
    with market_path.open("w", encoding="utf-8", newline="") as fh:
        fh.write("date,value\r\n")
        for date, value in values:
            fh.write(f"{date.isoformat()},{value}\r\n")

    # freeze preprocessing statistics with default settings
    articles = load_corpus(corpus_path)
    bow = preprocess(articles)
    n_reg = sum(1 for r in rows if r["label"] == "regulatory")
    manifest = {
        "n_articles": len(rows),
        "n_labeled_regulatory": n_reg,
        "n_labeled_non_regulatory": sum(1 for r in rows if r["label"] == "non-regulatory"),
        "vocab_size": bow.n_terms,
        "total_tokens": bow.total_tokens(),
        "preprocess": {"min_doc_count": 5, "min_token_len": 2, "stem": False},
        "generator_seed": SEED,
    }
    (DATA_DIR / "mini_corpus_manifest.json").write_text(
        json.dumps(manifest, sort_keys=True, indent=2) + "\n", "utf-8"
    )
    print(json.dumps(manifest, indent=2))


if __name__ == "__main__":
    main()
