"""News corpus loading, validation, and bag-of-words preprocessing.

Input is JSON Lines with one article object per line:

    {"id": str, "date": "YYYY-MM-DD", "source": str, "title": str,
     "body": str, "label": "regulatory" | "non-regulatory" | null}

Preprocessing lowercases, tokenizes on runs of alphanumeric characters,
drops stopwords / short / pure-number tokens, prunes rare terms, and
freezes a vocabulary. Documents that end up empty are kept in the
metadata (they still count toward index denominators) but carry no terms.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
import re
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DataError

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

# Longest suffixes first so e.g. "ing" is tried before "s".
_STEM_SUFFIXES = ("ingly", "edly", "ing", "ies", "ed", "es", "ly", "s")


class Label(str, Enum):
    REGULATORY = "regulatory"
    NON_REGULATORY = "non-regulatory"
    UNLABELED = "unlabeled"


_LABEL_FROM_JSON = {
    "regulatory": Label.REGULATORY,
    "non-regulatory": Label.NON_REGULATORY,
    None: Label.UNLABELED,
}


@dataclass(frozen=True)
class Article:
    id: str
    date: dt.date
    source: str
    title: str
    body: str
    label: Label = Label.UNLABELED


@dataclass(frozen=True)
class CorpusSchema:
    """Field names used when reading article JSON objects."""

    id: str = "id"
    date: str = "date"
    source: str = "source"
    title: str = "title"
    body: str = "body"
    label: str = "label"


@dataclass
class Vocabulary:
    """Ordered term list with an index map and document frequencies."""

    terms: list[str]
    doc_frequency: list[int]
    index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {t: i for i, t in enumerate(self.terms)}
        if len(self.index) != len(self.terms):
            raise DataError("vocabulary terms are not unique")

    def __len__(self) -> int:
        return len(self.terms)

    def fingerprint(self) -> str:
        payload = json.dumps(self.terms, ensure_ascii=False).encode("utf-8")
        return hashlib.sha256(payload).hexdigest()


@dataclass(frozen=True)
class DocMeta:
    id: str
    date: dt.date
    label: Label


@dataclass
class BowCorpus:
    """Sparse term counts per document over a frozen vocabulary.

    ``docs[i]`` is a list of ``(term_index, count)`` pairs sorted by term
    index; empty documents are represented by empty lists and flagged via
    :meth:`empty_docs`. ``doc_meta`` is parallel to ``docs``.
    """

    vocabulary: Vocabulary
    docs: list[list[tuple[int, int]]]
    doc_meta: list[DocMeta]

    def __post_init__(self):
        if len(self.docs) != len(self.doc_meta):
            raise DataError("docs and doc_meta lengths differ")

    @property
    def n_docs(self) -> int:
        return len(self.docs)

    @property
    def n_terms(self) -> int:
        return len(self.vocabulary)

    def total_tokens(self) -> int:
        return sum(c for doc in self.docs for _, c in doc)

    def empty_docs(self) -> list[bool]:
        return [len(doc) == 0 for doc in self.docs]

    def doc_lengths(self) -> list[int]:
        return [sum(c for _, c in doc) for doc in self.docs]

    def to_json(self) -> str:
        """Serialize to the canonical single-document JSON form.

        The encoding is byte-stable: same corpus in, same bytes out, and
        ``from_json(to_json(c)).to_json() == to_json(c)``.
        """
        payload = {
            "vocab": self.vocabulary.terms,
            "docs": [[[i, c] for i, c in doc] for doc in self.docs],
            "meta": [
                [m.id, m.date.isoformat(), None if m.label is Label.UNLABELED else m.label.value]
                for m in self.doc_meta
            ],
        }
        return json.dumps(payload, ensure_ascii=False, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "BowCorpus":
        try:
            payload = json.loads(text)
            terms = list(payload["vocab"])
            raw_docs = payload["docs"]
            raw_meta = payload["meta"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise DataError(f"malformed bag-of-words corpus JSON: {exc}") from exc
        docs = [[(int(i), int(c)) for i, c in doc] for doc in raw_docs]
        df = _doc_frequencies(len(terms), docs)
        meta = [
            DocMeta(id=m[0], date=dt.date.fromisoformat(m[1]), label=_LABEL_FROM_JSON[m[2]])
            for m in raw_meta
        ]
        corpus = cls(vocabulary=Vocabulary(terms, df), docs=docs, doc_meta=meta)
        corpus.validate()
        return corpus

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "BowCorpus":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))

    def validate(self) -> None:
        v = self.n_terms
        for doc in self.docs:
            prev = -1
            for idx, count in doc:
                if not 0 <= idx < v:
                    raise DataError(f"term index {idx} out of range [0, {v})")
                if count < 1:
                    raise DataError(f"non-positive count {count} for term index {idx}")
                if idx <= prev:
                    raise DataError("term indices within a document must be strictly increasing")
                prev = idx


def _doc_frequencies(n_terms: int, docs: Iterable[list[tuple[int, int]]]) -> list[int]:
    df = [0] * n_terms
    for doc in docs:
        for idx, _ in doc:
            df[idx] += 1
    return df


def _parse_article(obj: dict, schema: CorpusSchema, where: str) -> Article:
    try:
        art_id = obj[schema.id]
        raw_date = obj[schema.date]
        body = obj[schema.body]
    except KeyError as exc:
        raise DataError(f"{where}: missing required field {exc}") from exc
    if not isinstance(art_id, str) or not art_id:
        raise DataError(f"{where}: article id must be a non-empty string")
    try:
        date = dt.date.fromisoformat(raw_date)
    except (TypeError, ValueError) as exc:
        raise DataError(f"article {art_id!r}: unparseable date {raw_date!r}") from exc
    if not isinstance(body, str) or not body.strip():
        raise DataError(f"article {art_id!r}: empty body")
    raw_label = obj.get(schema.label)
    if raw_label not in _LABEL_FROM_JSON:
        raise DataError(f"article {art_id!r}: unknown label {raw_label!r}")
    return Article(
        id=art_id,
        date=date,
        source=str(obj.get(schema.source, "")),
        title=str(obj.get(schema.title, "")),
        body=body,
        label=_LABEL_FROM_JSON[raw_label],
    )


def load_corpus(path: str | Path, schema: CorpusSchema | None = None) -> list[Article]:
    """Read and validate a JSON Lines article file.

    Raises :class:`DataError` naming the offending line or article for
    malformed JSON, duplicate ids, bad dates, or empty bodies.
    """
    schema = schema or CorpusSchema()
    path = Path(path)
    if not path.exists():
        raise DataError(f"corpus file not found: {path}")
    articles: list[Article] = []
    seen: set[str] = set()
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"line {lineno}: malformed JSON ({exc.msg})") from exc
            article = _parse_article(obj, schema, where=f"line {lineno}")
            if article.id in seen:
                raise DataError(f"duplicate article id {article.id!r}")
            seen.add(article.id)
            articles.append(article)
    return articles


def default_stopwords() -> set[str]:
    """Stopword list shipped with the package."""
    text = resources.files("crrix.data").joinpath("stopwords.txt").read_text("utf-8")
    return {line.strip() for line in text.splitlines() if line.strip()}


def load_stopwords(path: str | Path) -> set[str]:
    """One token per line, UTF-8."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return {line.strip() for line in lines if line.strip()}


def _stem(token: str) -> str:
    for suffix in _STEM_SUFFIXES:
        if token.endswith(suffix) and len(token) - len(suffix) >= 3:
            return token[: -len(suffix)]
    return token


def tokenize(
    text: str,
    stopwords: set[str],
    min_token_len: int,
    stem: bool = False,
) -> list[str]:
    """Lowercase and split on non-alphanumeric boundaries, then filter.

    Drops tokens shorter than ``min_token_len``, stopwords, and tokens
    made of digits only. Stemming, when enabled, is a light suffix strip
    applied after the stopword check.
    """
    out: list[str] = []
    for raw in _TOKEN_RE.findall(text):
        token = raw.lower()
        if len(token) < min_token_len:
            continue
        if token.isdigit():
            continue
        if token in stopwords:
            continue
        if stem:
            token = _stem(token)
            if len(token) < min_token_len:
                continue
        out.append(token)
    return out


def preprocess(
    articles: Sequence[Article],
    stopwords: set[str] | None = None,
    min_doc_count: int = 5,
    min_token_len: int = 2,
    stem: bool = False,
    include_title: bool = True,
) -> BowCorpus:
    """Turn articles into a :class:`BowCorpus` with a frozen vocabulary.

    Title and body are concatenated (title counted once). Terms occurring
    in fewer than ``min_doc_count`` documents are dropped; documents left
    empty stay in the metadata but contribute no terms.
    """
    if not articles:
        raise DataError("cannot preprocess an empty article list")
    if min_doc_count < 1 or min_token_len < 1:
        raise DataError("min_doc_count and min_token_len must be positive")
    if stopwords is None:
        stopwords = default_stopwords()

    token_lists: list[list[str]] = []
    for art in articles:
        text = f"{art.title}\n{art.body}" if include_title else art.body
        token_lists.append(tokenize(text, stopwords, min_token_len, stem=stem))

    df_counter: Counter[str] = Counter()
    for tokens in token_lists:
        df_counter.update(set(tokens))
    kept = sorted(t for t, df in df_counter.items() if df >= min_doc_count)
    vocab = Vocabulary(terms=kept, doc_frequency=[df_counter[t] for t in kept])

    docs: list[list[tuple[int, int]]] = []
    for tokens in token_lists:
        counts: Counter[int] = Counter()
        for tok in tokens:
            idx = vocab.index.get(tok)
            if idx is not None:
                counts[idx] += 1
        docs.append(sorted(counts.items()))

    if all(len(doc) == 0 for doc in docs):
        raise DataError("all documents are empty after preprocessing")

    meta = [DocMeta(id=a.id, date=a.date, label=a.label) for a in articles]
    return BowCorpus(vocabulary=vocab, docs=docs, doc_meta=meta)
