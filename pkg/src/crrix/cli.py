"""Command-line interface and end-to-end pipeline orchestration.

Subcommands: ingest, train, select-k, classify, baseline, index, analyze,
run, topic-distances. Exit codes: 0 success, 1 usage error, 2 data error,
3 numerical failure.

The ``run`` subcommand executes the whole pipeline from one declarative
JSON config (flag overrides win) and writes a manifest with a sha256 per
stage artifact; reruns with the same config reproduce identical hashes.
"""

from __future__ import annotations

import argparse
import csv
import datetime as dt
import hashlib
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .baselines import nb_predict, nb_train, svm_predict, svm_train
from .coherence import CoherenceConfig, Measure, SelectKResult, select_k
from .corpus import Article, BowCorpus, Label, default_stopwords, load_corpus, load_stopwords, preprocess
from .errors import CrrixError, DataError, NumericalError, UsageError
from .index import (
    FillPolicy,
    IndexSeries,
    Periodicity,
    align_series,
    build_index,
    load_market_csv,
)
from .lda import LdaHyperparams, TopicModel, train
from .similarity import (
    GROUP_FROM_LABEL,
    Group,
    classify,
    distance_profiles,
    hellinger_topic_distance,
    jaccard_topic_distance,
)
from .stats import LagSelection, adf_test, granger_sweep, pearson
from . import svg


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A002 - argparse API
        raise UsageError(message)


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# shared stage logic

def _article_to_row(article: Article) -> dict:
    return {
        "id": article.id,
        "date": article.date.isoformat(),
        "source": article.source,
        "title": article.title,
        "body": article.body,
        "label": None if article.label is Label.UNLABELED else article.label.value,
    }


def _write_articles(articles: list[Article], path: Path) -> None:
    lines = [json.dumps(_article_to_row(a), sort_keys=True, ensure_ascii=False) for a in articles]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _classify_corpus(model: TopicModel, corpus: BowCorpus, tau: float) -> tuple[dict, list[dict]]:
    """Threshold-classify every document of the training corpus.

    Training-set topic mixtures come straight from the model's theta
    rows; empty documents carry uniform rows and are flagged.
    """
    if corpus.vocabulary.fingerprint() != model.vocab_fingerprint:
        raise DataError("corpus vocabulary does not match the model fingerprint")
    if corpus.n_docs != model.theta.shape[0]:
        raise DataError("corpus size does not match the model's document count")
    groups = [GROUP_FROM_LABEL[m.label] for m in corpus.doc_meta]
    ids = [m.id for m in corpus.doc_meta]
    profiles = distance_profiles(model.theta, groups, ids)
    rule, predicted = classify(profiles, tau)

    empties = corpus.empty_docs()
    rows = []
    for profile, meta, empty in zip(profiles, corpus.doc_meta, empties):
        if profile.group is Group.U:
            label = predicted[profile.article_id]
        elif profile.group is Group.R:
            label = Label.REGULATORY
        else:
            label = Label.NON_REGULATORY
        rows.append(
            {
                "id": profile.article_id,
                "date": meta.date.isoformat(),
                "group": profile.group.value,
                "avg_dist": profile.avg_dist,
                "predicted_label": label.value,
                "empty_doc": empty,
            }
        )
    info = {
        "tau": rule.tau,
        "threshold_value": rule.threshold_value,
        "n_regulatory_labeled": sum(1 for g in groups if g is Group.R),
        "n_predicted_regulatory": sum(
            1 for r in rows if r["group"] == "u" and r["predicted_label"] == "regulatory"
        ),
    }
    return info, rows


def _classified_to_pairs(rows: list[dict]) -> list[tuple[dt.date, bool]]:
    return [
        (dt.date.fromisoformat(r["date"]), r["predicted_label"] == "regulatory")
        for r in rows
    ]


def _read_classified(path: Path) -> list[dict]:
    rows = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            rows.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise DataError(f"{path} line {lineno}: malformed JSON ({exc.msg})") from exc
    if not rows:
        raise DataError(f"{path} contains no classified articles")
    return rows


def _analyze(index_series: IndexSeries, market, max_lag: int, seed: int) -> dict:
    aligned = align_series(index_series, market)
    n = len(aligned)
    adf_cap = max(0, min(int(12 * (n / 100.0) ** 0.25), (n - 5) // 2))
    report = {
        "meta": {"seed": seed, "max_lag": max_lag, "n_aligned": n},
        "correlation": pearson(aligned.x, aligned.y),
        "adf": {
            "index": _adf_dict(aligned.x, adf_cap),
            "market": _adf_dict(aligned.y, adf_cap),
        },
        "granger": [r.to_dict() for r in granger_sweep(aligned.x, aligned.y, max_lag)],
    }
    return report


def _adf_dict(series: np.ndarray, max_lag: int) -> dict:
    result = adf_test(series, max_lag=max_lag, lag_selection=LagSelection.AIC)
    return {
        "test_stat": result.test_stat,
        "p_value": result.p_value,
        "lags_used": result.lags_used,
        "regression": result.regression,
    }


# ---------------------------------------------------------------------------
# pipeline

_CONFIG_KEYS = {
    "corpus", "stopwords", "market", "output_dir",
    "min_doc_count", "min_token_len", "stem",
    "k", "k_min", "k_max", "metric", "top_j", "window",
    "alpha", "beta", "iterations", "burn_in",
    "tau", "periodicity", "fill_policy", "max_lag", "seed",
}


@dataclass
class PipelineConfig:
    corpus: str
    output_dir: str = "crrix-out"
    stopwords: str | None = None
    market: str | None = None
    min_doc_count: int = 5
    min_token_len: int = 2
    stem: bool = False
    k: int | None = None
    k_min: int | None = None
    k_max: int | None = None
    metric: str = "cv"
    top_j: int = 10
    window: int = 110
    alpha: float = 0.01
    beta: float = 0.1
    iterations: int = 1000
    burn_in: int = 200
    tau: float = 0.95
    periodicity: str = "weekly"
    fill_policy: str = "missing"
    max_lag: int = 7
    seed: int = 42

    def __post_init__(self):
        has_range = self.k_min is not None or self.k_max is not None
        if self.k is not None and has_range:
            raise UsageError("config sets both a fixed k and a k range; they are mutually exclusive")
        if self.k is None and not has_range:
            raise UsageError("config must set either k or a k_min/k_max range")
        if has_range and (self.k_min is None or self.k_max is None):
            raise UsageError("k_min and k_max must be given together")
        if not Path(self.corpus).exists():
            raise DataError(f"corpus file not found: {self.corpus}")
        if self.stopwords is not None and not Path(self.stopwords).exists():
            raise DataError(f"stopword file not found: {self.stopwords}")
        if self.market is not None and not Path(self.market).exists():
            raise DataError(f"market series file not found: {self.market}")

    @classmethod
    def from_file(cls, path: str | Path, overrides: dict | None = None) -> "PipelineConfig":
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except FileNotFoundError as exc:
            raise DataError(f"config file not found: {path}") from exc
        except json.JSONDecodeError as exc:
            raise DataError(f"malformed config JSON: {exc}") from exc
        unknown = set(raw) - _CONFIG_KEYS
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        # input paths resolve against the config file; output_dir against cwd
        base = Path(path).parent
        for key in ("corpus", "stopwords", "market"):
            if raw.get(key) is not None and not Path(raw[key]).is_absolute():
                raw[key] = str(base / raw[key])
        if overrides:
            raw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**raw)

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in sorted(_CONFIG_KEYS)}

    def manifest_view(self) -> dict:
        """Parameters plus input content hashes; free of volatile paths.

        Two runs over identical inputs and parameters produce identical
        views regardless of where files live or outputs are written.
        """
        view = {
            k: getattr(self, k)
            for k in sorted(_CONFIG_KEYS - {"corpus", "stopwords", "market", "output_dir"})
        }
        view["inputs"] = {
            "corpus": _once_sha256(self.corpus),
            "stopwords": _once_sha256(self.stopwords),
            "market": _once_sha256(self.market),
        }
        return view


def _once_sha256(path: str | None) -> str | None:
    return None if path is None else _sha256(Path(path))


@dataclass
class StageRecorder:
    output_dir: Path
    stages: list[dict] = field(default_factory=list)
    written: list[Path] = field(default_factory=list)

    def add(self, name: str, filename: str, text: str) -> Path:
        path = self.output_dir / filename
        path.write_text(text, encoding="utf-8", newline="")
        self.written.append(path)
        self.stages.append({"name": name, "path": filename, "sha256": _sha256(path)})
        return path

    def cleanup(self) -> None:
        for path in self.written:
            path.unlink(missing_ok=True)


def run_pipeline(config: PipelineConfig, echo=print) -> dict:
    """Execute ingest through analyze, returning the manifest dict.

    Any stage failure removes this run's partial outputs and re-raises
    with the stage name attached.
    """
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rec = StageRecorder(output_dir=out_dir)
    stage = "ingest"
    try:
        articles = load_corpus(config.corpus)
        rec.add(
            "ingest",
            "articles.jsonl",
            "\n".join(
                json.dumps(_article_to_row(a), sort_keys=True, ensure_ascii=False)
                for a in articles
            )
            + "\n",
        )
        echo(f"[ingest] {len(articles)} articles")

        stage = "preprocess"
        stop = load_stopwords(config.stopwords) if config.stopwords else default_stopwords()
        bow = preprocess(
            articles,
            stopwords=stop,
            min_doc_count=config.min_doc_count,
            min_token_len=config.min_token_len,
            stem=config.stem,
        )
        rec.add("preprocess", "bow.json", bow.to_json())
        echo(f"[preprocess] V={bow.n_terms} tokens={bow.total_tokens()}")

        hyper = LdaHyperparams(
            k=config.k or 2,
            alpha=config.alpha,
            beta=config.beta,
            iterations=config.iterations,
            burn_in=config.burn_in,
            seed=config.seed,
        )
        cfg = CoherenceConfig(
            top_j=config.top_j, window=config.window, measure=Measure(config.metric)
        )

        chosen_k = config.k
        if chosen_k is None:
            stage = "select_k"
            result = select_k(bow, (config.k_min, config.k_max), hyper, cfg)
            chosen_k = result.best_k
            rec.add("select_k", "select_k.csv", _scores_csv(result))
            echo(f"[select_k] chose k={chosen_k}")

        stage = "train"
        model = train(bow, LdaHyperparams(
            k=chosen_k,
            alpha=config.alpha,
            beta=config.beta,
            iterations=config.iterations,
            burn_in=config.burn_in,
            seed=config.seed,
        ))
        rec.add("train", "model.json", model.to_json())
        echo(f"[train] k={chosen_k} log-likelihood={model.log_likelihood_trace[-1]:.2f}")

        stage = "classify"
        info, rows = _classify_corpus(model, bow, config.tau)
        rec.add(
            "classify",
            "classified.jsonl",
            "\n".join(json.dumps(r, sort_keys=True) for r in rows) + "\n",
        )
        echo(
            f"[classify] threshold={info['threshold_value']:.4f} "
            f"predicted regulatory={info['n_predicted_regulatory']}"
        )

        stage = "index"
        series = build_index(
            _classified_to_pairs(rows),
            Periodicity(config.periodicity),
            FillPolicy(config.fill_policy),
        )
        rec.add("index", "crrix.csv", series.to_csv())
        echo(f"[index] {len(series.points)} {config.periodicity} buckets")

        if config.market is not None:
            stage = "analyze"
            market = load_market_csv(config.market)
            report = _analyze(series, market, config.max_lag, config.seed)
            rec.add("analyze", "analysis.json", _dump_json(report))
            echo(f"[analyze] correlation={report['correlation']:.4f}")
        else:
            echo("[analyze] skipped: no market series configured")

        manifest = {
            "seed": config.seed,
            "config": config.manifest_view(),
            "stages": rec.stages,
        }
        manifest_path = out_dir / "manifest.json"
        manifest_path.write_text(_dump_json(manifest), encoding="utf-8")
        echo(f"[done] manifest at {manifest_path}")
        return manifest
    except CrrixError as exc:
        rec.cleanup()
        raise type(exc)(f"stage {stage}: {exc}") from exc
    except Exception:
        rec.cleanup()
        raise


def _scores_csv(result: SelectKResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["k", "coherence"])
    for k, score in result.scores:
        writer.writerow([k, repr(score)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands

def _cmd_ingest(args) -> int:
    articles = load_corpus(args.input)
    if args.articles_out:
        _write_articles(articles, Path(args.articles_out))
    stop = load_stopwords(args.stopwords) if args.stopwords else default_stopwords()
    bow = preprocess(
        articles,
        stopwords=stop,
        min_doc_count=args.min_doc_count,
        min_token_len=args.min_token_len,
        stem=args.stem,
    )
    bow.save(args.output)
    n_reg = sum(1 for m in bow.doc_meta if m.label is Label.REGULATORY)
    print(
        f"ingested {len(articles)} articles ({n_reg} labeled regulatory); "
        f"V={bow.n_terms} tokens={bow.total_tokens()} -> {args.output}"
    )
    return 0


def _hyper_from_args(args, k: int) -> LdaHyperparams:
    return LdaHyperparams(
        k=k,
        alpha=args.alpha,
        beta=args.beta,
        iterations=args.iters,
        burn_in=args.burn_in,
        seed=args.seed,
    )


def _cmd_train(args) -> int:
    bow = BowCorpus.load(args.corpus)
    model = train(bow, _hyper_from_args(args, args.k))
    model.save(args.output)
    print(
        f"trained k={args.k} on {bow.n_docs} docs; "
        f"final log-likelihood {model.log_likelihood_trace[-1]:.2f} -> {args.output}"
    )
    return 0


def _cmd_select_k(args) -> int:
    bow = BowCorpus.load(args.corpus)
    cfg = CoherenceConfig(top_j=args.top_j, window=args.window, measure=Measure(args.metric))
    result = select_k(bow, (args.k_min, args.k_max), _hyper_from_args(args, args.k_min), cfg)
    Path(args.output).write_text(_scores_csv(result), encoding="utf-8", newline="")
    if args.plot:
        svg.line_chart(
            {"coherence": [(float(k), s) for k, s in result.scores]},
            args.plot,
            title=f"coherence ({args.metric}) by topic count",
        )
    print(f"chosen k={result.best_k} -> {args.output}")
    return 0


def _cmd_classify(args) -> int:
    model = TopicModel.load(args.model)
    bow = BowCorpus.load(args.corpus)
    info, rows = _classify_corpus(model, bow, args.tau)
    text = "\n".join(json.dumps(r, sort_keys=True) for r in rows) + "\n"
    Path(args.output).write_text(text, encoding="utf-8")
    print(
        f"threshold {info['threshold_value']:.6f} (tau={info['tau']}); "
        f"{info['n_predicted_regulatory']} unlabeled articles predicted regulatory "
        f"-> {args.output}"
    )
    return 0


def _labeled_subcorpus(path: str, min_doc_count: int, min_token_len: int):
    articles = [a for a in load_corpus(path) if a.label is not Label.UNLABELED]
    if not articles:
        raise DataError(f"{path} has no labeled articles")
    truth = [1 if a.label is Label.REGULATORY else 0 for a in articles]
    return articles, truth


def _cmd_baseline(args) -> int:
    train_articles, train_truth = _labeled_subcorpus(
        args.train, args.min_doc_count, args.min_token_len
    )
    bow = preprocess(
        train_articles, min_doc_count=args.min_doc_count, min_token_len=args.min_token_len
    )
    eval_articles, eval_truth = _labeled_subcorpus(
        args.eval, args.min_doc_count, args.min_token_len
    )
    eval_bow = preprocess(
        eval_articles, min_doc_count=1, min_token_len=args.min_token_len
    )
    # map eval documents onto the training vocabulary
    eval_docs = []
    for doc in eval_bow.docs:
        mapped = []
        for idx, count in doc:
            train_idx = bow.vocabulary.index.get(eval_bow.vocabulary.terms[idx])
            if train_idx is not None:
                mapped.append((train_idx, count))
        eval_docs.append(sorted(mapped))

    if args.method == "nb":
        model = nb_train(bow, train_truth)
        predictions = [nb_predict(model, doc) for doc in eval_docs]
    else:
        w1, w0 = (float(v) for v in args.class_weight.split(","))
        model = svm_train(
            bow,
            train_truth,
            class_weights=(w1, w0),
            lam=args.reg_lambda,
            epochs=args.epochs,
            seed=args.seed,
        )
        predictions = [svm_predict(model, doc) for doc in eval_docs]

    from .similarity import confusion_matrix

    cm = confusion_matrix(predictions, eval_truth)
    report = {"method": args.method, "confusion": cm.to_dict()}
    text = _dump_json(report)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    print(text, end="")
    return 0


def _cmd_index(args) -> int:
    rows = _read_classified(Path(args.input))
    series = build_index(
        _classified_to_pairs(rows), Periodicity(args.period), FillPolicy(args.fill)
    )
    series.save_csv(args.output)
    if args.plot:
        pts = [
            (float(i), p.value)
            for i, p in enumerate(series.points)
            if p.value is not None
        ]
        svg.line_chart({"crrix": pts}, args.plot, title=f"coverage index ({args.period})")
    print(f"{len(series.points)} {args.period} buckets -> {args.output}")
    return 0


def _cmd_analyze(args) -> int:
    series = IndexSeries.load_csv(args.index, Periodicity(args.period))
    market = load_market_csv(args.market)
    report = _analyze(series, market, args.max_lag, args.seed)
    text = _dump_json(report)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    print(text, end="")
    return 0


def _cmd_topic_distances(args) -> int:
    model = TopicModel.load(args.model)
    if args.metric == "hellinger":
        matrix = hellinger_topic_distance(model)
    else:
        matrix = jaccard_topic_distance(model, args.top_j)
    buf = io.StringIO()
    writer = csv.writer(buf)
    for row in matrix:
        writer.writerow([repr(float(v)) for v in row])
    if args.output:
        Path(args.output).write_text(buf.getvalue(), encoding="utf-8", newline="")
    if args.heatmap:
        svg.heatmap(matrix.tolist(), args.heatmap, title=f"topic distances ({args.metric})")
    print(f"{model.k}x{model.k} {args.metric} distance matrix "
          f"(max off-diagonal {matrix.max():.4f})")
    return 0


def _cmd_run(args) -> int:
    overrides = {
        "output_dir": args.output_dir,
        "seed": args.seed,
        "k": args.k,
        "max_lag": args.max_lag,
    }
    config = PipelineConfig.from_file(args.config, overrides)
    run_pipeline(config)
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> _Parser:
    parser = _Parser(prog="crrix", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ingest", help="load raw articles and build a bag-of-words corpus")
    p.add_argument("--input", required=True, help="raw article JSONL")
    p.add_argument("--output", default="bow.json", help="bag-of-words output path")
    p.add_argument("--articles-out", default=None, help="optional normalized article JSONL")
    p.add_argument("--stopwords", default=None, help="stopword file (default: bundled list)")
    p.add_argument("--min-doc-count", type=int, default=5)
    p.add_argument("--min-token-len", type=int, default=2)
    p.add_argument("--stem", action="store_true", help="apply light suffix stripping")
    p.set_defaults(fn=_cmd_ingest)

    p = sub.add_parser("train", help="fit a topic model by collapsed Gibbs sampling")
    p.add_argument("--corpus", required=True)
    p.add_argument("--output", default="model.json")
    p.add_argument("--k", type=int, required=True)
    _add_hyper_args(p)
    p.set_defaults(fn=_cmd_train)

    p = sub.add_parser("select-k", help="sweep topic counts and score coherence")
    p.add_argument("--corpus", required=True)
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=25)
    p.add_argument("--metric", choices=[m.value for m in Measure], default="cv")
    p.add_argument("--top-j", type=int, default=10)
    p.add_argument("--window", type=int, default=110)
    p.add_argument("--output", default="select_k.csv")
    p.add_argument("--plot", default=None, help="optional SVG line chart")
    _add_hyper_args(p)
    p.set_defaults(fn=_cmd_select_k)

    p = sub.add_parser("classify", help="threshold-classify unlabeled articles")
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--tau", type=float, default=0.95)
    p.add_argument("--output", default="classified.jsonl")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("baseline", help="supervised NB/SVM baselines on labeled data")
    p.add_argument("--method", choices=["nb", "svm"], required=True)
    p.add_argument("--train", required=True, help="labeled article JSONL")
    p.add_argument("--eval", required=True, help="labeled article JSONL")
    p.add_argument("--output", default=None)
    p.add_argument("--min-doc-count", type=int, default=1)
    p.add_argument("--min-token-len", type=int, default=2)
    p.add_argument("--class-weight", default="1,1", help="minority,majority loss weights")
    p.add_argument("--reg-lambda", type=float, default=0.01)
    p.add_argument("--epochs", type=int, default=10)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(fn=_cmd_baseline)

    p = sub.add_parser("index", help="build the coverage index from classified articles")
    p.add_argument("--input", required=True, help="classified JSONL")
    p.add_argument("--period", choices=[x.value for x in Periodicity], default="weekly")
    p.add_argument("--fill", choices=[x.value for x in FillPolicy], default="missing")
    p.add_argument("--output", default="crrix.csv")
    p.add_argument("--plot", default=None)
    p.set_defaults(fn=_cmd_index)

    p = sub.add_parser("analyze", help="correlation, stationarity, and causality report")
    p.add_argument("--index", required=True, help="index CSV")
    p.add_argument("--market", required=True, help="date,value CSV")
    p.add_argument("--period", choices=[x.value for x in Periodicity], default="weekly")
    p.add_argument("--max-lag", type=int, default=7)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--output", default=None)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("topic-distances", help="pairwise topic distance matrix")
    p.add_argument("--model", required=True)
    p.add_argument("--metric", choices=["hellinger", "jaccard"], default="hellinger")
    p.add_argument("--top-j", type=int, default=10)
    p.add_argument("--output", default=None)
    p.add_argument("--heatmap", default=None)
    p.set_defaults(fn=_cmd_topic_distances)

    p = sub.add_parser("run", help="run the full pipeline from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--output-dir", default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--max-lag", type=int, default=None)
    p.set_defaults(fn=_cmd_run)

    return parser


def _add_hyper_args(p) -> None:
    p.add_argument("--alpha", type=float, default=0.01)
    p.add_argument("--beta", type=float, default=0.1)
    p.add_argument("--iters", type=int, default=1000)
    p.add_argument("--burn-in", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
