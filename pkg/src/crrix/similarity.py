"""Hellinger/Jaccard distances, distance profiles, threshold classification.

An article's profile is its mean Hellinger distance to every labeled
regulatory article (a regulatory article's zero self-distance is included
in its own mean). Classification thresholds the unlabeled articles at the
tau-quantile of the regulatory profiles.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .corpus import Label
from .errors import DataError, require
from .lda import TopicModel

_PROFILE_CHUNK = 4096


class Group(str, Enum):
    R = "r"
    NON = "non"
    U = "u"


GROUP_FROM_LABEL = {
    Label.REGULATORY: Group.R,
    Label.NON_REGULATORY: Group.NON,
    Label.UNLABELED: Group.U,
}


@dataclass(frozen=True)
class DistanceProfile:
    article_id: str
    group: Group
    avg_dist: float


@dataclass(frozen=True)
class ThresholdRule:
    tau: float
    threshold_value: float


def _check_prob_vector(p: np.ndarray, name: str) -> np.ndarray:
    p = np.asarray(p, dtype=np.float64)
    if p.ndim != 1:
        raise DataError(f"{name} must be a 1-d probability vector")
    if np.any(p < 0):
        raise DataError(f"{name} has negative entries")
    if abs(p.sum() - 1.0) > 1e-6:
        raise DataError(f"{name} does not sum to 1 (got {p.sum()!r})")
    return p


def hellinger(p: Sequence[float], q: Sequence[float]) -> float:
    """Hellinger distance between two probability vectors, in [0, 1]."""
    p = _check_prob_vector(np.asarray(p), "p")
    q = _check_prob_vector(np.asarray(q), "q")
    if p.shape != q.shape:
        raise DataError(f"length mismatch: {p.shape[0]} vs {q.shape[0]}")
    diff = np.sqrt(p) - np.sqrt(q)
    return float(np.sqrt(np.dot(diff, diff)) / np.sqrt(2.0))


def jaccard_topic_distance(model: TopicModel, top_j: int) -> np.ndarray:
    """Pairwise 1 - |A∩B|/|A∪B| over top-word sets; zero diagonal."""
    require(1 <= top_j <= model.n_terms, "top_j must be in [1, vocabulary size]")
    sets = [set(model.top_word_indices(k, top_j)) for k in range(model.k)]
    k = model.k
    out = np.zeros((k, k))
    for a in range(k):
        for b in range(a + 1, k):
            inter = len(sets[a] & sets[b])
            union = len(sets[a] | sets[b])
            out[a, b] = out[b, a] = 1.0 - inter / union
    return out


def hellinger_topic_distance(model: TopicModel) -> np.ndarray:
    """Pairwise Hellinger distance between topic-word rows; zero diagonal."""
    k = model.k
    out = np.zeros((k, k))
    for a in range(k):
        for b in range(a + 1, k):
            out[a, b] = out[b, a] = hellinger(model.phi[a], model.phi[b])
    return out


def distance_profiles(
    thetas: np.ndarray,
    groups: Sequence[Group],
    ids: Sequence[str],
) -> list[DistanceProfile]:
    """Mean Hellinger distance from every article to the regulatory set.

    ``thetas`` is an (M, K) matrix of topic mixtures parallel to
    ``groups`` and ``ids``; at least one article must be in group r.
    """
    thetas = np.asarray(thetas, dtype=np.float64)
    if thetas.ndim != 2 or thetas.shape[0] != len(groups) or len(groups) != len(ids):
        raise DataError("thetas, groups, and ids must be parallel")
    reg_rows = np.asarray([g is Group.R or g == Group.R for g in groups], dtype=bool)
    n_reg = int(reg_rows.sum())
    if n_reg == 0:
        raise DataError("no regulatory-labeled articles; distance profiles undefined")

    sqrt_all = np.sqrt(thetas)
    sqrt_reg = sqrt_all[reg_rows]
    profiles: list[DistanceProfile] = []
    for start in range(0, thetas.shape[0], _PROFILE_CHUNK):
        chunk = sqrt_all[start : start + _PROFILE_CHUNK]
        # squared distances via the explicit elementwise form, halved
        sq = ((chunk[:, None, :] - sqrt_reg[None, :, :]) ** 2).sum(axis=2) / 2.0
        avg = np.sqrt(np.maximum(sq, 0.0)).mean(axis=1)
        for offset, a in enumerate(avg):
            i = start + offset
            profiles.append(
                DistanceProfile(article_id=ids[i], group=groups[i], avg_dist=float(a))
            )
    return profiles


def classify(
    profiles: Sequence[DistanceProfile], tau: float = 0.95
) -> tuple[ThresholdRule, dict[str, Label]]:
    """Label unlabeled articles by thresholding at the tau-quantile of
    the regulatory profiles (linear-interpolation quantile; boundary
    equality counts as regulatory)."""
    require(0.0 < tau < 1.0, "tau must be in (0, 1)")
    reg_dists = [p.avg_dist for p in profiles if p.group is Group.R]
    if len(reg_dists) < 2:
        raise DataError(
            f"need at least 2 regulatory profiles to form a quantile, got {len(reg_dists)}"
        )
    threshold = float(np.quantile(np.asarray(reg_dists), tau))  # type-7 linear
    rule = ThresholdRule(tau=tau, threshold_value=threshold)
    labels: dict[str, Label] = {}
    for p in profiles:
        if p.group is Group.U:
            labels[p.article_id] = (
                Label.REGULATORY if p.avg_dist <= threshold else Label.NON_REGULATORY
            )
    return rule, labels


@dataclass(frozen=True)
class ConfusionMatrix:
    """Rows are truth, columns prediction, class 1 is policy-related."""

    tp: int
    fn: int
    fp: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fn + self.fp + self.tn

    @property
    def accuracy(self) -> float:
        return (self.tp + self.tn) / self.total

    def to_dict(self) -> dict:
        return {
            "true_1": {"pred_1": self.tp, "pred_0": self.fn},
            "true_0": {"pred_1": self.fp, "pred_0": self.tn},
            "accuracy": self.accuracy,
        }


def confusion_matrix(predicted: Sequence[int], truth: Sequence[int]) -> ConfusionMatrix:
    if len(predicted) != len(truth):
        raise DataError(
            f"prediction/truth length mismatch: {len(predicted)} vs {len(truth)}"
        )
    tp = fn = fp = tn = 0
    for p, t in zip(predicted, truth):
        if t not in (0, 1) or p not in (0, 1):
            raise DataError("labels must be 0 or 1")
        if t == 1:
            if p == 1:
                tp += 1
            else:
                fn += 1
        else:
            if p == 1:
                fp += 1
            else:
                tn += 1
    return ConfusionMatrix(tp=tp, fn=fn, fp=fp, tn=tn)
