"""Binary classification metrics with +1 as the positive class."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .errors import ShapeError, UndefinedMetricError


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


@dataclass(frozen=True)
class ClassScores:
    precision: float
    recall: float
    f1: float
    # Names of ratios whose denominator was zero (reported as 0).
    undefined: tuple = ()


@dataclass(frozen=True)
class Summary:
    accuracy: float
    positive: ClassScores
    negative: ClassScores


def _labels(v) -> np.ndarray:
    return np.asarray(v).ravel()


def confusion(y_true, y_pred) -> ConfusionMatrix:
    t, p = _labels(y_true), _labels(y_pred)
    if t.size != p.size:
        raise ShapeError(f"label arrays differ in length: {t.size} vs {p.size}")
    if t.size == 0:
        raise ShapeError("no samples to evaluate")
    tp = int(np.sum((t == 1) & (p == 1)))
    fp = int(np.sum((t != 1) & (p == 1)))
    tn = int(np.sum((t != 1) & (p != 1)))
    fn = int(np.sum((t == 1) & (p != 1)))
    return ConfusionMatrix(tp=tp, fp=fp, tn=tn, fn=fn)


def _ratio(num: int, den: int, name: str, undefined: list) -> float:
    if den == 0:
        undefined.append(name)
        return 0.0
    return num / den


def _class_scores(hit: int, false_alarm: int, miss: int) -> ClassScores:
    undefined: list = []
    precision = _ratio(hit, hit + false_alarm, "precision", undefined)
    recall = _ratio(hit, hit + miss, "recall", undefined)
    f1 = _ratio(2 * hit, 2 * hit + false_alarm + miss, "f1", undefined)
    return ClassScores(precision, recall, f1, tuple(undefined))


def summary(cm: ConfusionMatrix) -> Summary:
    if cm.total == 0:
        raise ShapeError("empty confusion matrix")
    return Summary(
        accuracy=(cm.tp + cm.tn) / cm.total,
        positive=_class_scores(cm.tp, cm.fp, cm.fn),
        negative=_class_scores(cm.tn, cm.fn, cm.fp),
    )


def auroc(y_true, scores) -> float:
    """Area under the ROC curve as the Mann-Whitney statistic; ties count 1/2."""
    t = _labels(y_true)
    s = np.asarray(scores, dtype=float).ravel()
    if t.size != s.size:
        raise ShapeError(f"labels and scores differ in length: {t.size} vs {s.size}")
    pos = t == 1
    n_pos, n_neg = int(pos.sum()), int((~pos).sum())
    if n_pos == 0 or n_neg == 0:
        raise UndefinedMetricError("AUROC needs both classes in y_true")
    ranks = rankdata(s)  # average ranks: ties share a half-integer rank
    u = ranks[pos].sum() - n_pos * (n_pos + 1) / 2.0
    return float(u / (n_pos * n_neg))
