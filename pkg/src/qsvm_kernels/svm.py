"""Soft-margin SVM on a precomputed kernel, trained by SMO on the dual.

The dual maximizes ``sum(a) - 1/2 sum_ij a_i a_j y_i y_j K_ij`` subject to
``0 <= a_i <= C`` and ``sum_i a_i y_i = 0``. Internally the solver minimizes
the negated objective with gradient ``G = Q a - 1`` where ``Q = (y y^T) * K``.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DegenerateInputError, ShapeError
from .kernel import KernelMatrix

log = logging.getLogger(__name__)

SUPPORT_EPSILON = 1e-8
# Curvature floor for pairs with zero second derivative (e.g. identical points).
_TAU = 1e-12


@dataclass(frozen=True, eq=False)
class SvmModel:
    alphas: np.ndarray
    bias: float
    labels: np.ndarray
    C: float
    support_indices: np.ndarray = field(default=None)
    iterations: int = 0

    def __post_init__(self):
        object.__setattr__(self, "alphas", np.asarray(self.alphas, dtype=float))
        object.__setattr__(self, "labels", np.asarray(self.labels, dtype=float))
        if self.support_indices is None:
            object.__setattr__(
                self, "support_indices", np.flatnonzero(self.alphas > SUPPORT_EPSILON)
            )
        else:
            object.__setattr__(self, "support_indices", np.asarray(self.support_indices, dtype=int))

    def to_json(self) -> str:
        return json.dumps(
            {
                "alphas": self.alphas.tolist(),
                "bias": self.bias,
                "labels": [int(v) for v in self.labels],
                "C": self.C,
                "support_indices": self.support_indices.tolist(),
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> "SvmModel":
        d = json.loads(text)
        return cls(
            alphas=np.array(d["alphas"], dtype=float),
            bias=float(d["bias"]),
            labels=np.array(d["labels"], dtype=float),
            C=float(d["C"]),
            support_indices=np.array(d["support_indices"], dtype=int),
        )


def _entries(K) -> np.ndarray:
    return K.entries if isinstance(K, KernelMatrix) else np.asarray(K, dtype=float)


def _check_labels(y) -> np.ndarray:
    y = np.asarray(y, dtype=float).ravel()
    if not np.all(np.isin(y, (-1.0, 1.0))):
        raise ValueError("labels must be +1 or -1")
    return y


def dual_objective(K, y, alphas) -> float:
    """sum(a) - 1/2 sum_ij a_i a_j y_i y_j K_ij."""
    K = _entries(K)
    y = np.asarray(y, dtype=float).ravel()
    a = np.asarray(alphas, dtype=float).ravel()
    if K.shape != (a.size, a.size) or y.size != a.size:
        raise ShapeError(f"shapes disagree: K {K.shape}, y {y.shape}, alphas {a.shape}")
    ay = a * y
    return float(a.sum() - 0.5 * ay @ K @ ay)


def _bias(alphas, y, K, C) -> float:
    g = K @ (alphas * y)
    free = (alphas > SUPPORT_EPSILON) & (alphas < C - SUPPORT_EPSILON)
    if np.any(free):
        return float(np.mean(y[free] - g[free]))
    # No free vectors: take the middle of the interval of b values that
    # satisfies the KKT conditions of the bounded points.
    at_zero = ~free & (alphas <= SUPPORT_EPSILON)
    at_c = ~free & ~at_zero
    lower = np.concatenate([
        (1 - g)[at_zero & (y > 0)],
        (-1 - g)[at_c & (y < 0)],
    ])
    upper = np.concatenate([
        (-1 - g)[at_zero & (y < 0)],
        (1 - g)[at_c & (y > 0)],
    ])
    lo = lower.max() if lower.size else None
    hi = upper.min() if upper.size else None
    if lo is None and hi is None:
        return 0.0
    if lo is None:
        return float(hi)
    if hi is None:
        return float(lo)
    return float(0.5 * (lo + hi))


def train_smo(
    K,
    y,
    C: float = 1.0,
    tol: float = 1e-3,
    max_passes: int = 10,
    seed: int = 0,
    *,
    gap_tol: float = 1e-9,
    max_iter: Optional[int] = None,
) -> SvmModel:
    """Train the dual by sequential minimal optimization.

    Each step picks the maximal KKT violator ``i`` and the partner ``j`` with the
    largest second-order gain, then solves the two-variable subproblem in
    closed form. Candidate indices are scanned in an order drawn from
    ``seed``, which decides ties between equally good partners.

    Iteration stops when the violating-pair gap drops below ``gap_tol``, when
    ``max_passes`` consecutive sweeps of ``n`` steps fail to improve the
    objective, or after ``max_iter`` steps. ``tol`` is the KKT tolerance the
    result is checked against; a warning is logged if it is not met.
    """
    K = _entries(K)
    y = _check_labels(y)
    n = y.size
    if K.ndim != 2 or K.shape != (n, n):
        raise ShapeError(f"kernel shape {K.shape} does not match {n} labels")
    if not np.array_equal(K, K.T):
        raise ShapeError("training kernel must be symmetric")
    if n < 2 or np.all(y == y[0]):
        raise DegenerateInputError("training needs both classes present")
    if C <= 0:
        raise ValueError(f"C must be positive, got {C}")
    if max_iter is None:
        max_iter = max(100_000, 500 * n)

    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    Ko = K[np.ix_(order, order)]
    yo = y[order]
    Q = (yo[:, None] * yo[None, :]) * Ko
    diag = np.diag(Ko).copy()

    a = np.zeros(n)
    G = -np.ones(n)
    pos = yo > 0

    best_obj = 0.0
    stale_sweeps = 0
    it = 0
    while it < max_iter:
        up = np.where(pos, a < C, a > 0)
        low = np.where(pos, a > 0, a < C)
        score = -yo * G
        if not up.any() or not low.any():
            break
        up_scores = np.where(up, score, -np.inf)
        i = int(np.argmax(up_scores))
        m_val = up_scores[i]
        low_scores = np.where(low, score, np.inf)
        if m_val - low_scores.min() <= gap_tol:
            break

        b = m_val - score
        cand = low & (b > 0)
        curv = diag[i] + diag - 2.0 * yo[i] * yo * Q[i]
        curv = np.where(curv > 0, curv, _TAU)
        gain = np.where(cand, -(b * b) / curv, np.inf)
        j = int(np.argmin(gain))

        ai_old, aj_old = a[i], a[j]
        _update_pair(a, G, Q, yo, i, j, C)
        di, dj = a[i] - ai_old, a[j] - aj_old
        G += Q[:, i] * di + Q[:, j] * dj
        it += 1

        if it % n == 0:
            obj = -(0.5 * a @ (G - 1.0))
            if obj > best_obj + 1e-15 * max(1.0, abs(best_obj)):
                best_obj = obj
                stale_sweeps = 0
            else:
                stale_sweeps += 1
                if stale_sweeps >= max_passes:
                    break

    alphas = np.empty(n)
    alphas[order] = a
    bias = _bias(alphas, y, K, C)
    model = SvmModel(alphas=alphas, bias=bias, labels=y, C=float(C), iterations=it)
    worst = kkt_violation(model, K)
    if worst > tol:
        log.warning("SMO stopped after %d steps with KKT violation %.3g > tol %.3g", it, worst, tol)
    return model


def _update_pair(a, G, Q, y, i, j, C) -> None:
    """Closed-form update of (a_i, a_j) keeping y_i a_i + y_j a_j fixed, clipped to the box."""
    if y[i] != y[j]:
        quad = Q[i, i] + Q[j, j] + 2.0 * Q[i, j]
        if quad <= 0:
            quad = _TAU
        delta = (-G[i] - G[j]) / quad
        diff = a[i] - a[j]
        a[i] += delta
        a[j] += delta
        if diff > 0:
            if a[j] < 0:
                a[j] = 0.0
                a[i] = diff
        else:
            if a[i] < 0:
                a[i] = 0.0
                a[j] = -diff
        if diff > 0:
            if a[i] > C:
                a[i] = C
                a[j] = C - diff
        else:
            if a[j] > C:
                a[j] = C
                a[i] = C + diff
    else:
        quad = Q[i, i] + Q[j, j] - 2.0 * Q[i, j]
        if quad <= 0:
            quad = _TAU
        delta = (G[i] - G[j]) / quad
        total = a[i] + a[j]
        a[i] -= delta
        a[j] += delta
        if total > C:
            if a[i] > C:
                a[i] = C
                a[j] = total - C
        else:
            if a[j] < 0:
                a[j] = 0.0
                a[i] = total
        if total > C:
            if a[j] > C:
                a[j] = C
                a[i] = total - C
        else:
            if a[i] < 0:
                a[i] = 0.0
                a[j] = total
    a[i] = min(max(a[i], 0.0), C)
    a[j] = min(max(a[j], 0.0), C)


def decision_values(model: SvmModel, K_cross) -> np.ndarray:
    """sum_i y_i a_i K[t, i] + b for every test row t."""
    K = _entries(K_cross)
    if K.ndim != 2 or K.shape[1] != model.alphas.size:
        raise ShapeError(
            f"cross kernel has shape {K.shape}; expected {model.alphas.size} training columns"
        )
    return K @ (model.alphas * model.labels) + model.bias


def predict(model: SvmModel, K_cross) -> np.ndarray:
    """Sign of the decision values; a value of exactly 0 is labelled +1."""
    return np.where(decision_values(model, K_cross) >= 0, 1, -1)


def kkt_violation(model: SvmModel, K) -> float:
    """Largest violation of the KKT margin conditions over the training set."""
    K = _entries(K)
    margins = model.labels * decision_values(model, K)
    a, C = model.alphas, model.C
    at_zero = a <= SUPPORT_EPSILON
    at_c = a >= C - SUPPORT_EPSILON
    free = ~at_zero & ~at_c
    viol = np.zeros_like(a)
    viol[at_zero] = np.maximum(0.0, 1.0 - margins[at_zero])
    viol[at_c] = np.maximum(0.0, margins[at_c] - 1.0)
    viol[free] = np.abs(margins[free] - 1.0)
    return float(viol.max()) if viol.size else 0.0
