"""Data conditioning: one-hot encoding, min-max scaling, PCA and a stratified split."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .errors import DegenerateInputError, ShapeError


@dataclass(frozen=True, eq=False)
class LabeledDataset:
    features: np.ndarray
    labels: np.ndarray
    feature_names: Tuple[str, ...] = ()

    def __post_init__(self):
        X = np.asarray(self.features, dtype=float)
        y = np.asarray(self.labels, dtype=int).ravel()
        if X.ndim != 2 or X.shape[0] != y.size:
            raise ShapeError(f"features {X.shape} and labels {y.shape} disagree")
        if not np.all(np.isin(y, (-1, 1))):
            raise ValueError("labels must be +1 or -1")
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "labels", y)
        object.__setattr__(self, "feature_names", tuple(self.feature_names))

    def __len__(self) -> int:
        return self.labels.size

    def subset(self, idx) -> "LabeledDataset":
        return LabeledDataset(self.features[idx], self.labels[idx], self.feature_names)


def one_hot(column: Sequence) -> Tuple[List, np.ndarray]:
    """One binary column per distinct value, in order of first appearance.

    Returns the categories and a (rows, categories) 0/1 array.
    """
    values = list(column)
    if not values:
        raise ShapeError("cannot one-hot encode an empty column")
    categories = list(dict.fromkeys(values))
    index = {c: k for k, c in enumerate(categories)}
    out = np.zeros((len(values), len(categories)))
    out[np.arange(len(values)), [index[v] for v in values]] = 1.0
    return categories, out


@dataclass(frozen=True, eq=False)
class MinMaxScaler:
    minima: np.ndarray
    maxima: np.ndarray

    @property
    def constant(self) -> np.ndarray:
        """Mask of features with zero range; these map to 0."""
        return self.maxima == self.minima


def _as_2d(data) -> np.ndarray:
    X = np.asarray(data, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    if X.ndim != 2 or X.shape[0] == 0:
        raise ShapeError(f"expected non-empty 2-D data, got shape {X.shape}")
    return X


def minmax_fit(data) -> MinMaxScaler:
    X = _as_2d(data)
    return MinMaxScaler(X.min(axis=0), X.max(axis=0))


def minmax_apply(scaler: MinMaxScaler, data) -> np.ndarray:
    """(x - min) / (max - min), clamped to [0, 1]; constant features become 0."""
    X = _as_2d(data)
    if X.shape[1] != scaler.minima.size:
        raise ShapeError(f"scaler fitted on {scaler.minima.size} features, got {X.shape[1]}")
    span = scaler.maxima - scaler.minima
    safe = np.where(span > 0, span, 1.0)
    out = (X - scaler.minima) / safe
    out[:, span == 0] = 0.0
    return np.clip(out, 0.0, 1.0)


@dataclass(frozen=True, eq=False)
class PcaTransform:
    mean: np.ndarray
    components: np.ndarray  # (k, n_features), rows orthonormal
    explained_variance: np.ndarray
    total_variance: float

    @property
    def explained_variance_ratio(self) -> np.ndarray:
        if self.total_variance == 0:
            return np.zeros_like(self.explained_variance)
        return self.explained_variance / self.total_variance


def pca_fit(data, k: int) -> PcaTransform:
    """Top-``k`` principal directions from the eigendecomposition of the sample covariance.

    Component signs are fixed so the largest-magnitude loading is positive.
    """
    X = _as_2d(data)
    n, p = X.shape
    if n < 2:
        raise ShapeError("PCA needs at least two samples")
    if not 1 <= k <= min(n, p):
        raise ShapeError(f"k must be in [1, {min(n, p)}], got {k}")
    mean = X.mean(axis=0)
    Xc = X - mean
    cov = Xc.T @ Xc / (n - 1)
    evals, evecs = np.linalg.eigh(cov)
    top = np.argsort(evals)[::-1][:k]
    comps = evecs[:, top].T
    flip = np.sign(comps[np.arange(k), np.argmax(np.abs(comps), axis=1)])
    comps = comps * np.where(flip == 0, 1.0, flip)[:, None]
    variances = np.clip(evals[top], 0.0, None)
    return PcaTransform(mean, comps, variances, float(np.trace(cov)))


def pca_apply(t: PcaTransform, data) -> np.ndarray:
    X = _as_2d(data)
    if X.shape[1] != t.mean.size:
        raise ShapeError(f"PCA fitted on {t.mean.size} features, got {X.shape[1]}")
    return (X - t.mean) @ t.components.T


def stratified_split(
    dataset: LabeledDataset, test_fraction: float = 0.2, seed: int = 42
) -> Tuple[LabeledDataset, LabeledDataset]:
    """Split each class separately, rounding its test share to the nearest sample.

    Both partitions keep the original row order.
    """
    if not 0 < test_fraction < 1:
        raise ValueError(f"test_fraction must be in (0, 1), got {test_fraction}")
    rng = np.random.default_rng(seed)
    test_idx = []
    for cls in (-1, 1):
        members = np.flatnonzero(dataset.labels == cls)
        if members.size < 2:
            raise DegenerateInputError(f"class {cls:+d} has {members.size} members; need at least 2")
        n_test = int(np.floor(members.size * test_fraction + 0.5))
        n_test = min(max(n_test, 1), members.size - 1)
        test_idx.append(rng.permutation(members)[:n_test])
    test_mask = np.zeros(len(dataset), dtype=bool)
    test_mask[np.concatenate(test_idx)] = True
    return dataset.subset(~test_mask), dataset.subset(test_mask)


@dataclass(frozen=True, eq=False)
class Preprocessor:
    """Fitted chain: min-max, PCA to ``k`` components, then min-max again."""

    scaler: MinMaxScaler
    pca: PcaTransform
    post_scaler: MinMaxScaler

    def transform(self, data) -> np.ndarray:
        z = pca_apply(self.pca, minmax_apply(self.scaler, data))
        return minmax_apply(self.post_scaler, z)


def fit_preprocessor(data, k: int = 5) -> Preprocessor:
    scaler = minmax_fit(data)
    scaled = minmax_apply(scaler, data)
    k = min(k, scaled.shape[0], scaled.shape[1])
    pca = pca_fit(scaled, k)
    post = minmax_fit(pca_apply(pca, scaled))
    return Preprocessor(scaler, pca, post)
