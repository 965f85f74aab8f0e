"""End-to-end experiment: split, preprocess, kernels, SMO, metrics."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from ..errors import QsvmError
from ..feature_maps import BENCHMARK_MAPS, FeatureMapSpec
from ..kernel import KernelMatrix, kernel_matrix
from ..metrics import auroc, confusion, summary
from ..preprocess import LabeledDataset, Preprocessor, fit_preprocessor, stratified_split
from ..svm import SvmModel, decision_values, predict, train_smo
from .config import ExperimentConfig, ExperimentReport, SuiteFailure, parse_map_list
from .data import load_csv

log = logging.getLogger(__name__)


@dataclass
class PreparedData:
    """Train/test features ready for encoding, plus the fitted preprocessing chain."""

    X_train: np.ndarray
    y_train: np.ndarray
    X_test: np.ndarray
    y_test: np.ndarray
    preprocessor: Preprocessor


@dataclass
class ExperimentArtifacts:
    report: ExperimentReport
    model: SvmModel
    train_kernel: KernelMatrix
    test_kernel: KernelMatrix
    decision_values: np.ndarray


def prepare(config: ExperimentConfig, dataset: Optional[LabeledDataset] = None) -> PreparedData:
    if dataset is None:
        dataset = load_csv(
            config.dataset_path,
            config.label_column,
            config.positive_label,
            config.categorical_columns,
            config.drop_columns,
        )
    if config.scale_before_split:
        # Compatibility path: fit the chain on all rows before splitting.
        pre = _fit(dataset.features, config.pca_components)
        scaled = LabeledDataset(pre.transform(dataset.features), dataset.labels)
        train, test = stratified_split(scaled, config.test_fraction, config.seed)
        return PreparedData(train.features, train.labels, test.features, test.labels, pre)
    train, test = stratified_split(dataset, config.test_fraction, config.seed)
    pre = _fit(train.features, config.pca_components)
    return PreparedData(
        pre.transform(train.features), train.labels, pre.transform(test.features), test.labels, pre
    )


def _fit(X: np.ndarray, k: int) -> Preprocessor:
    if k > min(X.shape):
        log.warning("pca_components=%d exceeds data rank bound %d; using %d", k, min(X.shape), min(X.shape))
    return fit_preprocessor(X, k)


def run_prepared(config: ExperimentConfig, data: PreparedData) -> ExperimentArtifacts:
    spec = config.feature_map
    shots = config.shots if config.kernel_mode == "sampled" else None

    t0 = time.perf_counter()
    k_train = kernel_matrix(spec, data.X_train, shots=shots, seed=config.seed)
    k_test = kernel_matrix(spec, data.X_test, data.X_train, shots=shots, seed=config.seed + 1)
    t1 = time.perf_counter()
    model = train_smo(k_train, data.y_train, C=config.C, tol=config.tol, seed=config.seed)
    scores = decision_values(model, k_test)
    y_pred = predict(model, k_test)
    t2 = time.perf_counter()

    cm = confusion(data.y_test, y_pred)
    s = summary(cm)
    report = ExperimentReport(
        feature_map=spec.name,
        family=spec.family.value,
        repetitions=spec.repetitions,
        n_train=int(data.y_train.size),
        n_test=int(data.y_test.size),
        accuracy=s.accuracy,
        auroc=auroc(data.y_test, scores),
        precision_positive=s.positive.precision,
        recall_positive=s.positive.recall,
        f1_positive=s.positive.f1,
        precision_negative=s.negative.precision,
        recall_negative=s.negative.recall,
        f1_negative=s.negative.f1,
        tp=cm.tp,
        fp=cm.fp,
        tn=cm.tn,
        fn=cm.fn,
        kernel_seconds=t1 - t0,
        train_predict_seconds=t2 - t1,
    )
    return ExperimentArtifacts(report, model, k_train, k_test, scores)


def run_experiment(config: ExperimentConfig, dataset: Optional[LabeledDataset] = None) -> ExperimentReport:
    return run_experiment_full(config, dataset).report


def run_experiment_full(
    config: ExperimentConfig, dataset: Optional[LabeledDataset] = None
) -> ExperimentArtifacts:
    try:
        return run_prepared(config, prepare(config, dataset))
    except QsvmError as exc:
        raise type(exc)(f"{config.feature_map.name} on {config.dataset_path}: {exc}") from exc


@dataclass
class SuiteResult:
    reports: List[ExperimentReport]
    failures: List[SuiteFailure]
    artifacts: List[ExperimentArtifacts]


def run_suite(
    base_config: ExperimentConfig,
    maps: Optional[Sequence] = None,
    dataset: Optional[LabeledDataset] = None,
    keep_artifacts: bool = False,
) -> SuiteResult:
    """Run every map on one shared split, sequentially.

    A failing map is recorded in ``failures`` and the remaining maps still run.
    """
    specs: List[FeatureMapSpec] = list(BENCHMARK_MAPS) if maps is None else parse_map_list(maps)
    reports, failures, artifacts = [], [], []
    if not specs:
        return SuiteResult(reports, failures, artifacts)
    data = prepare(base_config, dataset)
    for spec in specs:
        config = base_config.with_map(spec)
        try:
            art = run_prepared(config, data)
        except Exception as exc:  # noqa: BLE001 - one bad map must not stop the suite
            log.error("%s (reps %d) failed: %s", spec.name, spec.repetitions, exc)
            failures.append(SuiteFailure(spec.name, spec.repetitions, f"{type(exc).__name__}: {exc}"))
            continue
        log.info("%s reps=%d accuracy=%.3f auroc=%.3f", spec.name, spec.repetitions,
                 art.report.accuracy, art.report.auroc)
        reports.append(art.report)
        if keep_artifacts:
            artifacts.append(art)
    return SuiteResult(reports, failures, artifacts)


def dump_kernels(art: ExperimentArtifacts, out_dir, stem: str) -> List[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = [out_dir / f"{stem}_train_kernel.csv", out_dir / f"{stem}_test_kernel.csv"]
    art.train_kernel.to_csv(paths[0])
    art.test_kernel.to_csv(paths[1])
    return paths
