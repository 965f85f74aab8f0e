"""Experiment configuration and report records."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import List

from ..feature_maps import Family, FeatureMapSpec

TIMING_FIELDS = ("kernel_seconds", "train_predict_seconds")


@dataclass(frozen=True)
class ExperimentConfig:
    dataset_path: str
    label_column: str
    positive_label: str
    categorical_columns: List[str] = field(default_factory=list)
    drop_columns: List[str] = field(default_factory=list)
    feature_map: FeatureMapSpec = FeatureMapSpec(Family.ANGLE_X)
    C: float = 1.0
    test_fraction: float = 0.2
    seed: int = 42
    kernel_mode: str = "exact"
    shots: int = 1000
    pca_components: int = 5
    scale_before_split: bool = False
    tol: float = 1e-3

    def __post_init__(self):
        object.__setattr__(self, "positive_label", str(self.positive_label))
        object.__setattr__(self, "categorical_columns", list(self.categorical_columns))
        object.__setattr__(self, "drop_columns", list(self.drop_columns))
        if isinstance(self.feature_map, dict):
            object.__setattr__(self, "feature_map", FeatureMapSpec.from_dict(self.feature_map))
        elif isinstance(self.feature_map, str):
            object.__setattr__(self, "feature_map", FeatureMapSpec(self.feature_map))
        if self.pca_components < 1:
            raise ValueError(f"pca_components must be >= 1, got {self.pca_components}")
        if not 0 < self.test_fraction < 1:
            raise ValueError(f"test_fraction must be in (0, 1), got {self.test_fraction}")
        if self.C <= 0:
            raise ValueError(f"C must be positive, got {self.C}")
        if self.kernel_mode not in ("exact", "sampled"):
            raise ValueError(f"kernel_mode must be 'exact' or 'sampled', got {self.kernel_mode!r}")
        if self.shots < 1:
            raise ValueError(f"shots must be >= 1, got {self.shots}")

    def with_map(self, spec: FeatureMapSpec) -> "ExperimentConfig":
        return replace(self, feature_map=spec)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["feature_map"] = self.feature_map.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known - {"maps"}
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        return cls(**{k: v for k, v in d.items() if k in known})

    @classmethod
    def from_json(cls, path) -> "ExperimentConfig":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


@dataclass(frozen=True)
class ExperimentReport:
    feature_map: str
    family: str
    repetitions: int
    n_train: int
    n_test: int
    accuracy: float
    auroc: float
    precision_positive: float
    recall_positive: float
    f1_positive: float
    precision_negative: float
    recall_negative: float
    f1_negative: float
    tp: int
    fp: int
    tn: int
    fn: int
    kernel_seconds: float
    train_predict_seconds: float

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            for name in TIMING_FIELDS:
                d.pop(name)
        return d

    @classmethod
    def columns(cls) -> List[str]:
        return [f.name for f in fields(cls)]


@dataclass(frozen=True)
class SuiteFailure:
    feature_map: str
    repetitions: int
    error: str


def parse_map_list(items) -> List[FeatureMapSpec]:
    """Accept specs, dicts, or strings like ``"ZZ_FEATURE:2"``."""
    out: List[FeatureMapSpec] = []
    for item in items:
        if isinstance(item, FeatureMapSpec):
            out.append(item)
        elif isinstance(item, dict):
            out.append(FeatureMapSpec.from_dict(item))
        else:
            name, _, reps = str(item).partition(":")
            out.append(FeatureMapSpec(name.strip(), int(reps) if reps else 1))
    return out
