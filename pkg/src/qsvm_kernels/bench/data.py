"""CSV loading into a labeled dataset."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from ..errors import DatasetError, DegenerateInputError
from ..preprocess import LabeledDataset, one_hot

log = logging.getLogger(__name__)

MISSING_MARKERS = ("?", "")

WISCONSIN_SHA256 = "bcd0ae28405203fc21b371120de7d318f1c86ed39e0565adc2583fc47257a260"


def load_csv(
    path,
    label_column: str,
    positive_label,
    categorical_columns: Iterable[str] = (),
    drop_columns: Iterable[str] = (),
    *,
    return_dropped: bool = False,
):
    """Read a headed, comma-separated file into a :class:`LabeledDataset`.

    Rows containing a missing marker ("?" or an empty cell) in any used
    column are dropped. Categorical columns are one-hot expanded in place of
    the original column; every other column must parse as a number. Labels
    equal to ``positive_label`` (compared as strings) become +1, the rest -1.
    """
    path = Path(path)
    if not path.is_file():
        raise DatasetError(f"dataset file not found: {path}")
    frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    frame.columns = [c.strip() for c in frame.columns]
    categorical = list(categorical_columns)
    dropped_cols = set(drop_columns)
    for col in [label_column, *categorical, *dropped_cols]:
        if col not in frame.columns:
            raise DatasetError(f"column {col!r} not in {path.name}; have {list(frame.columns)}")

    used = [c for c in frame.columns if c not in dropped_cols]
    frame = frame[used].apply(lambda s: s.str.strip())
    missing = frame.isin(MISSING_MARKERS).any(axis=1)
    n_dropped = int(missing.sum())
    if n_dropped:
        log.info("dropped %d of %d rows with missing values in %s", n_dropped, len(frame), path.name)
    frame = frame.loc[~missing].reset_index(drop=True)
    if frame.empty:
        raise DatasetError(f"{path.name}: no complete rows")

    blocks = []
    names = []
    for col in used:
        if col == label_column:
            continue
        if col in categorical:
            cats, block = one_hot(frame[col].tolist())
            blocks.append(block)
            names.extend(f"{col}={c}" for c in cats)
        else:
            try:
                values = frame[col].astype(float).to_numpy()
            except ValueError as exc:
                raise DatasetError(
                    f"column {col!r} is not numeric; list it in categorical_columns ({exc})"
                ) from None
            blocks.append(values[:, None])
            names.append(col)
    if not blocks:
        raise DatasetError(f"{path.name}: no feature columns")

    labels = np.where(frame[label_column] == str(positive_label), 1, -1)
    if np.all(labels == labels[0]):
        raise DegenerateInputError(
            f"{path.name}: every label is {'positive' if labels[0] > 0 else 'negative'}"
            f" (positive_label={positive_label!r})"
        )
    dataset = LabeledDataset(np.hstack(blocks), labels, tuple(names))
    if return_dropped:
        return dataset, n_dropped
    return dataset


def wisconsin_config_fields(path: Optional[str] = None) -> dict:
    """Column settings for the bundled Wisconsin breast cancer CSV (malignant = +1)."""
    return {
        "dataset_path": path or "data/breast-cancer-wisconsin.csv",
        "label_column": "class",
        "positive_label": "4",
        "categorical_columns": [],
        "drop_columns": ["sample_code"],
    }
