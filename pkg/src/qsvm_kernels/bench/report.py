"""Text table, JSON and CSV renderings of experiment reports."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

from .config import ExperimentConfig, ExperimentReport, SuiteFailure

_TABLE_COLUMNS = [
    ("Feature map", "feature_map", "{}"),
    ("Reps", "repetitions", "{}"),
    ("Accuracy", "accuracy", "{:.3f}"),
    ("AUROC", "auroc", "{:.3f}"),
    ("Prec+", "precision_positive", "{:.2f}"),
    ("Rec+", "recall_positive", "{:.2f}"),
    ("F1+", "f1_positive", "{:.2f}"),
    ("Prec-", "precision_negative", "{:.2f}"),
    ("Rec-", "recall_negative", "{:.2f}"),
    ("F1-", "f1_negative", "{:.2f}"),
    ("TP/FP/TN/FN", None, None),
    ("Time (s)", None, None),
]


def _cell(report: ExperimentReport, key: Optional[str], fmt: Optional[str], header: str) -> str:
    if header == "TP/FP/TN/FN":
        return f"{report.tp}/{report.fp}/{report.tn}/{report.fn}"
    if header == "Time (s)":
        return f"{report.kernel_seconds + report.train_predict_seconds:.2f}"
    return fmt.format(getattr(report, key))


def render_table(reports: Sequence[ExperimentReport], failures: Iterable[SuiteFailure] = ()) -> str:
    headers = [h for h, _, _ in _TABLE_COLUMNS]
    rows = [[_cell(r, k, f, h) for h, k, f in _TABLE_COLUMNS] for r in reports]
    widths = [max([len(h)] + [len(row[c]) for row in rows]) for c, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in rows)
    for fail in failures:
        lines.append(f"FAILED {fail.feature_map} (reps {fail.repetitions}): {fail.error}")
    return "\n".join(lines)


def report_document(
    reports: Sequence[ExperimentReport],
    config: ExperimentConfig,
    failures: Sequence[SuiteFailure] = (),
    timing: bool = True,
) -> dict:
    return {
        "config": {k: v for k, v in config.to_dict().items() if k != "feature_map"},
        "reports": [r.to_dict(timing=timing) for r in reports],
        "failures": [vars(f) for f in failures],
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def to_csv(reports: Sequence[ExperimentReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=ExperimentReport.columns(), lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.to_dict())
    return buf.getvalue()


def write_reports(
    out_dir,
    stem: str,
    reports: Sequence[ExperimentReport],
    config: ExperimentConfig,
    failures: Sequence[SuiteFailure] = (),
) -> List[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    json_path = out_dir / f"{stem}.json"
    csv_path = out_dir / f"{stem}.csv"
    json_path.write_text(to_json(report_document(reports, config, failures)), encoding="utf-8")
    csv_path.write_text(to_csv(reports), encoding="utf-8")
    return [json_path, csv_path]
