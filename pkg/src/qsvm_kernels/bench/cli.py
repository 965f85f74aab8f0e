"""Command-line entry point: ``qsvm-kernels run`` and ``qsvm-kernels suite``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from ..errors import QsvmError
from .config import ExperimentConfig
from .pipeline import dump_kernels, run_experiment_full, run_suite
from .report import render_table, write_reports

log = logging.getLogger("qsvm_kernels")


def _csv_list(text: str) -> List[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON config document with ExperimentConfig field names")
    p.add_argument("--dataset-path")
    p.add_argument("--label-column")
    p.add_argument("--positive-label")
    p.add_argument("--categorical-columns", type=_csv_list, help="comma-separated column names")
    p.add_argument("--drop-columns", type=_csv_list, help="comma-separated columns to ignore")
    p.add_argument("--family", help="feature map family, e.g. ANGLE_X or ZZ_FEATURE")
    p.add_argument("--repetitions", type=int)
    p.add_argument("--angle-scale", type=float)
    p.add_argument("--C", dest="C", type=float)
    p.add_argument("--test-fraction", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--kernel-mode", choices=["exact", "sampled"])
    p.add_argument("--shots", type=int)
    p.add_argument("--pca-components", type=int)
    p.add_argument("--scale-before-split", action="store_true", default=None)
    p.add_argument("--tol", type=float)
    p.add_argument("--out", default="reports", help="output directory (default: reports)")
    p.add_argument("--dump-kernels", action="store_true", help="also write kernel matrices as CSV")
    p.add_argument("-v", "--verbose", action="store_true")


_SCALAR_FIELDS = [
    "dataset_path", "label_column", "positive_label", "categorical_columns", "drop_columns",
    "C", "test_fraction", "seed", "kernel_mode", "shots", "pca_components",
    "scale_before_split", "tol",
]


def build_config(args: argparse.Namespace) -> tuple:
    doc: dict = {}
    if args.config:
        doc = json.loads(Path(args.config).read_text(encoding="utf-8"))
    maps = doc.pop("maps", None)
    for name in _SCALAR_FIELDS:
        value = getattr(args, name, None)
        if value is not None:
            doc[name] = value
    fm = dict(doc.get("feature_map") or {})
    if isinstance(doc.get("feature_map"), str):
        fm = {"family": doc["feature_map"]}
    for flag, key in (("family", "family"), ("repetitions", "repetitions"), ("angle_scale", "angle_scale")):
        value = getattr(args, flag, None)
        if value is not None:
            fm[key] = value
    fm.setdefault("family", "ANGLE_X")
    doc["feature_map"] = fm
    missing = [k for k in ("dataset_path", "label_column", "positive_label") if k not in doc]
    if missing:
        raise ValueError("missing required settings: " + ", ".join("--" + m.replace("_", "-") for m in missing))
    return ExperimentConfig.from_dict(doc), maps


def cmd_run(args) -> int:
    config, _ = build_config(args)
    art = run_experiment_full(config)
    print(render_table([art.report]))
    stem = f"run_{config.feature_map.family.value.lower()}_r{config.feature_map.repetitions}"
    for path in write_reports(args.out, stem, [art.report], config):
        log.info("wrote %s", path)
    if args.dump_kernels:
        dump_kernels(art, args.out, stem)
    return 0


def cmd_suite(args) -> int:
    config, maps = build_config(args)
    if args.maps is not None:
        maps = args.maps
    result = run_suite(config, maps, keep_artifacts=args.dump_kernels)
    print(render_table(result.reports, result.failures))
    for path in write_reports(args.out, "suite", result.reports, config, result.failures):
        log.info("wrote %s", path)
    if args.dump_kernels:
        for art in result.artifacts:
            stem = f"suite_{art.report.family.lower()}_r{art.report.repetitions}"
            dump_kernels(art, args.out, stem)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsvm-kernels",
        description="Quantum-kernel SVM experiments on a simulated state-vector backend.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="run one experiment")
    _add_config_flags(run_p)
    run_p.set_defaults(func=cmd_run)
    suite_p = sub.add_parser("suite", help="compare feature maps on one shared split")
    _add_config_flags(suite_p)
    suite_p.add_argument(
        "--maps",
        type=_csv_list,
        help="comma-separated FAMILY[:REPS] list; default is the nine-map comparison",
    )
    suite_p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (QsvmError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
