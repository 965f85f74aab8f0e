from .config import ExperimentConfig, ExperimentReport, SuiteFailure, parse_map_list
from .data import load_csv, wisconsin_config_fields
from .pipeline import run_experiment, run_experiment_full, run_suite

__all__ = [
    "ExperimentConfig",
    "ExperimentReport",
    "SuiteFailure",
    "load_csv",
    "parse_map_list",
    "run_experiment",
    "run_experiment_full",
    "run_suite",
    "wisconsin_config_fields",
]
