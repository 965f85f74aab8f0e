"""Quantum-kernel support vector machines on an exact state-vector simulator."""

from .feature_maps import BENCHMARK_MAPS, Family, FeatureMapSpec, circuit_for, encode, required_qubits
from .kernel import KernelMatrix, kernel_entry, kernel_entry_sampled, kernel_matrix
from .metrics import auroc, confusion, summary
from .statevector import GateKind, GateSpec, StateVector, apply_gate, init_zero, inner_product
from .svm import SvmModel, decision_values, dual_objective, predict, train_smo

__version__ = "0.1.0"

__all__ = [
    "Family",
    "FeatureMapSpec",
    "GateKind",
    "GateSpec",
    "KernelMatrix",
    "BENCHMARK_MAPS",
    "StateVector",
    "SvmModel",
    "apply_gate",
    "auroc",
    "circuit_for",
    "confusion",
    "decision_values",
    "dual_objective",
    "encode",
    "init_zero",
    "inner_product",
    "kernel_entry",
    "kernel_entry_sampled",
    "kernel_matrix",
    "predict",
    "required_qubits",
    "summary",
    "train_smo",
]
