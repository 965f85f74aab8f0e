"""Quantum feature maps: classical vectors to encoded states.

Nine encodings are supported. Angle maps put one rotation per feature on
its own qubit; parametrized maps add a linear chain of controlled gates
after the rotation layer; Pauli maps alternate Hadamard layers with
data-dependent Z phases (and ZZ phases between neighbouring qubits);
amplitude encoding writes the normalized vector straight into the state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import List

import numpy as np

from .errors import DegenerateInputError, ShapeError, UnsupportedFamilyError
from .statevector import GateKind, GateSpec, StateVector, apply_gate_inplace, init_zero


class Family(str, Enum):
    ANGLE_X = "ANGLE_X"
    ANGLE_Y = "ANGLE_Y"
    ANGLE_Z = "ANGLE_Z"
    AMPLITUDE = "AMPLITUDE"
    Z_FEATURE = "Z_FEATURE"
    ZZ_FEATURE = "ZZ_FEATURE"
    PARAM_X_CX = "PARAM_X_CX"
    PARAM_Y_CY = "PARAM_Y_CY"
    PARAM_Z_CZ = "PARAM_Z_CZ"


_ANGLE_GATE = {
    Family.ANGLE_X: GateKind.RX,
    Family.ANGLE_Y: GateKind.RY,
    Family.ANGLE_Z: GateKind.RZ,
    Family.PARAM_X_CX: GateKind.RX,
    Family.PARAM_Y_CY: GateKind.RY,
    Family.PARAM_Z_CZ: GateKind.RZ,
}

_ENTANGLER = {
    Family.PARAM_X_CX: GateKind.CX,
    Family.PARAM_Y_CY: GateKind.CY,
    Family.PARAM_Z_CZ: GateKind.CZ,
}

# Display names used in reports, following the usual naming of these maps.
DISPLAY_NAMES = {
    Family.ANGLE_X: "Rx",
    Family.ANGLE_Y: "Ry",
    Family.ANGLE_Z: "Rz",
    Family.PARAM_X_CX: "Rx&CX",
    Family.PARAM_Y_CY: "Ry&CY",
    Family.PARAM_Z_CZ: "Rz&CZ",
    Family.AMPLITUDE: "Amplitude",
    Family.Z_FEATURE: "ZFeatureMap",
    Family.ZZ_FEATURE: "ZZFeatureMap",
}


@dataclass(frozen=True)
class FeatureMapSpec:
    """Which encoding to use, how many layers, and the feature-to-angle multiplier."""

    family: Family
    repetitions: int = 1
    angle_scale: float = math.pi

    def __post_init__(self):
        try:
            if not isinstance(self.family, Family):
                object.__setattr__(self, "family", Family(str(self.family).strip().upper()))
        except ValueError:
            raise UnsupportedFamilyError(f"unknown feature map family {self.family!r}") from None
        if int(self.repetitions) != self.repetitions or self.repetitions < 1:
            raise ValueError(f"repetitions must be a positive integer, got {self.repetitions}")
        if not math.isfinite(self.angle_scale):
            raise ValueError("angle_scale must be finite")

    @property
    def name(self) -> str:
        return DISPLAY_NAMES[self.family]

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "repetitions": self.repetitions,
            "angle_scale": self.angle_scale,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FeatureMapSpec":
        return cls(
            family=d["family"],
            repetitions=int(d.get("repetitions", 1)),
            angle_scale=float(d.get("angle_scale", math.pi)),
        )


# The benchmark suite: every family, with the Pauli maps at two repetitions.
BENCHMARK_MAPS = [
    FeatureMapSpec(Family.ANGLE_X, 1),
    FeatureMapSpec(Family.ANGLE_Y, 1),
    FeatureMapSpec(Family.ANGLE_Z, 1),
    FeatureMapSpec(Family.PARAM_X_CX, 1),
    FeatureMapSpec(Family.PARAM_Y_CY, 1),
    FeatureMapSpec(Family.PARAM_Z_CZ, 1),
    FeatureMapSpec(Family.AMPLITUDE, 1),
    FeatureMapSpec(Family.Z_FEATURE, 2),
    FeatureMapSpec(Family.ZZ_FEATURE, 2),
]


def required_qubits(spec: FeatureMapSpec, d: int) -> int:
    if d < 1:
        raise ShapeError(f"feature dimension must be >= 1, got {d}")
    if spec.family is Family.AMPLITUDE:
        return max(1, math.ceil(math.log2(d)))
    return d


def _as_features(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size < 1:
        raise ShapeError(f"feature vector must be 1-D and non-empty, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("feature vector contains non-finite values")
    return x


def circuit_for(spec: FeatureMapSpec, x) -> List[GateSpec]:
    """Gate list preparing the encoded state from |0...0>.

    Pauli maps use phi_i = s*x_i and phi_ij = (pi - s*x_i)(pi - s*x_j), where
    ``s`` is ``spec.angle_scale``; each ZZ term is realised as CX, RZ, CX on
    neighbouring qubits, which equals exp(-i phi_ij Z_i Z_j).
    """
    if spec.family is Family.AMPLITUDE:
        raise UnsupportedFamilyError("amplitude encoding sets amplitudes directly; it has no gate list")
    x = _as_features(x)
    n = x.size
    theta = spec.angle_scale * x
    layer: List[GateSpec] = []

    if spec.family in _ANGLE_GATE:
        kind = _ANGLE_GATE[spec.family]
        layer.extend(GateSpec(kind, q, angle=float(theta[q])) for q in range(n))
        ent = _ENTANGLER.get(spec.family)
        if ent is not None:
            layer.extend(GateSpec(ent, q + 1, control=q) for q in range(n - 1))
    else:
        layer.extend(GateSpec(GateKind.H, q) for q in range(n))
        layer.extend(GateSpec(GateKind.RZ, q, angle=float(2.0 * theta[q])) for q in range(n))
        if spec.family is Family.ZZ_FEATURE:
            for q in range(n - 1):
                phi = (math.pi - theta[q]) * (math.pi - theta[q + 1])
                layer.append(GateSpec(GateKind.CX, q + 1, control=q))
                layer.append(GateSpec(GateKind.RZ, q + 1, angle=float(2.0 * phi)))
                layer.append(GateSpec(GateKind.CX, q + 1, control=q))

    return layer * spec.repetitions


def amplitude_vector(x) -> np.ndarray:
    """Zero-pad ``x`` to a power-of-two length and normalize it."""
    x = _as_features(x)
    n = max(1, math.ceil(math.log2(x.size)))
    norm = np.linalg.norm(x)
    if norm == 0.0:
        raise DegenerateInputError("amplitude encoding of the all-zero vector is undefined")
    amps = np.zeros(1 << n, dtype=complex)
    amps[: x.size] = x / norm
    return amps


def encode(spec: FeatureMapSpec, x) -> StateVector:
    x = _as_features(x)
    n = required_qubits(spec, x.size)
    if spec.family is Family.AMPLITUDE:
        return StateVector(n, amplitude_vector(x))
    amps = np.array(init_zero(n).amplitudes)
    for gate in circuit_for(spec, x):
        apply_gate_inplace(amps, n, gate)
    return StateVector(n, amps)


def encode_many(spec: FeatureMapSpec, X) -> np.ndarray:
    """Encode each row of ``X``; returns a (rows, 2**n) complex array."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] == 0:
        raise ShapeError(f"expected a non-empty 2-D array of feature vectors, got shape {X.shape}")
    return np.stack([encode(spec, row).amplitudes for row in X])
