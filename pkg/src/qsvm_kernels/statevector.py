"""Dense pure-state simulation for small qubit registers.

Amplitudes live in a flat complex array indexed by the binary encoding of
the computational basis state, with qubit 0 as the least-significant bit:
basis index ``i`` has qubit ``q`` in state ``(i >> q) & 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .errors import CapacityError, QubitIndexError, ShapeError

MAX_QUBITS = 24

_SQRT1_2 = 1.0 / np.sqrt(2.0)


class GateKind(str, Enum):
    RX = "RX"
    RY = "RY"
    RZ = "RZ"
    H = "H"
    CX = "CX"
    CY = "CY"
    CZ = "CZ"
    CPHASE = "CPHASE"


_ROTATIONS = {GateKind.RX, GateKind.RY, GateKind.RZ}
_CONTROLLED = {GateKind.CX, GateKind.CY, GateKind.CZ, GateKind.CPHASE}
_ANGLED = _ROTATIONS | {GateKind.CPHASE}


@dataclass(frozen=True)
class GateSpec:
    """One gate: kind, target qubit, optional control qubit and angle (radians)."""

    kind: GateKind
    target: int
    control: Optional[int] = None
    angle: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", GateKind(self.kind))
        if self.target < 0:
            raise QubitIndexError(f"negative target qubit {self.target}")
        if self.kind in _CONTROLLED:
            if self.control is None:
                raise ValueError(f"{self.kind.value} requires a control qubit")
            if self.control < 0:
                raise QubitIndexError(f"negative control qubit {self.control}")
            if self.control == self.target:
                raise QubitIndexError("control and target must differ")
        elif self.control is not None:
            raise ValueError(f"{self.kind.value} takes no control qubit")
        if self.kind in _ANGLED:
            if self.angle is None:
                raise ValueError(f"{self.kind.value} requires an angle")
        elif self.angle is not None:
            raise ValueError(f"{self.kind.value} takes no angle")

    def matrix(self) -> np.ndarray:
        """The 2x2 matrix acting on the target (for controlled gates: when control is 1)."""
        return gate_matrix(self.kind, self.angle)


def gate_matrix(kind: GateKind, angle: Optional[float] = None) -> np.ndarray:
    kind = GateKind(kind)
    if kind is GateKind.RX:
        c, s = np.cos(angle / 2), np.sin(angle / 2)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if kind is GateKind.RY:
        c, s = np.cos(angle / 2), np.sin(angle / 2)
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind is GateKind.RZ:
        return np.array([[np.exp(-0.5j * angle), 0], [0, np.exp(0.5j * angle)]], dtype=complex)
    if kind is GateKind.H:
        return np.array([[_SQRT1_2, _SQRT1_2], [_SQRT1_2, -_SQRT1_2]], dtype=complex)
    if kind is GateKind.CX:
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if kind is GateKind.CY:
        return np.array([[0, -1j], [1j, 0]], dtype=complex)
    if kind is GateKind.CZ:
        return np.array([[1, 0], [0, -1]], dtype=complex)
    if kind is GateKind.CPHASE:
        return np.array([[1, 0], [0, np.exp(1j * angle)]], dtype=complex)
    raise ValueError(f"unknown gate kind {kind!r}")


@dataclass(frozen=True, eq=False)
class StateVector:
    n_qubits: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (1 << self.n_qubits,):
            raise ShapeError(
                f"{self.n_qubits} qubits need {1 << self.n_qubits} amplitudes, got shape {amps.shape}"
            )
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def _check_width(n_qubits: int, max_qubits: int = MAX_QUBITS) -> None:
    if not 1 <= n_qubits <= max_qubits:
        raise CapacityError(f"n_qubits must be in [1, {max_qubits}], got {n_qubits}")


def init_zero(n_qubits: int, max_qubits: int = MAX_QUBITS) -> StateVector:
    """Return |0...0> on ``n_qubits`` qubits."""
    _check_width(n_qubits, max_qubits)
    amps = np.zeros(1 << n_qubits, dtype=complex)
    amps[0] = 1.0
    return StateVector(n_qubits, amps)


def apply_gate_inplace(amps: np.ndarray, n_qubits: int, gate: GateSpec) -> None:
    """Apply ``gate`` to a writable amplitude buffer without building a full matrix.

    The buffer is viewed as ``(high, 2, low)`` blocks around the target bit so
    each 2x2 update touches strided amplitude pairs. For controlled gates only
    the slice with the control bit set is updated.
    """
    if gate.target >= n_qubits:
        raise QubitIndexError(f"target {gate.target} out of range for {n_qubits} qubits")
    if gate.control is not None and gate.control >= n_qubits:
        raise QubitIndexError(f"control {gate.control} out of range for {n_qubits} qubits")

    m = gate.matrix()
    # Axis k of the (2,)*n view is qubit n-1-k.
    psi = amps.reshape((2,) * n_qubits)
    if gate.control is not None:
        idx = [slice(None)] * n_qubits
        idx[n_qubits - 1 - gate.control] = 1
        sub = psi[tuple(idx)]
        t_axis = n_qubits - 1 - gate.target
        if gate.target > gate.control:
            t_axis_sub = t_axis
        else:
            t_axis_sub = t_axis - 1
        _apply_2x2(sub, m, t_axis_sub)
    else:
        _apply_2x2(psi, m, n_qubits - 1 - gate.target)


def _apply_2x2(psi: np.ndarray, m: np.ndarray, axis: int) -> None:
    lo = [slice(None)] * psi.ndim
    hi = [slice(None)] * psi.ndim
    lo[axis] = 0
    hi[axis] = 1
    lo, hi = tuple(lo), tuple(hi)
    a0 = psi[lo].copy()
    a1 = psi[hi]
    # Diagonal gates skip the mixing term, which keeps phase-only states exact.
    if m[0, 1] == 0 and m[1, 0] == 0:
        psi[lo] = m[0, 0] * a0
        psi[hi] = m[1, 1] * a1
        return
    new1 = m[1, 0] * a0 + m[1, 1] * a1
    psi[lo] = m[0, 0] * a0 + m[0, 1] * a1
    psi[hi] = new1


def apply_gate(state: StateVector, gate: GateSpec) -> StateVector:
    """Return a new state with ``gate`` applied; ``state`` is left untouched."""
    amps = np.array(state.amplitudes, dtype=complex)
    apply_gate_inplace(amps, state.n_qubits, gate)
    return StateVector(state.n_qubits, amps)


def apply_circuit(state: StateVector, gates) -> StateVector:
    amps = np.array(state.amplitudes, dtype=complex)
    for gate in gates:
        apply_gate_inplace(amps, state.n_qubits, gate)
    return StateVector(state.n_qubits, amps)


def inner_product(a: StateVector, b: StateVector) -> complex:
    """<a|b> = sum_i conj(a_i) b_i."""
    if a.n_qubits != b.n_qubits:
        raise ShapeError(f"qubit counts differ: {a.n_qubits} vs {b.n_qubits}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))
