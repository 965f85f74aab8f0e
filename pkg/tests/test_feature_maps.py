import math

import numpy as np
import pytest

from qsvm_kernels.errors import DegenerateInputError, UnsupportedFamilyError
from qsvm_kernels.feature_maps import (
    BENCHMARK_MAPS,
    Family,
    FeatureMapSpec,
    circuit_for,
    encode,
    required_qubits,
)
from qsvm_kernels.statevector import GateKind, GateSpec, init_zero

import oracles

GATE_FAMILIES = [f for f in Family if f is not Family.AMPLITUDE]


def fidelity(a, b):
    return abs(np.vdot(a, b)) ** 2


@pytest.mark.parametrize(
    "family, d, expected",
    [
        (Family.ANGLE_X, 5, 5),
        (Family.ZZ_FEATURE, 5, 5),
        (Family.AMPLITUDE, 5, 3),
        (Family.AMPLITUDE, 8, 3),
        (Family.AMPLITUDE, 9, 4),
        (Family.AMPLITUDE, 1, 1),
        (Family.AMPLITUDE, 2, 1),
    ],
)
def test_required_qubits(family, d, expected):
    assert required_qubits(FeatureMapSpec(family), d) == expected


def test_spec_parsing_and_validation():
    assert FeatureMapSpec("zz_feature", 2).family is Family.ZZ_FEATURE
    with pytest.raises(UnsupportedFamilyError):
        FeatureMapSpec("IQP")
    with pytest.raises(ValueError):
        FeatureMapSpec(Family.ANGLE_X, repetitions=0)
    spec = FeatureMapSpec(Family.Z_FEATURE, 2, 1.5)
    assert FeatureMapSpec.from_dict(spec.to_dict()) == spec


def test_benchmark_map_repetitions():
    reps = {s.family: s.repetitions for s in BENCHMARK_MAPS}
    assert len(BENCHMARK_MAPS) == 9
    assert reps[Family.Z_FEATURE] == reps[Family.ZZ_FEATURE] == 2
    assert all(r == 1 for f, r in reps.items() if f not in (Family.Z_FEATURE, Family.ZZ_FEATURE))


def test_angle_x_gate_list():
    gates = circuit_for(FeatureMapSpec(Family.ANGLE_X), [0.25, 0.5])
    assert gates == [
        GateSpec(GateKind.RX, 0, angle=math.pi / 4),
        GateSpec(GateKind.RX, 1, angle=math.pi / 2),
    ]


def test_param_y_cy_layer_structure():
    gates = circuit_for(FeatureMapSpec(Family.PARAM_Y_CY), [0.1, 0.2, 0.3])
    assert [(g.kind, g.control, g.target) for g in gates] == [
        (GateKind.RY, None, 0),
        (GateKind.RY, None, 1),
        (GateKind.RY, None, 2),
        (GateKind.CY, 0, 1),
        (GateKind.CY, 1, 2),
    ]


def test_repetitions_concatenate_layers():
    x = [0.3, 0.6, 0.9]
    one = circuit_for(FeatureMapSpec(Family.Z_FEATURE, 1), x)
    two = circuit_for(FeatureMapSpec(Family.Z_FEATURE, 2), x)
    assert two == one + one
    assert sum(g.kind is GateKind.H for g in two) == 6


def test_amplitude_has_no_circuit():
    with pytest.raises(UnsupportedFamilyError):
        circuit_for(FeatureMapSpec(Family.AMPLITUDE), [0.1, 0.2])


@pytest.mark.parametrize("reps", [1, 2])
@pytest.mark.parametrize("x", [[0.0, 0.0], [0.2, 0.7], [0.9, 0.4, 0.55]])
def test_zz_map_matches_dense_exponential(x, reps):
    got = encode(FeatureMapSpec(Family.ZZ_FEATURE, reps), x).amplitudes
    want = oracles.pauli_feature_unitary(x, reps)[:, 0]
    np.testing.assert_allclose(got, want, atol=1e-10)


@pytest.mark.parametrize("reps", [1, 2])
def test_z_map_matches_dense_exponential(reps):
    rng = np.random.default_rng(5)
    for _ in range(5):
        x = rng.uniform(size=4)
        got = encode(FeatureMapSpec(Family.Z_FEATURE, reps), x).amplitudes
        want = oracles.pauli_feature_unitary(x, reps, pairs=False)[:, 0]
        np.testing.assert_allclose(got, want, atol=1e-10)


@pytest.mark.parametrize(
    "family, rotation, entangler",
    [
        (Family.PARAM_X_CX, oracles.rx, oracles.X),
        (Family.PARAM_Y_CY, oracles.ry, oracles.Y),
        (Family.PARAM_Z_CZ, oracles.rz, oracles.Z),
    ],
)
@pytest.mark.parametrize("reps", [1, 2])
def test_param_maps_match_dense_circuit(family, rotation, entangler, reps):
    rng = np.random.default_rng(11)
    x = rng.uniform(size=3)
    got = encode(FeatureMapSpec(family, reps), x).amplitudes
    want = oracles.param_circuit_unitary(x, rotation, entangler, reps)[:, 0]
    np.testing.assert_allclose(got, want, atol=1e-10)


def test_encode_examples():
    np.testing.assert_array_equal(encode(FeatureMapSpec(Family.ANGLE_X), [0.0]).amplitudes, [1, 0])
    np.testing.assert_allclose(encode(FeatureMapSpec(Family.AMPLITUDE), [3, 4]).amplitudes, [0.6, 0.8])
    padded = encode(FeatureMapSpec(Family.AMPLITUDE), [1, 1, 1, 1, 1]).amplitudes
    np.testing.assert_allclose(padded, np.r_[np.ones(5), np.zeros(3)] / np.sqrt(5))


def test_amplitude_zero_vector_rejected():
    with pytest.raises(DegenerateInputError):
        encode(FeatureMapSpec(Family.AMPLITUDE), [0.0, 0.0, 0.0])


@pytest.mark.parametrize("family", [Family.ANGLE_Z, Family.PARAM_Z_CZ])
def test_z_rotations_only_add_phase(family):
    rng = np.random.default_rng(2)
    zero = init_zero(4).amplitudes
    for _ in range(50):
        state = encode(FeatureMapSpec(family), rng.uniform(size=4)).amplitudes
        assert abs(fidelity(zero, state) - 1) < 1e-12


@pytest.mark.parametrize("spec", BENCHMARK_MAPS, ids=lambda s: s.name)
def test_encode_is_deterministic_and_normalized(spec):
    x = np.random.default_rng(9).uniform(size=5)
    a, b = encode(spec, x).amplitudes, encode(spec, x).amplitudes
    assert a.tobytes() == b.tobytes()
    assert abs(np.linalg.norm(a) - 1) < 1e-10


@pytest.mark.parametrize("family", [Family.ANGLE_X, Family.ANGLE_Y])
def test_angle_map_closed_form(family):
    rng = np.random.default_rng(21)
    spec = FeatureMapSpec(family)
    worst = 0.0
    for _ in range(500):
        d = int(rng.integers(1, 7))
        x, x2 = rng.uniform(size=d), rng.uniform(size=d)
        exact = np.prod(np.cos(np.pi * (x - x2) / 2) ** 2)
        got = fidelity(encode(spec, x).amplitudes, encode(spec, x2).amplitudes)
        worst = max(worst, abs(got - exact))
    assert worst < 1e-10


def test_amplitude_map_closed_form():
    rng = np.random.default_rng(22)
    spec = FeatureMapSpec(Family.AMPLITUDE)
    for _ in range(500):
        d = int(rng.integers(1, 9))
        x, x2 = rng.uniform(size=d), rng.uniform(size=d)
        exact = (x @ x2) ** 2 / ((x @ x) * (x2 @ x2))
        got = fidelity(encode(spec, x).amplitudes, encode(spec, x2).amplitudes)
        assert abs(got - exact) < 1e-10


def test_param_layer_fidelity_equals_angle_layer_for_one_repetition():
    # A fixed entangling chain after the data layer cancels in the overlap.
    rng = np.random.default_rng(4)
    for _ in range(50):
        x, x2 = rng.uniform(size=4), rng.uniform(size=4)
        a = fidelity(encode(FeatureMapSpec(Family.PARAM_X_CX), x).amplitudes,
                     encode(FeatureMapSpec(Family.PARAM_X_CX), x2).amplitudes)
        b = fidelity(encode(FeatureMapSpec(Family.ANGLE_X), x).amplitudes,
                     encode(FeatureMapSpec(Family.ANGLE_X), x2).amplitudes)
        assert abs(a - b) < 1e-12


def test_zz_map_entangles_two_qubits():
    rng = np.random.default_rng(8)
    for _ in range(20):
        x = rng.uniform(size=2)
        for reps in (1, 2):
            amps = encode(FeatureMapSpec(Family.ZZ_FEATURE, reps), x).amplitudes
            # Rows index qubit 1, columns qubit 0.
            singular = np.linalg.svd(amps.reshape(2, 2), compute_uv=False)
            assert np.sum(singular > 1e-8) == 2


def test_z_map_is_a_product_state():
    amps = encode(FeatureMapSpec(Family.Z_FEATURE, 2), [0.3, 0.8]).amplitudes
    singular = np.linalg.svd(amps.reshape(2, 2), compute_uv=False)
    assert singular[1] < 1e-10


def test_angle_scale_is_configurable():
    spec = FeatureMapSpec(Family.ANGLE_Y, angle_scale=math.pi / 2)
    a = encode(spec, [0.0]).amplitudes
    b = encode(spec, [1.0]).amplitudes
    assert abs(fidelity(a, b) - math.cos(math.pi / 4) ** 2) < 1e-12
