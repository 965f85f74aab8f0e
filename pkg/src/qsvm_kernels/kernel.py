"""Fidelity kernels |<phi(x)|phi(x')>|^2, exact or shot-sampled."""

from __future__ import annotations

import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import ShapeError
from .feature_maps import FeatureMapSpec, encode_many

# Fidelities this close to 0 or 1 are floating-point noise around an exact
# endpoint (e.g. phase-only states); they are snapped so degenerate kernels
# stay exactly degenerate.
SNAP_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class KernelMatrix:
    entries: np.ndarray
    symmetric: bool = False

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=float)
        if e.ndim != 2:
            raise ShapeError(f"kernel entries must be 2-D, got shape {e.shape}")
        if self.symmetric and e.shape[0] != e.shape[1]:
            raise ShapeError("a symmetric kernel must be square")
        object.__setattr__(self, "entries", e)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def to_csv(self, path=None) -> str:
        """Row-major CSV. First line: ``rows,cols,symmetric`` header; second: their values."""
        buf = io.StringIO()
        buf.write("rows,cols,symmetric\n")
        buf.write(f"{self.rows},{self.cols},{int(self.symmetric)}\n")
        for row in self.entries:
            buf.write(",".join(repr(float(v)) for v in row))
            buf.write("\n")
        text = buf.getvalue()
        if path is not None:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        return text

    @classmethod
    def from_csv(cls, path) -> "KernelMatrix":
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        if not lines or lines[0].strip() != "rows,cols,symmetric":
            raise ShapeError(f"{path}: missing kernel CSV header")
        rows, cols, sym = (int(v) for v in lines[1].split(","))
        body = [line for line in lines[2:] if line.strip()]
        entries = np.array([[float(v) for v in line.split(",")] for line in body], dtype=float)
        if entries.shape != (rows, cols) and not (rows * cols == 0):
            raise ShapeError(f"{path}: header says {rows}x{cols}, body is {entries.shape}")
        return cls(entries.reshape(rows, cols), symmetric=bool(sym))


def _fidelity_rows(a: np.ndarray, B: np.ndarray) -> np.ndarray:
    """|<a|b_j>|^2 for every row b_j of ``B``, clamped and snapped to [0, 1].

    Every kernel value in this module goes through here, so single entries
    and matrix entries are bitwise identical.
    """
    # Fixed left-to-right accumulation: numpy's reductions may reorder sums
    # depending on array shape, which would break bitwise agreement.
    ca = np.conj(a)
    overlaps = np.zeros(B.shape[0], dtype=complex)
    for k in np.flatnonzero(ca):
        overlaps += ca[k] * B[:, k]
    fid = overlaps.real ** 2 + overlaps.imag ** 2
    fid = np.clip(fid, 0.0, 1.0)
    fid[fid > 1.0 - SNAP_TOL] = 1.0
    fid[fid < SNAP_TOL] = 0.0
    return fid


def kernel_entry(spec: FeatureMapSpec, x, x2) -> float:
    x = np.asarray(x, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    if x.shape != x2.shape:
        raise ShapeError(f"feature vectors differ in shape: {x.shape} vs {x2.shape}")
    states = encode_many(spec, np.stack([x, x2]))
    return float(_fidelity_rows(states[0], states[1:2])[0])


def _entry_rng(seed: int, i: int, j: int) -> np.random.Generator:
    return np.random.default_rng([seed & 0xFFFFFFFF, i, j])


def sample_fidelity(p: float, shots: int, rng: np.random.Generator) -> float:
    """Fraction of ``shots`` all-zeros outcomes when each occurs with probability ``p``."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    return rng.binomial(shots, min(max(p, 0.0), 1.0)) / shots


def kernel_entry_sampled(spec: FeatureMapSpec, x, x2, shots: int = 1000, seed: int = 0) -> float:
    """Shot-noise estimate of the fidelity, as measured by the inversion test.

    The all-zeros outcome of U(x)^dagger U(x') |0> has probability equal to the
    exact fidelity on a noise-free device, so a binomial draw on that
    probability is distributionally identical to running the circuit.
    """
    p = kernel_entry(spec, x, x2)
    return sample_fidelity(p, shots, np.random.default_rng(seed))


def _as_rows(A, name: str) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if A.ndim == 1:
        A = A[None, :]
    if A.ndim != 2 or A.shape[0] == 0:
        raise ShapeError(f"{name} must be a non-empty list of feature vectors")
    return A


def _default_workers() -> int:
    return max(1, min(8, os.cpu_count() or 1))


def kernel_matrix(
    spec: FeatureMapSpec,
    A: Sequence,
    B: Optional[Sequence] = None,
    *,
    shots: Optional[int] = None,
    seed: int = 0,
    workers: Optional[int] = None,
) -> KernelMatrix:
    """Gram matrix of ``A`` (``B`` omitted) or cross kernel between ``A`` and ``B``.

    Each vector is encoded exactly once. Rows are filled concurrently; every
    task writes a disjoint set of entries, so the result does not depend on
    scheduling. With ``shots`` set, each entry is replaced by a binomial
    estimate drawn from a generator seeded by ``(seed, i, j)``.
    """
    A = _as_rows(A, "A")
    symmetric = B is None
    if not symmetric:
        B = _as_rows(B, "B")
        if B.shape[1] != A.shape[1]:
            raise ShapeError(f"dimension mismatch: A has {A.shape[1]} features, B has {B.shape[1]}")

    states_a = encode_many(spec, A)
    states_b = states_a if symmetric else encode_many(spec, B)
    n_a, n_b = states_a.shape[0], states_b.shape[0]
    out = np.empty((n_a, n_b), dtype=float)

    def fill_row(i: int) -> None:
        start = i if symmetric else 0
        row = _fidelity_rows(states_a[i], states_b[start:])
        if shots is not None:
            for k, j in enumerate(range(start, n_b)):
                if symmetric and i == j:
                    continue
                row[k] = sample_fidelity(row[k], shots, _entry_rng(seed, i, j))
        out[i, start:] = row

    workers = workers or _default_workers()
    if workers == 1:
        for i in range(n_a):
            fill_row(i)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill_row, range(n_a)))

    if symmetric:
        iu = np.triu_indices(n_a, k=1)
        out[(iu[1], iu[0])] = out[iu]
    return KernelMatrix(out, symmetric=symmetric)
