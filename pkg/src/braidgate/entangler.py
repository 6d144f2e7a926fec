"""Permutation-phase entanglers.

The m-qubit entangler R has one nonzero per row: R[i, sigma(i)] = alpha_{label(i)},
where sigma fixes the corner indices 0 and 2^m - 1 and reverses every other
index (sigma(i) = 2^m - 1 - i). The phase is attached to the output label, so
R applied to (|1> + |2>)^{(x) m} gives sum_k alpha_k |k>. For m = 2 this is
exactly the 4x4 two-qubit R with its printed action R|12> = alpha_21 |21>.

Phase gate and swap: R = tau @ P with tau = diag(alpha) and P the permutation
matrix of sigma, so R @ P = tau as well (sigma is an involution).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .braid import TwoStrandOperator
from .qstate import PureState

UNIT_MODULUS_TOL = 1e-9
MAX_DENSE_QUBITS = 12


class NonUnitaryPhaseError(ValueError):
    pass


def _check_unit_moduli(values: np.ndarray, what: str = "phase"):
    bad = np.abs(np.abs(values) - 1.0) > UNIT_MODULUS_TOL
    if np.any(bad):
        i = int(np.flatnonzero(bad)[0])
        raise NonUnitaryPhaseError(
            f"{what} at index {i} has modulus {abs(values[i]):.6g}, expected 1 within {UNIT_MODULUS_TOL}"
        )


def _check_dense_size(m: int):
    if m > MAX_DENSE_QUBITS:
        raise ValueError(f"dense export is limited to {MAX_DENSE_QUBITS} qubits, got {m}")


@dataclass(frozen=True, eq=False)
class PhaseVector:
    """The 2^m parameters alpha_{k1..km} in standard index order.

    ``unitary_grade`` vectors have every |alpha| = 1 (checked on construction);
    raw vectors accept any complex values.
    """

    qubit_count: int
    phases: np.ndarray
    unitary_grade: bool = True

    def __post_init__(self):
        m = int(self.qubit_count)
        if m < 1:
            raise ValueError(f"qubit_count must be positive, got {m}")
        phases = np.array(self.phases, dtype=np.complex128).reshape(-1)
        if phases.size != 2**m:
            raise ValueError(f"{m} qubits need {2**m} phases, got {phases.size}")
        if self.unitary_grade:
            _check_unit_moduli(phases)
        phases.flags.writeable = False
        object.__setattr__(self, "qubit_count", m)
        object.__setattr__(self, "phases", phases)

    @classmethod
    def from_angles(cls, angles) -> PhaseVector:
        angles = np.asarray(angles, dtype=np.float64).reshape(-1)
        m = angles.size.bit_length() - 1
        return cls(m, np.exp(1j * angles))

    @classmethod
    def from_values(cls, values, unitary_grade: bool = True) -> PhaseVector:
        values = np.asarray(values, dtype=np.complex128).reshape(-1)
        m = values.size.bit_length() - 1
        if values.size < 2 or 2**m != values.size:
            raise ValueError(f"phase count must be a power of two >= 2, got {values.size}")
        return cls(m, values, unitary_grade)


def corner_swap_permutation(m: int) -> np.ndarray:
    """sigma as an index array: corners fixed, everything else reversed."""
    n = 2**m
    sigma = np.arange(n - 1, -1, -1, dtype=np.intp)
    sigma[0] = 0
    sigma[-1] = n - 1
    return sigma


@dataclass(frozen=True, eq=False)
class EntanglerOperator:
    """Sparse form: row i holds ``values[i]`` in column ``columns[i]``."""

    qubit_count: int
    columns: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        n = 2**self.qubit_count
        columns = np.asarray(self.columns, dtype=np.intp)
        values = np.asarray(self.values, dtype=np.complex128)
        if columns.shape != (n,) or values.shape != (n,):
            raise ValueError(f"expected {n} columns and values")
        columns.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "values", values)

    @property
    def dim(self) -> int:
        return 2**self.qubit_count

    @property
    def corner_phases(self) -> tuple[complex, complex]:
        return complex(self.values[0]), complex(self.values[-1])

    @property
    def body_phases(self) -> np.ndarray:
        return self.values[1:-1]

    def entries(self) -> list[tuple[int, int, complex]]:
        return [(i, int(c), complex(v)) for i, (c, v) in enumerate(zip(self.columns, self.values))]

    def to_dense(self) -> np.ndarray:
        _check_dense_size(self.qubit_count)
        dense = np.zeros((self.dim, self.dim), dtype=np.complex128)
        dense[np.arange(self.dim), self.columns] = self.values
        return dense

    def diagonal_part(self) -> np.ndarray:
        """R^d: the two corner entries."""
        _check_dense_size(self.qubit_count)
        dense = np.zeros((self.dim, self.dim), dtype=np.complex128)
        dense[0, 0] = self.values[0]
        dense[-1, -1] = self.values[-1]
        return dense

    def antidiagonal_part(self) -> np.ndarray:
        """R^ad: every non-corner entry, all lying on the anti-diagonal."""
        dense = self.to_dense()
        dense[0, 0] = 0
        dense[-1, -1] = 0
        return dense


def two_qubit_r(a11: complex, a12: complex, a21: complex, a22: complex, gate: bool = True) -> TwoStrandOperator:
    """The 4x4 Yang-Baxter operator with R|12> = a21|21> and R|21> = a12|12>."""
    values = np.array([a11, a12, a21, a22], dtype=np.complex128)
    if gate:
        _check_unit_moduli(values)
    mat = np.zeros((4, 4), dtype=np.complex128)
    mat[0, 0] = a11
    mat[1, 2] = a12
    mat[2, 1] = a21
    mat[3, 3] = a22
    return TwoStrandOperator(2, mat)


def swap_p(m: int) -> np.ndarray:
    """Permutation matrix of sigma; for m = 2 the ordinary swap gate."""
    if m < 2:
        raise ValueError(f"swap_p needs m >= 2, got {m}")
    _check_dense_size(m)
    n = 2**m
    p = np.zeros((n, n), dtype=np.complex128)
    p[np.arange(n), corner_swap_permutation(m)] = 1.0
    return p


def multi_qubit_r(phases: PhaseVector, gate: bool = True) -> EntanglerOperator:
    """Entangler with R[i, sigma(i)] = alpha_{label(i)}.

    ``gate=False`` skips the unit-modulus requirement so residuals of
    non-unitary parameter choices can be inspected.
    """
    if phases.qubit_count < 2:
        raise ValueError("the entangler needs at least 2 qubits")
    if gate and not phases.unitary_grade:
        _check_unit_moduli(phases.phases)
    return EntanglerOperator(phases.qubit_count, corner_swap_permutation(phases.qubit_count), phases.phases)


def phase_gate_tau(R: EntanglerOperator) -> np.ndarray:
    """tau = R @ P, built from the sparse form: diagonal with alpha_{label(i)} at (i, i)."""
    _check_dense_size(R.qubit_count)
    sigma = corner_swap_permutation(R.qubit_count)
    # (R P)[i, j] = R[i, c_i] * P[c_i, j], nonzero at j = sigma(c_i)
    tau = np.zeros((R.dim, R.dim), dtype=np.complex128)
    tau[np.arange(R.dim), sigma[R.columns]] = R.values
    return tau


def r_from_m(M) -> TwoStrandOperator:
    """R[(k,l),(r,s)] = M[k,l] if k == s and l == r, i.e. R e_(l,k) = M[k,l] e_(k,l).

    With M = [[a11, a12], [a21, a22]] this is exactly two_qubit_r(a11, a12, a21, a22).
    """
    M = np.asarray(M, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"M must be square, got shape {M.shape}")
    n = M.shape[0]
    R = np.zeros((n * n, n * n), dtype=np.complex128)
    k, l = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    R[(n * k + l).ravel(), (n * l + k).ravel()] = M.ravel()
    return TwoStrandOperator(n, R)


def apply(R: EntanglerOperator, s: PureState) -> PureState:
    """out[i] = alpha_{label(i)} * s[sigma(i)] in O(2^m)."""
    if R.qubit_count != s.qubit_count:
        raise ValueError(f"operator acts on {R.qubit_count} qubits, state has {s.qubit_count}")
    return PureState(s.qubit_count, R.values * s.amplitudes[R.columns])


def unitarity_residual(op) -> float:
    """||op^dagger op - I||_F. Sparse entanglers are handled without densifying."""
    if isinstance(op, EntanglerOperator):
        if np.unique(op.columns).size != op.dim:
            return float(np.linalg.norm(op.to_dense().conj().T @ op.to_dense() - np.eye(op.dim)))
        # one nonzero per row and column: op^dagger op is diag(|values|^2)
        return float(np.linalg.norm(np.abs(op.values) ** 2 - 1.0))
    mat = op.matrix if isinstance(op, TwoStrandOperator) else np.asarray(op, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    return float(np.linalg.norm(mat.conj().T @ mat - np.eye(mat.shape[0])))
