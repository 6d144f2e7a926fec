"""Brute-force cross-checks for the separability predicates and the sparse entangler.

Nothing here goes through the minors code in ``segre``: factors are extracted
by projecting flattening rows onto each other and the state is rebuilt from
them, so a verdict from ``try_factor`` is an independent witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .qstate import PureState, index_to_label, label_to_index, product_state


@dataclass(frozen=True)
class FactorizationResult:
    success: bool
    factors: Optional[tuple[PureState, ...]]
    residual: float


@dataclass(frozen=True)
class PeelResult:
    """Qubit j split off as factor (x) environment; residual relative to ||s||."""

    success: bool
    factor: np.ndarray
    environment: np.ndarray
    residual: float


def _rows(s: PureState, j: int) -> np.ndarray:
    # built label by label on purpose, independent of segre.flattening
    m = s.qubit_count
    if not 1 <= j <= m:
        raise ValueError(f"qubit index {j} out of range 1..{m}")
    rows = np.zeros((2, 2 ** (m - 1)), dtype=np.complex128)
    for c in range(2 ** (m - 1)):
        rest = index_to_label(c, m - 1) if m > 1 else ()
        for r in (1, 2):
            rows[r - 1, c] = s.amplitudes[label_to_index(rest[: j - 1] + (r,) + rest[j - 1 :])]
    return rows


def peel_qubit(s: PureState, j: int, tol: float = 1e-10) -> PeelResult:
    """Try to write s = f (x)_j e, with e the larger-norm row of flattening j."""
    if s.norm == 0:
        raise ValueError("cannot factor the zero state")
    rows = _rows(s, j)
    norms = np.linalg.norm(rows, axis=1)
    env = rows[int(np.argmax(norms))]
    coeff = rows @ env.conj() / np.vdot(env, env)
    residual = float(np.linalg.norm(rows - np.outer(coeff, env)) / s.norm)
    return PeelResult(residual <= tol, coeff, env, residual)


def try_factor(s: PureState, tol: float = 1e-10) -> FactorizationResult:
    if s.norm == 0:
        raise ValueError("cannot factor the zero state")
    candidates = [peel_qubit(s, j, tol).factor for j in range(1, s.qubit_count + 1)]
    rebuilt = product_state(candidates).amplitudes
    scale = np.vdot(rebuilt, s.amplitudes) / np.vdot(rebuilt, rebuilt)
    residual = float(np.linalg.norm(s.amplitudes - scale * rebuilt) / s.norm)
    factors = [PureState(1, c) for c in candidates]
    factors[0] = factors[0].scaled(scale)
    success = residual <= tol
    return FactorizationResult(success, tuple(factors) if success else None, residual)


def purity_concurrence_2q(s: PureState) -> float:
    """sqrt(2 (1 - tr rho_1^2)) of the normalized state.

    rho_1 = X X^dagger for the first flattening X, so its eigenvalues are the
    squared singular values of X. With lam_1 + lam_2 = 1 the linear entropy
    1 - tr rho^2 equals 2 lam_1 lam_2; evaluating it that way avoids the
    cancellation of 1 - tr rho^2 near pure reductions.
    """
    if s.qubit_count != 2:
        raise ValueError(f"purity concurrence needs 2 qubits, got {s.qubit_count}")
    rows = _rows(s.normalized(), 1)
    lam = np.linalg.svd(rows, compute_uv=False) ** 2
    linear_entropy = 2 * lam[0] * lam[1]
    return float(np.sqrt(2 * linear_entropy))


def purity_direct(s: PureState) -> float:
    """tr rho_1^2 from the row inner products of the normalized first flattening."""
    rows = _rows(s.normalized(), 1)
    rho = rows @ rows.conj().T
    return float(np.sum(np.abs(rho) ** 2))


def dense_reference_apply(R, s: PureState) -> PureState:
    R = np.asarray(R, dtype=np.complex128)
    if s.qubit_count > 12:
        raise ValueError("dense reference is limited to 12 qubits")
    if R.shape != (s.dim, s.dim):
        raise ValueError(f"matrix shape {R.shape} does not match state dimension {s.dim}")
    return PureState(s.qubit_count, R @ s.amplitudes)


def random_state(m: int, rng: np.random.Generator) -> PureState:
    """Real and imaginary parts independent uniform on [-1, 1]."""
    n = 2**m
    return PureState(m, rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n))


def random_qubit(rng: np.random.Generator) -> PureState:
    return random_state(1, rng)


def random_phases(m: int, rng: np.random.Generator) -> np.ndarray:
    return np.exp(1j * rng.uniform(0, 2 * np.pi, 2**m))
