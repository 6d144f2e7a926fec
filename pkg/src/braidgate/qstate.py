"""Pure multi-qubit states as amplitude vectors.

Basis labels use the digits {1, 2}: digit 1 is bit 0, digit 2 is bit 1, and
the first qubit is the most significant bit. So the label (1, 1, 2) is index 1
and (2, 2, 1) is index 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

Label = tuple[int, ...]


class InvalidLabelError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class PureState:
    """Amplitudes of an m-qubit pure state, not necessarily normalized."""

    qubit_count: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if int(self.qubit_count) < 1:
            raise ValueError(f"qubit_count must be positive, got {self.qubit_count}")
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size != 2**self.qubit_count:
            raise ValueError(
                f"{self.qubit_count} qubits need {2**self.qubit_count} amplitudes, got {amps.size}"
            )
        amps.flags.writeable = False
        object.__setattr__(self, "qubit_count", int(self.qubit_count))
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amplitudes) -> PureState:
        amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        m = amps.size.bit_length() - 1
        if amps.size < 2 or 2**m != amps.size:
            raise ValueError(f"amplitude count must be a power of two >= 2, got {amps.size}")
        return cls(m, amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared))

    def normalized(self) -> PureState:
        n = self.norm
        if n == 0:
            raise ValueError("cannot normalize the zero state")
        return PureState(self.qubit_count, self.amplitudes / n)

    def scaled(self, factor: complex) -> PureState:
        return PureState(self.qubit_count, self.amplitudes * factor)

    def amplitude(self, label: Sequence[int]) -> complex:
        if len(label) != self.qubit_count:
            raise InvalidLabelError(f"label {tuple(label)} has wrong length for {self.qubit_count} qubits")
        return complex(self.amplitudes[label_to_index(label)])

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to shape (2,) * m, axis j-1 being qubit j."""
        return self.amplitudes.reshape((2,) * self.qubit_count)

    def __repr__(self):
        return f"PureState(qubit_count={self.qubit_count}, amplitudes={self.amplitudes!r})"


def label_to_index(label: Sequence[int]) -> int:
    index = 0
    for digit in label:
        if digit not in (1, 2):
            raise InvalidLabelError(f"label digits must be 1 or 2, got {tuple(label)}")
        index = 2 * index + (digit - 1)
    return index


def index_to_label(i: int, m: int) -> Label:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if not 0 <= i < 2**m:
        raise InvalidLabelError(f"index {i} out of range for {m} qubits")
    return tuple(((i >> (m - 1 - j)) & 1) + 1 for j in range(m))


def all_labels(m: int) -> list[Label]:
    return [index_to_label(i, m) for i in range(2**m)]


def basis_state(label: Sequence[int]) -> PureState:
    m = len(label)
    amps = np.zeros(2**m, dtype=np.complex128)
    amps[label_to_index(label)] = 1.0
    return PureState(m, amps)


def tensor_product(a: PureState, b: PureState) -> PureState:
    return PureState(a.qubit_count + b.qubit_count, np.kron(a.amplitudes, b.amplitudes))


def product_state(factors: Iterable[PureState | Sequence[complex]]) -> PureState:
    """Segre embedding of single-qubit factors: amplitude at (k1..km) is the product of factor amplitudes."""
    states = []
    for f in factors:
        f = f if isinstance(f, PureState) else PureState(1, f)
        if f.qubit_count != 1:
            raise ValueError(f"product_state factors must be single qubits, got {f.qubit_count} qubits")
        states.append(f)
    if not states:
        raise ValueError("product_state needs at least one factor")
    return reduce(tensor_product, states)


def proportional(a: PureState, b: PureState, tol: float = 1e-10) -> bool:
    """True when a = lam * b for some nonzero lam, up to tol relative to the larger norm."""
    if a.qubit_count != b.qubit_count:
        raise ValueError("states have different qubit counts")
    na, nb = a.norm, b.norm
    if na == 0 or nb == 0:
        return na == nb
    k = int(np.argmax(np.abs(b.amplitudes)))
    lam = a.amplitudes[k] / b.amplitudes[k]
    return bool(np.linalg.norm(a.amplitudes - lam * b.amplitudes) <= tol * max(na, nb))


def uniform_product(m: int) -> PureState:
    """(|1> + |2>)^{(x) m}, unnormalized."""
    return PureState(m, np.ones(2**m, dtype=np.complex128))


def ghz_state(m: int) -> PureState:
    if m < 2:
        raise ValueError("GHZ state needs at least 2 qubits")
    amps = np.zeros(2**m, dtype=np.complex128)
    amps[0] = amps[-1] = 1 / np.sqrt(2)
    return PureState(m, amps)


def w_state(m: int) -> PureState:
    """Equal superposition of the labels with exactly one digit 2."""
    if m < 2:
        raise ValueError("W state needs at least 2 qubits")
    amps = np.zeros(2**m, dtype=np.complex128)
    amps[[1 << k for k in range(m)]] = 1 / np.sqrt(m)
    return PureState(m, amps)
