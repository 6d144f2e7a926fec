"""Flattenings, Segre-ideal generators, separability and entanglement measures.

Flattening j arranges the amplitudes as a 2 x 2^(m-1) matrix: row r is the
digit of qubit j, columns run over the remaining qubits in ascending standard
order. Qubit j factors out of the state iff that matrix has rank one, i.e. iff
all of its 2x2 minors vanish. The Segre ideal is generated by the minors of
all m flattenings.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .qstate import Label, PureState, index_to_label

DEFAULT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Flattening:
    qubit_index: int
    matrix: np.ndarray
    column_labels: tuple[Label, ...]


@dataclass(frozen=True)
class DistinctGenerator:
    """A generator a*b - c*d keyed by its two monomials (sorted index pairs).

    ``monomials[0]`` is the lexicographically smaller one and carries the + sign.
    """

    monomials: tuple[tuple[int, int], tuple[int, int]]
    value: complex
    multiplicity: int


@dataclass(eq=False)
class GeneratorReport:
    qubit_count: int
    pairs: np.ndarray  # shape (C(2^(m-1), 2), 2), shared by every flattening
    minors: list[np.ndarray]  # one array per flattening j = 1..m
    distinct: list[DistinctGenerator] = field(default_factory=list)
    max_abs_minor: float = 0.0

    @property
    def raw_count(self) -> int:
        return sum(v.size for v in self.minors)

    def multiplicities(self) -> list[int]:
        return [g.multiplicity for g in self.distinct]

    def to_json(self, measure: float | None = None) -> dict:
        flats = []
        for j, values in enumerate(self.minors, start=1):
            flats.append({
                "j": j,
                "minors": [
                    {"cols": [int(c), int(d)], "re": float(v.real), "im": float(v.imag)}
                    for (c, d), v in zip(self.pairs, values)
                ],
            })
        return {
            "qubits": self.qubit_count,
            "flattenings": flats,
            "distinct": [
                {
                    "monomials": [list(g.monomials[0]), list(g.monomials[1])],
                    "re": g.value.real,
                    "im": g.value.imag,
                    "multiplicity": g.multiplicity,
                }
                for g in self.distinct
            ],
            "max_abs_minor": self.max_abs_minor,
            "measure": measure_from_minors(self.minors) if measure is None else measure,
        }


def _check_j(m: int, j: int):
    if not 1 <= j <= m:
        raise ValueError(f"qubit index {j} out of range 1..{m}")


def flattening_indices(m: int, j: int) -> np.ndarray:
    """Index array of shape (2, 2^(m-1)): entry (r, c) is the state index behind X^j[r, c]."""
    _check_j(m, j)
    grid = np.arange(2**m).reshape((2,) * m)
    return np.moveaxis(grid, j - 1, 0).reshape(2, -1)


def flattening(s: PureState, j: int) -> Flattening:
    m = s.qubit_count
    idx = flattening_indices(m, j)
    labels = tuple(index_to_label(c, m - 1) for c in range(2 ** (m - 1))) if m > 1 else ((),)
    return Flattening(j, s.amplitudes[idx], labels)


def minor_pairs(n_cols: int) -> np.ndarray:
    """Column pairs (c, c') with c < c', lexicographic."""
    a, b = np.triu_indices(n_cols, k=1)
    return np.stack([a, b], axis=1)


def minors_2x2(f: Flattening | np.ndarray) -> np.ndarray:
    """X[0,c] X[1,c'] - X[0,c'] X[1,c] for each lexicographic pair c < c'."""
    mat = f.matrix if isinstance(f, Flattening) else np.asarray(f)
    a, b = np.triu_indices(mat.shape[1], k=1)
    return mat[0, a] * mat[1, b] - mat[0, b] * mat[1, a]


def _monomial_keys(m: int, j: int, pairs: np.ndarray):
    idx = flattening_indices(m, j)
    c, d = pairs[:, 0], pairs[:, 1]
    plus = np.sort(np.stack([idx[0, c], idx[1, d]], axis=1), axis=1)
    minus = np.sort(np.stack([idx[0, d], idx[1, c]], axis=1), axis=1)
    return plus, minus


def segre_generators(s: PureState) -> GeneratorReport:
    """Evaluate all m * C(2^(m-1), 2) flattening minors and collapse duplicates.

    Two minors are the same generator when they share both monomials; the sign
    is normalized so the lexicographically smaller monomial is positive.
    """
    m = s.qubit_count
    if m < 2:
        raise ValueError("Segre generators need at least 2 qubits")
    pairs = minor_pairs(2 ** (m - 1))
    minors = [minors_2x2(flattening(s, j)) for j in range(1, m + 1)]

    counts: Counter = Counter()
    values: dict = {}
    for j in range(1, m + 1):
        plus, minus = _monomial_keys(m, j, pairs)
        for p, q, v in zip(map(tuple, plus), map(tuple, minus), minors[j - 1]):
            key, sign = ((p, q), 1) if p < q else ((q, p), -1)
            counts[key] += 1
            values.setdefault(key, complex(sign * v))
    distinct = [
        DistinctGenerator(((int(k[0][0]), int(k[0][1])), (int(k[1][0]), int(k[1][1]))), values[k], counts[k])
        for k in sorted(counts)
    ]
    max_abs = max(float(np.abs(v).max()) for v in minors)
    return GeneratorReport(m, pairs, minors, distinct, max_abs)


def is_j_separable(s: PureState, j: int, tol: float = DEFAULT_TOL) -> bool:
    """Qubit j factors out: every minor of flattening j is below tol * ||s||^2."""
    mins = minors_2x2(flattening(s, j))
    if mins.size == 0:
        return True
    return bool(np.abs(mins).max() <= tol * s.norm_squared)


def is_fully_separable(s: PureState, tol: float = DEFAULT_TOL) -> bool:
    if s.qubit_count < 2:
        raise ValueError("separability needs at least 2 qubits")
    return all(is_j_separable(s, j, tol) for j in range(1, s.qubit_count + 1))


def concurrence_2q(s: PureState) -> float:
    """2 |a11 a22 - a12 a21| on raw amplitudes; divide by ||s||^2 to normalize."""
    if s.qubit_count != 2:
        raise ValueError(f"concurrence_2q needs 2 qubits, got {s.qubit_count}")
    a11, a12, a21, a22 = s.amplitudes
    return float(2 * abs(a11 * a22 - a12 * a21))


def three_qubit_generators(s: PureState) -> dict[str, complex]:
    """T1..T12 written out term by term.

    T12 is the generator a112 a221 - a122 a211 from the second flattening; the
    commonly printed list repeats T11 in its place.
    """
    if s.qubit_count != 3:
        raise ValueError(f"three-qubit generators need 3 qubits, got {s.qubit_count}")
    a = {index_to_label(i, 3): complex(v) for i, v in enumerate(s.amplitudes)}

    def t(p, q, r, u):
        return a[p] * a[q] - a[r] * a[u]

    return {
        "T1": t((1, 1, 1), (2, 2, 1), (1, 2, 1), (2, 1, 1)),
        "T2": t((1, 1, 2), (2, 2, 2), (1, 2, 2), (2, 1, 2)),
        "T3": t((1, 1, 1), (2, 1, 2), (1, 1, 2), (2, 1, 1)),
        "T4": t((1, 2, 1), (2, 2, 2), (1, 2, 2), (2, 2, 1)),
        "T5": t((1, 1, 1), (1, 2, 2), (1, 1, 2), (1, 2, 1)),
        "T6": t((2, 1, 1), (2, 2, 2), (2, 1, 2), (2, 2, 1)),
        "T7": t((1, 1, 1), (2, 2, 2), (1, 1, 2), (2, 2, 1)),
        "T8": t((1, 1, 1), (2, 2, 2), (1, 2, 1), (2, 1, 2)),
        "T9": t((1, 1, 1), (2, 2, 2), (1, 2, 2), (2, 1, 1)),
        "T10": t((1, 1, 2), (2, 2, 1), (1, 2, 1), (2, 1, 2)),
        "T11": t((1, 2, 1), (2, 1, 2), (1, 2, 2), (2, 1, 1)),
        "T12": t((1, 1, 2), (2, 2, 1), (1, 2, 2), (2, 1, 1)),
    }


def measure_3q(s: PureState) -> float:
    """sqrt(2 sum_{1..6} |T_i|^2 + sum_{7..12} |T_i|^2)."""
    T = three_qubit_generators(s)
    shared = sum(abs(T[f"T{i}"]) ** 2 for i in range(1, 7))
    cross = sum(abs(T[f"T{i}"]) ** 2 for i in range(7, 13))
    return float(np.sqrt(2 * shared + cross))


def measure_from_minors(minors: list[np.ndarray]) -> float:
    return float(np.sqrt(sum(float(np.sum(np.abs(v) ** 2)) for v in minors)))


def measure_mq(s: PureState) -> float:
    """Root of the summed squared minors over all m flattenings.

    Each generator is thereby weighted by the number of flattenings it occurs
    in; for 3 qubits this reproduces measure_3q, for 2 qubits it equals
    concurrence_2q / sqrt(2).
    """
    if s.qubit_count < 2:
        raise ValueError("measure_mq needs at least 2 qubits")
    return measure_from_minors([minors_2x2(flattening(s, j)) for j in range(1, s.qubit_count + 1)])
