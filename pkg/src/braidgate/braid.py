"""Braid group representations from a two-strand operator R.

tau(b_i) acts as R on tensor factors i, i+1 of V^{(x) n} and as the identity
elsewhere. Residuals are Frobenius norms; a zero residual certifies the
relation numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# dense operators on V^{(x) n} are limited to 2**12 rows
MAX_DENSE_DIM = 2**12


@dataclass(frozen=True, eq=False)
class TwoStrandOperator:
    """An operator on V (x) V with dim V = local_dim."""

    local_dim: int
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=np.complex128)
        n = int(self.local_dim)
        if n < 1 or mat.shape != (n * n, n * n):
            raise ValueError(f"matrix shape {mat.shape} does not act on V(x)V with dim V = {n}")
        mat.flags.writeable = False
        object.__setattr__(self, "local_dim", n)
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def from_matrix(cls, matrix) -> TwoStrandOperator:
        mat = np.asarray(matrix, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {mat.shape}")
        n = math.isqrt(mat.shape[0])
        if n * n != mat.shape[0]:
            raise ValueError(f"side {mat.shape[0]} is not a perfect square")
        return cls(n, mat)

    def inverse(self) -> TwoStrandOperator:
        return TwoStrandOperator(self.local_dim, _checked_inverse(self.matrix))


@dataclass(frozen=True)
class BraidWord:
    """Letters (i, +1) for b_i and (i, -1) for its inverse, applied left to right."""

    strand_count: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strand_count < 2:
            raise ValueError("a braid needs at least 2 strands")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 1 <= i <= self.strand_count - 1:
                raise ValueError(f"generator b_{i} out of range for {self.strand_count} strands")
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, strand_count: int, text: str) -> BraidWord:
        """Parse a whitespace separated word such as ``"1 -2 1"``."""
        letters = []
        for tok in text.split():
            g = int(tok)
            if g == 0:
                raise ValueError("generator index 0 is not valid")
            letters.append((abs(g), 1 if g > 0 else -1))
        return cls(strand_count, tuple(letters))


def _as_two_strand(R) -> TwoStrandOperator:
    if isinstance(R, TwoStrandOperator):
        return R
    return TwoStrandOperator.from_matrix(R)


def _checked_inverse(mat: np.ndarray) -> np.ndarray:
    eye = np.eye(mat.shape[0])
    if np.linalg.norm(mat.conj().T @ mat - eye) < 1e-8:
        return mat.conj().T
    sv = np.linalg.svd(mat, compute_uv=False)
    if sv[-1] <= 1e-10 * sv[0]:
        raise np.linalg.LinAlgError("R is not invertible")
    return np.linalg.inv(mat)


def _check_size(n: int, n_strands: int):
    if n**n_strands > MAX_DENSE_DIM:
        raise ValueError(
            f"{n_strands} strands of dimension {n} exceed the dense limit of {MAX_DENSE_DIM} rows"
        )


def ybe_residual(R) -> float:
    """||(R(x)I)(I(x)R)(R(x)I) - (I(x)R)(R(x)I)(I(x)R)||_F on V(x)V(x)V."""
    R = _as_two_strand(R)
    eye = np.eye(R.local_dim)
    left = np.kron(R.matrix, eye)
    right = np.kron(eye, R.matrix)
    lhs = left @ right @ left
    rhs = right @ left @ right
    return float(np.linalg.norm(lhs - rhs))


def tau_generator(R, i: int, n_strands: int) -> np.ndarray:
    R = _as_two_strand(R)
    if n_strands < 2:
        raise ValueError("need at least 2 strands")
    if not 1 <= i <= n_strands - 1:
        raise ValueError(f"generator b_{i} out of range for {n_strands} strands")
    _check_size(R.local_dim, n_strands)
    n = R.local_dim
    before = np.eye(n ** (i - 1))
    after = np.eye(n ** (n_strands - i - 1))
    return np.kron(np.kron(before, R.matrix), after)


def braid_relation_residuals(R, n_strands: int) -> tuple[float, float]:
    """Return (far_commutation, braid) residuals of tau on n_strands strands.

    far_commutation is the max over |i - j| >= 2 of ||[tau(b_i), tau(b_j)]||;
    with fewer than 4 strands there are no such pairs and it is 0.
    """
    R = _as_two_strand(R)
    if n_strands < 3:
        raise ValueError("braid relations need at least 3 strands")
    gens = [tau_generator(R, i, n_strands) for i in range(1, n_strands)]
    far = 0.0
    for a in range(len(gens)):
        for b in range(a + 2, len(gens)):
            far = max(far, float(np.linalg.norm(gens[a] @ gens[b] - gens[b] @ gens[a])))
    braid = 0.0
    for a in range(len(gens) - 1):
        g, h = gens[a], gens[a + 1]
        braid = max(braid, float(np.linalg.norm(g @ h @ g - h @ g @ h)))
    return far, braid


def represent_word(word: BraidWord, R) -> np.ndarray:
    """Matrix of the word; the leftmost letter acts on states first."""
    R = _as_two_strand(R)
    R_inv = R.inverse()
    n_strands = word.strand_count
    _check_size(R.local_dim, n_strands)
    result = np.eye(R.local_dim**n_strands, dtype=np.complex128)
    cache: dict[tuple[int, int], np.ndarray] = {}
    for letter in word.letters:
        if letter not in cache:
            i, e = letter
            cache[letter] = tau_generator(R if e == 1 else R_inv, i, n_strands)
        result = cache[letter] @ result
    return result

