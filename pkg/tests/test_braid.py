import numpy as np
import pytest

from braidgate.braid import (
    BraidWord,
    TwoStrandOperator,
    braid_relation_residuals,
    represent_word,
    tau_generator,
    ybe_residual,
)
from braidgate.entangler import r_from_m, two_qubit_r, unitarity_residual
from braidgate.oracle import random_phases


def kron_by_index(a, b):
    # explicit (i1 i2, j1 j2) indexing, independent of np.kron
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.zeros((ra * rb, ca * cb), dtype=complex)
    for i1 in range(ra):
        for j1 in range(ca):
            for i2 in range(rb):
                for j2 in range(cb):
                    out[i1 * rb + i2, j1 * cb + j2] = a[i1, j1] * b[i2, j2]
    return out


def ybe_by_hand(R, n=2):
    eye = np.eye(n)
    A = kron_by_index(R, eye)
    B = kron_by_index(eye, R)
    return np.linalg.norm(A @ B @ A - B @ A @ B)


def random_unitary(n, rng):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_eq9_r(rng):
    return two_qubit_r(*random_phases(2, rng))


def test_identity_solves_ybe():
    assert ybe_residual(np.eye(4)) == 0.0


def test_swap_like_r_solves_ybe():
    R = two_qubit_r(1, 1, 1, 1)
    assert ybe_by_hand(R.matrix) == 0.0
    assert ybe_residual(R) == 0.0


@pytest.mark.parametrize("seed", range(20))
def test_eq9_family_solves_ybe(seed):
    R = random_eq9_r(np.random.default_rng(seed))
    assert ybe_residual(R) < 1e-12
    assert ybe_by_hand(R.matrix) < 1e-12


def test_ybe_detects_non_solution(rng):
    R = TwoStrandOperator(2, random_unitary(4, rng))
    assert ybe_residual(R) > 1e-3
    assert ybe_residual(R) == pytest.approx(ybe_by_hand(R.matrix), rel=1e-10)


@pytest.mark.parametrize("seed", range(5))
def test_ybe_residual_invariant_under_unit_scalar(seed):
    rng = np.random.default_rng(seed)
    R = TwoStrandOperator(2, random_unitary(4, rng))
    phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
    assert abs(ybe_residual(R) - ybe_residual(TwoStrandOperator(2, phase * R.matrix))) < 1e-12


def test_from_matrix_requires_square_side():
    with pytest.raises(ValueError):
        TwoStrandOperator.from_matrix(np.eye(8))
    assert TwoStrandOperator.from_matrix(np.eye(9)).local_dim == 3


def test_tau_generator_forms(rng):
    R = random_eq9_r(rng)
    eye = np.eye(2)
    np.testing.assert_array_equal(tau_generator(R, 1, 2), R.matrix)
    np.testing.assert_allclose(tau_generator(R, 1, 3), kron_by_index(R.matrix, eye), atol=0)
    np.testing.assert_allclose(tau_generator(R, 2, 3), kron_by_index(eye, R.matrix), atol=0)


@pytest.mark.parametrize("i", [0, 3])
def test_tau_generator_range(i, rng):
    with pytest.raises(ValueError):
        tau_generator(random_eq9_r(rng), i, 3)


def test_dense_size_limit():
    with pytest.raises(ValueError):
        tau_generator(np.eye(4), 1, 13)


def test_relations_for_identity():
    assert braid_relation_residuals(np.eye(4), 4) == (0.0, 0.0)


def test_braid_residual_matches_ybe_residual(rng):
    R = random_eq9_r(rng)
    far, br = braid_relation_residuals(R, 3)
    assert far == 0.0
    assert br < 1e-12
    # on 3 strands the braid relation is the YBE itself
    bad = TwoStrandOperator(2, random_unitary(4, rng))
    assert braid_relation_residuals(bad, 3)[1] == pytest.approx(ybe_residual(bad), rel=1e-12)


@pytest.mark.parametrize("seed", range(5))
def test_far_commutation_for_any_unitary(seed):
    R = TwoStrandOperator(2, random_unitary(4, np.random.default_rng(seed)))
    far, _ = braid_relation_residuals(R, 4)
    assert far < 1e-12


@pytest.mark.parametrize("n_strands", [3, 4, 5])
def test_ybe_solution_gives_braid_rep(n_strands, rng):
    R = random_eq9_r(rng)
    assert ybe_residual(R) < 1e-12
    far, br = braid_relation_residuals(R, n_strands)
    assert far < 1e-11 and br < 1e-11


def test_relations_need_three_strands():
    with pytest.raises(ValueError):
        braid_relation_residuals(np.eye(4), 2)


def test_represent_word_basics(rng):
    R = random_eq9_r(rng)
    np.testing.assert_array_equal(represent_word(BraidWord(3), R), np.eye(8))
    w = represent_word(BraidWord(3, ((1, 1), (1, -1))), R)
    assert np.linalg.norm(w - np.eye(8)) < 1e-12


def test_represent_word_braid_relation(rng):
    R = random_eq9_r(rng)
    lhs = represent_word(BraidWord.parse(3, "1 2 1"), R)
    rhs = represent_word(BraidWord.parse(3, "2 1 2"), R)
    assert np.linalg.norm(lhs - rhs) < 1e-12


def test_represent_word_order(rng):
    # leftmost letter acts first: word (b1, b2) is tau(b2) @ tau(b1)
    R = TwoStrandOperator(2, random_unitary(4, rng))
    w = represent_word(BraidWord.parse(3, "1 2"), R)
    np.testing.assert_allclose(w, tau_generator(R, 2, 3) @ tau_generator(R, 1, 3), atol=1e-14)


@pytest.mark.parametrize("seed", range(10))
def test_random_words_are_unitary(seed):
    rng = np.random.default_rng(seed)
    R = TwoStrandOperator(2, random_unitary(4, rng))
    n = int(rng.integers(3, 6))
    length = int(rng.integers(0, 21))
    letters = tuple((int(rng.integers(1, n)), int(rng.choice([-1, 1]))) for _ in range(length))
    W = represent_word(BraidWord(n, letters), R)
    assert unitarity_residual(W) < 1e-10


def test_non_invertible_r_rejected():
    R = np.zeros((4, 4))
    R[0, 0] = 1
    with pytest.raises(np.linalg.LinAlgError):
        represent_word(BraidWord(3, ((1, 1),)), R)


def test_non_unitary_invertible_r_uses_inverse():
    R = two_qubit_r(2, 1, 1, 1, gate=False)
    w = represent_word(BraidWord.parse(3, "1 -1 2 -2"), R)
    assert np.linalg.norm(w - np.eye(8)) < 1e-12


@pytest.mark.parametrize("letters", [((0, 1),), ((3, 1),), ((1, 2),)])
def test_braid_word_validation(letters):
    with pytest.raises(ValueError):
        BraidWord(3, letters)


@pytest.mark.parametrize("n", [2, 3])
def test_r_from_m_gives_braid_rep(n, rng):
    M = np.exp(1j * rng.uniform(0, 2 * np.pi, (n, n)))
    R = r_from_m(M)
    far, br = braid_relation_residuals(R, 4)
    assert far < 1e-11 and br < 1e-11
