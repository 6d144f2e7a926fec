import numpy as np

from braidgate.oracle import random_qubit, random_state
from braidgate.qstate import PureState, ghz_state, product_state, tensor_product, w_state


def permute_qubits(s: PureState, order) -> PureState:
    """Qubit k of the result is qubit order[k] of s (0-based)."""
    return PureState(s.qubit_count, np.transpose(s.tensor(), order).reshape(-1))


def with_factor_at(j: int, factor: PureState, rest: PureState) -> PureState:
    """Insert a single-qubit factor as qubit j (1-based) in front of the other qubits."""
    s = tensor_product(factor, rest)
    m = s.qubit_count
    order = list(range(1, m))
    order.insert(j - 1, 0)
    return permute_qubits(s, order)


def mixed_instances(count: int, seed: int, max_m: int = 6):
    """Products, GHZ/W, partial products and generic states, each tagged with its kind."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        m = int(rng.integers(2, max_m + 1))
        kind = ["product", "ghz", "w", "partial", "generic"][k % 5]
        if kind == "product":
            s = product_state([random_qubit(rng) for _ in range(m)])
        elif kind == "ghz":
            s = ghz_state(m)
        elif kind == "w":
            s = w_state(m)
        elif kind == "partial":
            m = max(m, 3)
            j = int(rng.integers(1, m + 1))
            s = with_factor_at(j, random_qubit(rng), random_state(m - 1, rng))
        else:
            s = random_state(m, rng)
        scale = rng.uniform(0.1, 10) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        out.append((kind, s.scaled(scale)))
    return out
