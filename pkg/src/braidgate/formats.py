"""JSON file formats for states, phase vectors, operators and generator reports.

Complex numbers are written as [re, im] pairs. Python's float repr is the
shortest string that round-trips, so values survive a write/read cycle bit for
bit.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .entangler import EntanglerOperator, PhaseVector
from .qstate import PureState


class FormatError(ValueError):
    pass


def _pairs(values) -> list[list[float]]:
    return [[float(v.real), float(v.imag)] for v in np.asarray(values, dtype=np.complex128)]


def _complex_array(raw, expected: int, what: str) -> np.ndarray:
    if not isinstance(raw, list):
        raise FormatError(f"{what} must be an array of [re, im] pairs")
    if len(raw) != expected:
        raise FormatError(f"{what} has {len(raw)} entries, expected {expected}")
    out = np.empty(expected, dtype=np.complex128)
    for i, pair in enumerate(raw):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise FormatError(f"{what}[{i}] is not a [re, im] pair")
        try:
            out[i] = complex(float(pair[0]), float(pair[1]))
        except (TypeError, ValueError) as exc:
            raise FormatError(f"{what}[{i}] is not numeric") from exc
    if not np.all(np.isfinite(out)):
        raise FormatError(f"{what} contains non-finite values")
    return out


def _qubits(doc) -> int:
    if not isinstance(doc, dict):
        raise FormatError("expected a JSON object")
    m = doc.get("qubits")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise FormatError(f"'qubits' must be a positive integer, got {m!r}")
    return m


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def dump_json(doc, path=None) -> str:
    text = json.dumps(doc, indent=1)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


def state_to_json(s: PureState) -> dict:
    return {"qubits": s.qubit_count, "amplitudes": _pairs(s.amplitudes)}


def state_from_json(doc) -> PureState:
    m = _qubits(doc)
    return PureState(m, _complex_array(doc.get("amplitudes"), 2**m, "amplitudes"))


def phases_to_json(p: PhaseVector) -> dict:
    return {"qubits": p.qubit_count, "phases": _pairs(p.phases)}


def phases_from_json(doc, unitary_grade: bool = True) -> PhaseVector:
    m = _qubits(doc)
    return PhaseVector(m, _complex_array(doc.get("phases"), 2**m, "phases"), unitary_grade)


def operator_to_json(R: EntanglerOperator, dense: bool = False) -> dict:
    if dense:
        return {"qubits": R.qubit_count, "dense": [_pairs(row) for row in R.to_dense()]}
    return {
        "qubits": R.qubit_count,
        "entries": [[i, c, v.real, v.imag] for i, c, v in R.entries()],
    }


def operator_from_json(doc) -> np.ndarray:
    """Dense matrix from a sparse or dense operator document.

    The side is 2**qubits, or ``dim`` when given (for operators that do not act
    on qubits, such as a 9x9 two-qutrit R).
    """
    if not isinstance(doc, dict):
        raise FormatError("expected a JSON object")
    if "dim" in doc:
        dim = doc["dim"]
        if not isinstance(dim, int) or dim < 1:
            raise FormatError(f"'dim' must be a positive integer, got {dim!r}")
    else:
        dim = 2 ** _qubits(doc)
    if "dense" in doc:
        rows = doc["dense"]
        if not isinstance(rows, list) or len(rows) != dim:
            raise FormatError(f"'dense' must have {dim} rows")
        return np.stack([_complex_array(r, dim, f"dense[{i}]") for i, r in enumerate(rows)])
    entries = doc.get("entries")
    if not isinstance(entries, list):
        raise FormatError("operator needs 'entries' or 'dense'")
    mat = np.zeros((dim, dim), dtype=np.complex128)
    for k, e in enumerate(entries):
        if not (isinstance(e, list) and len(e) == 4):
            raise FormatError(f"entries[{k}] must be [row, col, re, im]")
        r, c, re, im = e
        if not (isinstance(r, int) and isinstance(c, int) and 0 <= r < dim and 0 <= c < dim):
            raise FormatError(f"entries[{k}] has an invalid position ({r}, {c})")
        if not (math.isfinite(float(re)) and math.isfinite(float(im))):
            raise FormatError(f"entries[{k}] is not finite")
        mat[r, c] = complex(float(re), float(im))
    return mat
