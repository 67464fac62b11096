"""
JSON and CSV formats.

Complex numbers are written as ``[re, im]`` pairs. On input a matrix may be
given either with pair entries (3-level nesting) or as plain real numbers
(2-level nesting); vectors likewise.
"""

from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path

import numpy as np

from .errors import ConfigError
from .hybrid import HybridState
from .measurement import GeneralHamiltonian, MeasurementHamiltonian
from .quantum import QuantumState

CSV_HEADER = ("trajectory", "time", "action", "outcome", "probability", "I_A", "I_S", "I_AS")


def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def matrix_to_json(m) -> list:
    a = np.asarray(m, dtype=complex)
    return [[complex_to_json(z) for z in row] for row in a]


def vector_to_json(v) -> list:
    return [complex_to_json(z) for z in np.asarray(v, dtype=complex).reshape(-1)]


def _complex_array(obj, ndim: int, what: str) -> np.ndarray:
    try:
        a = np.asarray(obj, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{what}: not a numeric array") from exc
    if a.ndim == ndim + 1 and a.shape[-1] == 2:
        return a[..., 0] + 1j * a[..., 1]
    if a.ndim == ndim:
        return a.astype(complex)
    raise ConfigError(f"{what}: expected {ndim}-D array of numbers or [re, im] pairs, got shape {a.shape}")


def matrix_from_json(obj, what: str = "matrix") -> np.ndarray:
    return _complex_array(obj, 2, what)


def vector_from_json(obj, what: str = "vector") -> np.ndarray:
    return _complex_array(obj, 1, what)


def state_from_json(obj, what: str = "state") -> QuantumState:
    """``{"pure": vector}`` or ``{"matrix": matrix}`` (or a bare matrix)."""
    if isinstance(obj, dict):
        if "pure" in obj:
            return QuantumState.pure(vector_from_json(obj["pure"], what))
        if "matrix" in obj:
            return QuantumState(matrix_from_json(obj["matrix"], what))
        raise ConfigError(f"{what}: expected a 'pure' or 'matrix' entry")
    return QuantumState(matrix_from_json(obj, what))


def hybrid_to_dict(state: HybridState) -> dict:
    return {
        "weights": [float(w) for w in state.weights],
        "blocks": [None if b is None else matrix_to_json(b.matrix) for b in state.blocks],
    }


def hybrid_from_dict(doc: dict) -> HybridState:
    try:
        weights = doc["weights"]
        blocks = doc["blocks"]
    except (KeyError, TypeError) as exc:
        raise ConfigError("hybrid state needs 'weights' and 'blocks'") from exc
    states = [None if b is None else state_from_json(b, f"block {i}") for i, b in enumerate(blocks)]
    return HybridState(np.asarray(weights, dtype=float), tuple(states))


def hamiltonian_from_dict(doc: dict):
    """
    Parse a Hamiltonian file.

    Accepted forms: ``{"energies", "h_s", "potentials"}`` for the
    classicality-compatible form; ``{"blocks": [[W_ij, ...], ...]}`` or
    ``{"matrix": H, "n": n, "d": d}`` for a general joint Hamiltonian.
    """
    if not isinstance(doc, dict):
        raise ConfigError("Hamiltonian document must be a JSON object")
    if "potentials" in doc:
        pots = [matrix_from_json(v, f"potential {i}") for i, v in enumerate(doc["potentials"])]
        d = pots[0].shape[0] if pots else 1
        h_s = matrix_from_json(doc["h_s"], "h_s") if "h_s" in doc else np.zeros((d, d))
        energies = doc.get("energies", [0.0] * len(pots))
        return MeasurementHamiltonian(energies, h_s, tuple(pots))
    if "blocks" in doc:
        rows = doc["blocks"]
        w = np.array([[matrix_from_json(b, f"W[{i}][{j}]") for j, b in enumerate(row)]
                      for i, row in enumerate(rows)])
        return GeneralHamiltonian(w)
    if "matrix" in doc:
        try:
            n, d = int(doc["n"]), int(doc["d"])
        except KeyError as exc:
            raise ConfigError("a full 'matrix' needs 'n' and 'd'") from exc
        return GeneralHamiltonian.from_matrix(matrix_from_json(doc["matrix"]), n, d)
    raise ConfigError("Hamiltonian document needs 'potentials', 'blocks' or 'matrix'")


def load_json(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON ({exc})") from exc


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def trajectories_csv(records) -> str:
    """Render trajectory records as CSV text (one row per event)."""
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        for ev in rec.events:
            writer.writerow((rec.trajectory_index,) + ev.csv_fields())
    return buf.getvalue()


def emit_outputs(result, format: str = "both", path=".") -> list[Path]:
    """
    Write ``trajectories.csv`` and/or ``aggregate.json`` into directory ``path``.

    Raises
    ------
    OSError
        If the directory cannot be created or written.
    """
    if format not in ("csv", "json", "both"):
        raise ConfigError(f"unknown output format {format!r}")
    if not result.records:
        raise ConfigError("no trajectory records to write")
    out = Path(path)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if format in ("csv", "both"):
        p = out / "trajectories.csv"
        p.write_text(trajectories_csv(result.records), encoding="utf-8", newline="")
        written.append(p)
    if format in ("json", "both"):
        p = out / "aggregate.json"
        p.write_text(dump_json(result.aggregate), encoding="utf-8")
        written.append(p)
    return written
