"""JSON documents for two-qubit states.

A document is an object with an optional ``label`` and exactly one of

* ``matrix``: four rows of four ``{"re": x, "im": y}`` entries;
* ``bloch``: ``{"a": [3 reals], "b": [3 reals], "C": [[3 reals] x 3]}``.

Floats go through :func:`json.dumps`, whose ``repr`` formatting is the
shortest decimal that round-trips, so no precision is lost.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from .states import HERM_TOL, StateParams, state_from_params

__all__ = [
    "DocumentError",
    "StateDocument",
    "complex_to_json",
    "complex_from_json",
    "parse_document",
    "load_documents",
]


class DocumentError(ValueError):
    """Malformed or inconsistent state document."""


def complex_to_json(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def complex_from_json(obj: Any) -> complex:
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return complex(obj)
    if not isinstance(obj, dict) or set(obj) != {"re", "im"}:
        raise DocumentError(f"expected {{'re', 'im'}}, got {obj!r}")
    try:
        return complex(float(obj["re"]), float(obj["im"]))
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"non-numeric complex entry {obj!r}") from exc


def _reals(obj: Any, shape: tuple[int, ...], name: str) -> np.ndarray:
    try:
        arr = np.array(obj, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"{name}: non-numeric entries") from exc
    if arr.shape != shape:
        raise DocumentError(f"{name}: expected shape {shape}, got {arr.shape}")
    return arr


@dataclass(frozen=True)
class StateDocument:
    rho: np.ndarray
    label: str | None = None

    def to_json(self, bloch: bool = False) -> dict:
        doc: dict = {}
        if self.label is not None:
            doc["label"] = self.label
        if bloch:
            from .states import params_from_state

            p = params_from_state(self.rho)
            doc["bloch"] = {"a": p.a.tolist(), "b": p.b.tolist(), "C": p.C.tolist()}
        else:
            doc["matrix"] = [[complex_to_json(z) for z in row] for row in self.rho]
        return doc

    def dumps(self, bloch: bool = False) -> str:
        return json.dumps(self.to_json(bloch))


def parse_document(obj: Any) -> StateDocument:
    """Build a :class:`StateDocument`, checking Hermiticity and unit trace.

    Positivity is not checked here; callers decide whether to warn.
    """
    if not isinstance(obj, dict):
        raise DocumentError("a state document must be a JSON object")
    reps = [k for k in ("matrix", "bloch") if k in obj]
    if len(reps) != 1:
        raise DocumentError("exactly one of 'matrix' or 'bloch' must be present")
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise DocumentError("label must be a string")

    if reps[0] == "matrix":
        rows = obj["matrix"]
        if not isinstance(rows, list) or len(rows) != 4 or any(
            not isinstance(r, list) or len(r) != 4 for r in rows
        ):
            raise DocumentError("matrix must be 4 rows of 4 entries")
        rho = np.array([[complex_from_json(z) for z in r] for r in rows], dtype=complex)
    else:
        blk = obj["bloch"]
        if not isinstance(blk, dict) or set(blk) != {"a", "b", "C"}:
            raise DocumentError("bloch block needs exactly the keys a, b, C")
        p = StateParams(
            _reals(blk["a"], (3,), "a"), _reals(blk["b"], (3,), "b"), _reals(blk["C"], (3, 3), "C")
        )
        rho = state_from_params(p)

    if not np.all(np.isfinite(rho)):
        raise DocumentError("non-finite entries")
    if np.max(np.abs(rho - rho.conj().T)) > HERM_TOL:
        raise DocumentError("matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > HERM_TOL:
        raise DocumentError("trace is not 1")
    return StateDocument(rho, label)


def load_documents(text: str) -> list[StateDocument]:
    """Parse one document or a JSON array of documents."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc}") from exc
    if isinstance(obj, list):
        if not obj:
            raise DocumentError("empty document list")
        return [parse_document(o) for o in obj]
    return [parse_document(obj)]
