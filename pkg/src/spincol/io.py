"""Determinant file format: JSON with explicit [re, im] number pairs.

A determinant file is a UTF-8 JSON document with integer fields ``basis_dim``
and ``n_electrons``, complex matrices ``coeff_alpha`` and ``coeff_beta``
(row-major, basis_dim rows of n_electrons entries, each entry a two-element
array [re, im]), and an optional ``ao_overlap`` (basis_dim x basis_dim, same
entry encoding).  One determinant per file.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

from .determinant import ORTHONORMALITY_INPUT_TOL, SpinorDeterminant
from .errors import NotOrthonormal, ParseError, ShapeError

_REQUIRED_FIELDS = ("basis_dim", "n_electrons", "coeff_alpha", "coeff_beta")


def _parse_int(doc: dict, field: str) -> int:
    value = doc.get(field)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"field {field!r} must be an integer")
    return value


def _parse_complex_matrix(doc: dict, field: str, rows: int, cols: int) -> np.ndarray:
    raw = doc.get(field)
    if not isinstance(raw, list):
        raise ParseError(f"field {field!r} must be an array of rows")
    if len(raw) != rows:
        raise ShapeError(f"field {field!r} has {len(raw)} rows, expected {rows}")
    out = np.empty((rows, cols), dtype=complex)
    for i, row in enumerate(raw):
        if not isinstance(row, list):
            raise ParseError(f"row {i} of {field!r} is not an array")
        if len(row) != cols:
            raise ShapeError(f"row {i} of {field!r} has {len(row)} entries, expected {cols}")
        for j, pair in enumerate(row):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
            ):
                raise ParseError(f"entry [{i}][{j}] of {field!r} is not a [re, im] number pair")
            out[i, j] = complex(pair[0], pair[1])
    return out


def parse_determinant(path) -> SpinorDeterminant:
    """Read a determinant file without checking spinor orthonormality."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    for field in _REQUIRED_FIELDS:
        if field not in doc:
            raise ParseError(f"missing required field {field!r}")
    m = _parse_int(doc, "basis_dim")
    ne = _parse_int(doc, "n_electrons")
    if m < 1:
        raise ShapeError(f"basis_dim must be positive, got {m}")
    if ne < 1:
        raise ShapeError(f"n_electrons must be positive, got {ne}")
    if ne > 2 * m:
        raise ShapeError(f"{ne} electrons do not fit in {2 * m} spin-orbitals")
    coeff_alpha = _parse_complex_matrix(doc, "coeff_alpha", m, ne)
    coeff_beta = _parse_complex_matrix(doc, "coeff_beta", m, ne)
    ao_overlap = None
    if doc.get("ao_overlap") is not None:
        ao_overlap = _parse_complex_matrix(doc, "ao_overlap", m, m)
    return SpinorDeterminant(
        basis_dim=m,
        n_electrons=ne,
        coeff_alpha=coeff_alpha,
        coeff_beta=coeff_beta,
        ao_overlap=ao_overlap,
    )


def load_determinant(path) -> SpinorDeterminant:
    """Read and validate a determinant file.

    Raises ``ParseError`` for malformed documents, ``ShapeError`` for
    inconsistent dimensions, and ``NotOrthonormal`` when the spinors fail the
    1e-8 orthonormality gate (re-run with --orthonormalize, or call
    ``orthonormalize``, to repair such input).
    """
    det = parse_determinant(path)
    residual = det.orthonormality_residual()
    if residual > ORTHONORMALITY_INPUT_TOL:
        raise NotOrthonormal(
            f"spinors in {path} have orthonormality residual {residual:.3e} "
            "(limit 1e-08); pass --orthonormalize to repair"
        )
    return det


def _encode_matrix(matrix: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in matrix]


def save_determinant(det: SpinorDeterminant, path) -> None:
    """Write a determinant file (full double precision, round-trip exact)."""
    doc = {
        "basis_dim": det.basis_dim,
        "n_electrons": det.n_electrons,
        "coeff_alpha": _encode_matrix(det.coeff_alpha),
        "coeff_beta": _encode_matrix(det.coeff_beta),
    }
    if det.ao_overlap is not None:
        doc["ao_overlap"] = _encode_matrix(det.ao_overlap)
    Path(path).write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")


def file_sha256(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
