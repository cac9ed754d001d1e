"""Frame documents: the on-disk JSON (and CSV import) formats.

A frame document is a JSON object with keys, in order:

    field    "real" | "complex"
    dim      ambient dimension N
    vectors  M rows; real rows are N numbers, complex rows are N [re, im] pairs
    meta     free-form object (tool provenance, seeds, ...)

Numbers are serialized with Python's shortest exact float representation,
so writing, reading, and re-writing a document is byte-identical.
"""

from __future__ import annotations

import csv
import json

import numpy as np

from ..errors import FramekitError
from ..frames import Frame
from ..fusion import FusionFrame


class DocumentError(FramekitError):
    pass


def _finite(x) -> float:
    value = float(x)
    if not np.isfinite(value):
        raise DocumentError(f"non-finite number {x!r} cannot be serialized")
    return value


def frame_to_document(f: Frame, meta: dict | None = None) -> dict:
    if f.field == "complex":
        vectors = [[[_finite(z.real), _finite(z.imag)] for z in row] for row in f.vectors]
    else:
        vectors = [[_finite(x) for x in row] for row in f.vectors]
    return {"field": f.field, "dim": f.dim, "vectors": vectors, "meta": dict(meta or {})}


def document_to_frame(doc) -> Frame:
    if not isinstance(doc, dict):
        raise DocumentError("frame document must be a JSON object")
    for key in ("field", "dim", "vectors"):
        if key not in doc:
            raise DocumentError(f"frame document is missing {key!r}")
    field = doc["field"]
    if field not in ("real", "complex"):
        raise DocumentError(f"unknown field {field!r}")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise DocumentError(f"dim must be a positive integer, got {dim!r}")
    rows = doc["vectors"]
    if not isinstance(rows, list) or not rows:
        raise DocumentError("vectors must be a non-empty list")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise DocumentError(f"vector {i} must be a list of {dim} entries")
        if field == "complex":
            parsed = []
            for entry in row:
                if not (isinstance(entry, list) and len(entry) == 2):
                    raise DocumentError(f"vector {i} entries must be [re, im] pairs")
                parsed.append(complex(_number(entry[0]), _number(entry[1])))
            out.append(parsed)
        else:
            out.append([_number(x) for x in row])
    dtype = np.complex128 if field == "complex" else np.float64
    return Frame(np.array(out, dtype=dtype))


def _number(x) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise DocumentError(f"expected a number, got {x!r}")
    if not np.isfinite(x):
        raise DocumentError(f"non-finite number {x!r}")
    return float(x)


def dumps_document(doc) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def loads_document(text: str):
    def reject(token):
        raise DocumentError(f"non-finite constant {token!r} in document")

    try:
        return json.loads(text, parse_constant=reject)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc


def save_document(doc, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_document(doc))


def load_document(path):
    with open(path, encoding="utf-8") as handle:
        return loads_document(handle.read())


def load_frame(path) -> Frame:
    """Read a frame from a JSON document, or from CSV for real frames."""
    if str(path).lower().endswith(".csv"):
        return frame_from_csv(path)
    return document_to_frame(load_document(path))


def frame_from_csv(path) -> Frame:
    rows = []
    with open(path, newline="", encoding="utf-8") as handle:
        for lineno, row in enumerate(csv.reader(handle), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            try:
                rows.append([float(cell) for cell in row])
            except ValueError as exc:
                raise DocumentError(f"line {lineno}: {exc}") from exc
    if not rows:
        raise DocumentError("CSV file holds no vectors")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise DocumentError("CSV rows have inconsistent lengths")
    return Frame(np.array(rows))


def matrix_to_document(matrix: np.ndarray, meta: dict | None = None) -> dict:
    matrix = np.asarray(matrix)
    if np.iscomplexobj(matrix):
        field = "complex"
        entries = [[[_finite(z.real), _finite(z.imag)] for z in row] for row in matrix]
    else:
        field = "real"
        entries = [[_finite(x) for x in row] for row in matrix]
    return {"field": field, "rows": matrix.shape[0], "cols": matrix.shape[1], "entries": entries, "meta": dict(meta or {})}


def fusion_from_document(doc) -> FusionFrame:
    """Fusion frame document: {"field", "dim", "subspaces": [...], "meta"?}.

    Each subspace is {"basis": rows, "weight": v, "local_frame": rows?};
    rows use the same entry encoding as frame documents.
    """
    if not isinstance(doc, dict):
        raise DocumentError("fusion document must be a JSON object")
    for key in ("field", "dim", "subspaces"):
        if key not in doc:
            raise DocumentError(f"fusion document is missing {key!r}")
    field = doc["field"]
    if field not in ("real", "complex"):
        raise DocumentError(f"unknown field {field!r}")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise DocumentError(f"dim must be a positive integer, got {dim!r}")
    entries = doc["subspaces"]
    if not isinstance(entries, list) or not entries:
        raise DocumentError("subspaces must be a non-empty list")

    def parse_rows(rows, label):
        if not isinstance(rows, list) or not rows:
            raise DocumentError(f"{label} must be a non-empty list of rows")
        parsed = []
        for row in rows:
            if not isinstance(row, list) or len(row) != dim:
                raise DocumentError(f"{label} rows must have {dim} entries")
            if field == "complex":
                vals = []
                for entry in row:
                    if not (isinstance(entry, list) and len(entry) == 2):
                        raise DocumentError(f"{label} entries must be [re, im] pairs")
                    vals.append(complex(_number(entry[0]), _number(entry[1])))
                parsed.append(vals)
            else:
                parsed.append([_number(x) for x in row])
        dtype = np.complex128 if field == "complex" else np.float64
        return np.array(parsed, dtype=dtype)

    subspaces = []
    local_frames = []
    have_locals = False
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or "basis" not in entry or "weight" not in entry:
            raise DocumentError(f"subspace {i} needs 'basis' and 'weight'")
        basis = parse_rows(entry["basis"], f"subspace {i} basis")
        weight = _number(entry["weight"])
        subspaces.append((basis, weight))
        if "local_frame" in entry:
            have_locals = True
            local_frames.append(parse_rows(entry["local_frame"], f"subspace {i} local frame"))
        else:
            local_frames.append(None)
    if have_locals and any(v is None for v in local_frames):
        raise DocumentError("either every subspace carries a local frame or none does")
    return FusionFrame(subspaces, local_frames if have_locals else None)
