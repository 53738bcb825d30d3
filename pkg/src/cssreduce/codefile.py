"""Canonical JSON serialization for codes.

The document is UTF-8 JSON with a fixed field order (format_version, n,
x_generators, z_generators, metadata), strictly increasing index lists,
and sorted metadata keys, so serialization is byte-stable.  Qubit and
generator labels travel in metadata under reserved keys.
"""

from __future__ import annotations

import json

from .f2 import BitMatrix
from .model import CssCode

FORMAT_VERSION = "1"
_LABEL_KEYS = ("qubit_labels", "x_labels", "z_labels")


class CodeFileError(ValueError):
    """Malformed code document."""


def serialize_code(code: CssCode, metadata: dict[str, str] | None = None) -> str:
    meta = dict(metadata or {})
    for key, labels in zip(
        _LABEL_KEYS, (code.qubit_labels, code.x_labels, code.z_labels)
    ):
        if labels is not None:
            meta[key] = json.dumps(list(labels))
    doc = {
        "format_version": FORMAT_VERSION,
        "n": code.n,
        "x_generators": [sorted(code.x_support(i)) for i in range(code.n_x)],
        "z_generators": [sorted(code.z_support(i)) for i in range(code.n_z)],
        "metadata": {k: meta[k] for k in sorted(meta)},
    }
    return json.dumps(doc, indent=2) + "\n"


def _parse_generators(raw, n: int, field: str) -> BitMatrix:
    if not isinstance(raw, list):
        raise CodeFileError(f"field {field!r} must be a list of index lists")
    supports = []
    for i, row in enumerate(raw):
        if not isinstance(row, list):
            raise CodeFileError(f"{field}[{i}] must be a list of qubit indices")
        prev = -1
        for idx in row:
            if not isinstance(idx, int) or isinstance(idx, bool):
                raise CodeFileError(f"{field}[{i}] contains a non-integer index")
            if not 0 <= idx < n:
                raise CodeFileError(
                    f"{field}[{i}] index {idx} out of range for n={n}"
                )
            if idx <= prev:
                raise CodeFileError(f"{field}[{i}] indices must be strictly increasing")
            prev = idx
        supports.append(row)
    return BitMatrix.from_supports(n, supports)


def parse_document(text: str) -> tuple[CssCode, dict[str, str]]:
    """Parse a code document; returns the code and its free-form metadata.

    Structural validation only: commutation is checked separately by
    `validate`.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise CodeFileError(
            f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}"
        ) from e
    if not isinstance(doc, dict):
        raise CodeFileError("document must be a JSON object")
    allowed = {"format_version", "n", "x_generators", "z_generators", "metadata"}
    unknown = set(doc) - allowed
    if unknown:
        raise CodeFileError(f"unknown field {sorted(unknown)[0]!r}")
    for required in ("format_version", "n", "x_generators", "z_generators"):
        if required not in doc:
            raise CodeFileError(f"missing field {required!r}")
    if doc["format_version"] != FORMAT_VERSION:
        raise CodeFileError(
            f"unsupported format_version {doc['format_version']!r}"
        )
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise CodeFileError("field 'n' must be a nonnegative integer")

    x_gens = _parse_generators(doc["x_generators"], n, "x_generators")
    z_gens = _parse_generators(doc["z_generators"], n, "z_generators")

    meta_raw = doc.get("metadata", {})
    if not isinstance(meta_raw, dict):
        raise CodeFileError("field 'metadata' must be an object")
    metadata: dict[str, str] = {}
    for k, v in meta_raw.items():
        if not isinstance(k, str) or not isinstance(v, str):
            raise CodeFileError("metadata must map strings to strings")
        metadata[k] = v

    labels: dict[str, tuple[str, ...] | None] = {}
    expected = {"qubit_labels": n, "x_labels": x_gens.rows, "z_labels": z_gens.rows}
    for key in _LABEL_KEYS:
        if key not in metadata:
            labels[key] = None
            continue
        try:
            values = json.loads(metadata[key])
        except json.JSONDecodeError as e:
            raise CodeFileError(f"metadata {key!r} is not valid JSON") from e
        if not isinstance(values, list) or not all(isinstance(s, str) for s in values):
            raise CodeFileError(f"metadata {key!r} must encode a list of strings")
        if len(values) != expected[key]:
            raise CodeFileError(
                f"metadata {key!r} has {len(values)} entries, expected {expected[key]}"
            )
        labels[key] = tuple(values)

    code = CssCode(
        n,
        x_gens,
        z_gens,
        qubit_labels=labels["qubit_labels"],
        x_labels=labels["x_labels"],
        z_labels=labels["z_labels"],
    )
    return code, {k: v for k, v in metadata.items() if k not in _LABEL_KEYS}


def parse_code(text: str) -> CssCode:
    return parse_document(text)[0]


def save_code(path, code: CssCode, metadata: dict[str, str] | None = None) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_code(code, metadata))


def load_code(path) -> CssCode:
    with open(path, encoding="utf-8") as f:
        return parse_code(f.read())
