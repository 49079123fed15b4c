"""Text interchange formats shared by the library surface and the CLI.

Floats are always written with 17 significant digits, which round-trips
float64 exactly; complex entries use the "re+imj" form accepted by Python's
``complex()``. Matrix and signal CSV files may carry a leading metadata
comment line of the form

    # meta {"n": 8, "t": 1.0, "graph_sha256": "..."}

so downstream files self-describe their provenance. Writers go through
:func:`write_text_atomic` (temp file + rename in the target directory).
"""
from __future__ import annotations

import hashlib
import json
import os

import numpy as np

META_PREFIX = "# meta "


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def format_complex(z: complex) -> str:
    z = complex(z)
    sign = "+" if z.imag >= 0 else "-"
    return f"{format_float(z.real)}{sign}{format_float(abs(z.imag))}j"


def parse_complex(text: str) -> complex:
    try:
        return complex(text.strip())
    except ValueError as exc:
        raise ValueError(f"invalid complex value {text!r}") from exc


def meta_line(meta: dict) -> str:
    return META_PREFIX + json.dumps(meta, sort_keys=True, separators=(",", ":"))


def split_meta(text: str) -> tuple[dict, list[str]]:
    """Separate a leading metadata comment (if any) from the data lines.

    Other '#' comment lines and blank lines are dropped.
    """
    meta: dict = {}
    data_lines = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(META_PREFIX):
            meta = json.loads(stripped[len(META_PREFIX):])
        elif stripped.startswith("#"):
            continue
        else:
            data_lines.append(stripped)
    return meta, data_lines


def signal_to_csv(values) -> str:
    """One "re,im" line per vertex."""
    values = np.asarray(values, dtype=np.complex128)
    lines = [f"{format_float(z.real)},{format_float(z.imag)}" for z in values]
    return "\n".join(lines) + "\n"


def signal_from_csv(text: str) -> np.ndarray:
    """Parse "re,im" lines ("re" alone means a real value)."""
    _, lines = split_meta(text)
    values = []
    for lineno, line in enumerate(lines, start=1):
        parts = line.split(",")
        if len(parts) == 1:
            values.append(complex(float(parts[0]), 0.0))
        elif len(parts) == 2:
            values.append(complex(float(parts[0]), float(parts[1])))
        else:
            raise ValueError(f"signal line {lineno}: expected 're' or 're,im', got {line!r}")
    if not values:
        raise ValueError("signal file contains no values")
    return np.asarray(values, dtype=np.complex128)


def matrix_to_csv(matrix, complex_entries: bool = False, meta: dict | None = None) -> str:
    """Row-major CSV with 17-significant-digit entries and an optional meta line."""
    matrix = np.asarray(matrix)
    entry = format_complex if complex_entries else format_float
    lines = [] if meta is None else [meta_line(meta)]
    lines.extend(",".join(entry(x) for x in row) for row in np.atleast_2d(matrix))
    return "\n".join(lines) + "\n"


def matrix_from_csv(text: str, complex_entries: bool = False) -> tuple[np.ndarray, dict]:
    """Parse a matrix CSV, returning (array, metadata)."""
    meta, lines = split_meta(text)
    if not lines:
        raise ValueError("matrix file contains no rows")
    parse = parse_complex if complex_entries else float
    rows = [[parse(cell) for cell in line.split(",")] for line in lines]
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError("matrix rows have inconsistent lengths")
    dtype = np.complex128 if complex_entries else np.float64
    return np.asarray(rows, dtype=dtype), meta


def parse_t_grid(text: str) -> np.ndarray:
    """Parse "start:stop:step" into an inclusive ascending nonnegative grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"t-grid must be start:stop:step, got {text!r}")
    start, stop, step = (float(p) for p in parts)
    if step <= 0:
        raise ValueError(f"t-grid step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"t-grid stop {stop} is below start {start}")
    if start < 0:
        raise ValueError(f"t-grid start must be nonnegative, got {start}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def graph_sha256(serialized: str) -> str:
    return hashlib.sha256(serialized.encode("utf-8")).hexdigest()


def write_text_atomic(path: str, text: str) -> None:
    """Write via a temp file in the same directory, then rename into place."""
    tmp_path = f"{path}.tmp"
    with open(tmp_path, "w", encoding="utf-8") as handle:
        handle.write(text)
    os.replace(tmp_path, path)
