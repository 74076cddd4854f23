"""Deterministic CSV output with commented metadata headers.

Floats are written with 17 significant digits ('.' decimal separator) so
they round-trip losslessly, metadata keys are sorted, and the newline is
pinned to "\\n": identical inputs produce byte-identical files on any
platform.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path

__all__ = ["format_value", "write_csv"]


def format_value(value: object) -> str:
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, (list, tuple)):
        return ";".join(format_value(v) for v in value)
    return str(value)


def write_csv(
    path: Path | str,
    meta: Mapping[str, object],
    columns: Sequence[str],
    rows: Iterable[Sequence[object]],
) -> None:
    """Write rows under '#'-prefixed metadata lines and a column-name header."""
    lines = [f"# {key} = {format_value(meta[key])}" for key in sorted(meta)]
    lines.append(",".join(columns))
    for row in rows:
        if len(row) != len(columns):
            raise ValueError(f"row width {len(row)} does not match {len(columns)} columns")
        lines.append(",".join(format_value(v) for v in row))
    with open(path, "w", newline="\n", encoding="ascii") as handle:
        handle.write("\n".join(lines) + "\n")
