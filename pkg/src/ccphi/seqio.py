"""Text interchange format for symbol sequences: one decimal per line."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable


def read_symbols(path: str | Path) -> list[int]:
    """Parse a one-symbol-per-line file; errors carry the line number."""
    symbols = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                value = int(text)
            except ValueError:
                raise ValueError(f"{path}: line {lineno}: not an integer: {text!r}")
            if value < 0:
                raise ValueError(f"{path}: line {lineno}: negative symbol {value}")
            symbols.append(value)
    if not symbols:
        raise ValueError(f"{path}: file contains no symbols")
    return symbols


def write_symbols(path: str | Path, symbols: Iterable[int]) -> None:
    """Write one decimal symbol per line, LF-terminated."""
    with open(path, "w", newline="\n") as fh:
        for s in symbols:
            fh.write(f"{int(s)}\n")
