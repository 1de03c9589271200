"""
Point files: three lines (alpha, beta, gamma) of comma-separated scalars.

Entries written as integers or "p/q" are read exactly; anything else with a
decimal point or exponent is read as a float. Validation mirrors a schema
check: line count, equal lengths, parseable entries.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import List

from .errors import DimensionError
from .horn_cone import Scalar, SpectrumPoint


def parse_scalar(text: str) -> Scalar:
    text = text.strip()
    if not text:
        raise ValueError("Empty entry in point file")
    if any(ch in text for ch in ".eE") and "/" not in text:
        return float(text)
    return Fraction(text)


def parse_point(text: str) -> SpectrumPoint:
    """
    Parse the three-line point format.

    Raises ValueError on malformed entries or a wrong line count, and
    DimensionError when the three sequences differ in length.
    """
    lines = [line for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if len(lines) != 3:
        raise ValueError(f"Point file must have 3 non-empty lines, found {len(lines)}")
    blocks: List[List[Scalar]] = [[parse_scalar(x) for x in line.split(",")] for line in lines]
    lengths = [len(b) for b in blocks]
    if len(set(lengths)) != 1:
        raise DimensionError(f"alpha, beta, gamma lengths differ: {lengths}")
    return SpectrumPoint(*blocks)


def read_point(path: str | Path, n: int | None = None) -> SpectrumPoint:
    """Read a point file, optionally requiring size n."""
    point = parse_point(Path(path).read_text())
    if n is not None and point.n != n:
        raise DimensionError(f"{path} holds a point of size {point.n}, expected {n}")
    return point
