"""
Shared enumeration and text-codec utilities used across the package.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .partitions import Partition, SubsetIndex

_SUBSET_RE = re.compile(r"^\{([0-9,\s]*)\}(?:@n=(\d+))?$")
_TRIPLE_RE = re.compile(r"\{[0-9,\s]*\}")


def partitions_of(total: int, max_parts: int, max_part: int | None = None) -> List[Partition]:
    """
    All partitions of `total` with at most `max_parts` parts, each part at
    most `max_part`. Ordered reverse-lexicographically ((2), (1, 1), ...).
    """
    if total < 0 or max_parts < 0:
        return []
    if max_part is None:
        max_part = total

    out: List[Partition] = []

    def _extend(remaining: int, cap: int, prefix: Tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_parts:
            return
        for part in range(min(cap, remaining), 0, -1):
            _extend(remaining - part, part, prefix + (part,))

    _extend(total, max_part, ())
    return out


def partitions_up_to(max_weight: int, max_parts: int) -> List[Partition]:
    """Partitions of weight 0..max_weight, ordered by weight."""
    out: List[Partition] = []
    for w in range(max_weight + 1):
        out.extend(partitions_of(w, max_parts))
    return out


def partitions_in_box(rows: int, cols: int) -> List[Partition]:
    """All partitions fitting a rows x cols box, ordered by weight."""
    out: List[Partition] = []
    for w in range(rows * cols + 1):
        out.extend(partitions_of(w, rows, cols))
    return out


def parse_partition(text: str) -> Partition:
    """Parse "2,1" (or "" / "0" for the empty partition)."""
    text = text.strip().strip("()")
    if not text:
        return Partition(())
    return Partition(tuple(int(x) for x in text.split(",") if x.strip()))


def format_partition(p: Partition) -> str:
    """Inverse of `parse_partition`; the empty partition is "0"."""
    return str(p) or "0"


def parse_subset(text: str, n: int | None = None) -> SubsetIndex:
    """Parse "{1,3}@n=4"; `n` supplies the ambient size when the suffix is absent."""
    m = _SUBSET_RE.match(text.strip())
    if m is None:
        raise ValueError(f"Cannot parse subset {text!r}")
    body, suffix = m.groups()
    if suffix is not None:
        n = int(suffix)
    if n is None:
        raise ValueError(f"Subset {text!r} has no ambient size")
    return SubsetIndex(n, tuple(int(x) for x in body.split(",") if x.strip()))


def format_subset(s: SubsetIndex) -> str:
    return f"{s}@n={s.n}"


def parse_triple(text: str, n: int) -> Tuple[SubsetIndex, SubsetIndex, SubsetIndex]:
    """Parse "{I}{J}{K}" in ambient size n."""
    pieces = _TRIPLE_RE.findall(text.replace(" ", ""))
    if len(pieces) != 3 or "".join(pieces) != text.replace(" ", ""):
        raise ValueError(f"Expected a triple like '{{1}}{{2}}{{2}}', got {text!r}")
    i, j, k = (parse_subset(p, n) for p in pieces)
    return i, j, k


def format_triple(i: SubsetIndex, j: SubsetIndex, k: SubsetIndex) -> str:
    return f"{i}{j}{k}"


def format_rational(x: Fraction | int) -> str:
    """p/q with q > 0 and gcd(p, q) = 1."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def format_float(x: float) -> str:
    return f"{float(x):.12g}"
