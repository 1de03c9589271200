"""
Littlewood-Richardson coefficients and Grassmannian Schubert structure constants.

c_{lambda mu}^{nu} is the number of LR skew tableaux of shape nu/lambda and
content mu: semistandard fillings (rows weakly increase, columns strictly
increase) whose reverse reading word is a lattice word. Cells are filled
row by row from the top, each row right to left, which is exactly the
reverse reading order, so the lattice condition is checked on every prefix.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from .partitions import (
    Partition,
    SubsetIndex,
    as_partition,
    dual_subset,
    from_subset,
    same_shape,
    weight,
)
from .utils import partitions_of

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class SkewTableau:
    """
    Filling of the skew diagram outer/inner.

    `rows[i]` lists the entries of row i (0-based) from column inner[i]
    to column outer[i] - 1, left to right.
    """

    outer: Partition
    inner: Partition
    rows: Tuple[Tuple[int, ...], ...]

    def reading_word(self) -> Tuple[int, ...]:
        """Reverse reading word: rows top to bottom, each right to left."""
        return tuple(v for row in self.rows for v in reversed(row))

    def content(self) -> Partition:
        word = self.reading_word()
        top = max(word, default=0)
        return Partition(tuple(word.count(v) for v in range(1, top + 1)))


def _skew_cells(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> List[Cell]:
    inner = inner + (0,) * (len(outer) - len(inner))
    return [
        (i, j)
        for i in range(len(outer))
        for j in range(outer[i] - 1, inner[i] - 1, -1)
    ]


def _fillings(
    outer: Tuple[int, ...],
    inner: Tuple[int, ...],
    content: Tuple[int, ...],
) -> Iterator[Dict[Cell, int]]:
    """Backtracking over LR fillings; yields the live filling dict at each leaf."""
    cells = _skew_cells(outer, inner)
    letters = len(content)
    filling: Dict[Cell, int] = {}
    counts = [0] * (letters + 1)

    def _place(idx: int) -> Iterator[Dict[Cell, int]]:
        if idx == len(cells):
            yield filling
            return
        i, j = cells[idx]
        hi = min(letters, i + 1)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((i - 1, j))
        lo = 1 if above is None else above + 1
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            yield from _place(idx + 1)
            counts[v] -= 1
            del filling[(i, j)]

    return _place(0)


@lru_cache(maxsize=None)
def _count(outer: Tuple[int, ...], inner: Tuple[int, ...], content: Tuple[int, ...]) -> int:
    return sum(1 for _ in _fillings(outer, inner, content))


def _shapes_compatible(lam: Partition, mu: Partition, nu: Partition) -> bool:
    return weight(lam) + weight(mu) == weight(nu) and nu.contains(lam)


def lr_tableaux(
    lam: Partition | Sequence[int],
    mu: Partition | Sequence[int],
    nu: Partition | Sequence[int],
) -> Iterator[SkewTableau]:
    """Iterate over the LR skew tableaux of shape nu/lam and content mu."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if not _shapes_compatible(lam, mu, nu):
        return
    inner = lam.padded(len(nu))
    for filling in _fillings(nu.parts, lam.parts, mu.parts):
        rows = tuple(
            tuple(filling[(i, j)] for j in range(inner[i], nu[i]))
            for i in range(len(nu))
        )
        yield SkewTableau(outer=nu, inner=lam, rows=rows)


def lr_coefficient(
    lam: Partition | Sequence[int],
    mu: Partition | Sequence[int],
    nu: Partition | Sequence[int],
) -> int:
    """
    Multiplicity of V_nu in V_lam (x) V_mu.

    Returns 0 when lam is not contained in nu or |lam| + |mu| != |nu|.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if not _shapes_compatible(lam, mu, nu):
        return 0
    return _count(nu.parts, lam.parts, mu.parts)


def product_expansion(
    lam: Partition | Sequence[int],
    mu: Partition | Sequence[int],
    max_parts: int | None = None,
) -> Dict[Partition, int]:
    """
    Non-zero coefficients of s_lam * s_mu, restricted to nu with at most
    `max_parts` parts (default: len(lam) + len(mu), i.e. no restriction).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if max_parts is None:
        max_parts = len(lam) + len(mu)
    expansion: Dict[Partition, int] = {}
    for nu in partitions_of(weight(lam) + weight(mu), max_parts):
        c = lr_coefficient(lam, mu, nu)
        if c:
            expansion[nu] = c
    logger.debug("s_%s * s_%s has %d terms", lam, mu, len(expansion))
    return expansion


def schubert_constant(i: SubsetIndex, j: SubsetIndex, k: SubsetIndex) -> int:
    """
    c_{IJ}^K in sigma_I . sigma_J = sum_K c_{IJ}^K sigma_K.

    Raises
    ------
    DimensionError
        If the three subsets do not share (r, n).
    """
    r, n = same_shape((i, j, k))
    return lr_coefficient(
        from_subset(i, r, n), from_subset(j, r, n), from_subset(k, r, n)
    )


def triple_intersection(i: SubsetIndex, j: SubsetIndex, k: SubsetIndex) -> int:
    """
    sigma_I . sigma_J . sigma_K = c_{IJ}^{K^vee} [pt]; 0 unless the
    codimensions add up to r(n - r).
    """
    r, n = same_shape((i, j, k))
    if i.codimension + j.codimension + k.codimension != r * (n - r):
        return 0
    return schubert_constant(i, j, dual_subset(k))
