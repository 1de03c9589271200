"""
Exact-rational linear programming.

Solves

    maximize c.x  subject to  A x <= b,  x >= 0

with a dictionary-form simplex method over `fractions.Fraction`, using
Bland's smallest-index rule for both entering and leaving variables so
degenerate problems terminate. When some b_i < 0 an auxiliary first
phase (one artificial variable x0) finds a feasible dictionary.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass
class LPConfig:
    max_pivots: int = 100_000
    bound: Fraction = Fraction(1)  # coordinate box used by the cone LPs


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction]
    solution: Tuple[Fraction, ...]
    pivots: int


class _Dictionary:
    """
    Rows  x_basic[i] = b[i] - sum_k A[i][k] * x_nonbasic[k]
    Obj   z = z0 + sum_k c[k] * x_nonbasic[k]

    Variables are identified by integer labels; Bland's rule compares labels.
    """

    def __init__(
        self,
        A: Sequence[Sequence[Fraction]],
        b: Sequence[Fraction],
        c: Sequence[Fraction],
    ) -> None:
        self.m = len(b)
        self.n = len(c)
        self.A: List[List[Fraction]] = [[Fraction(v) for v in row] for row in A]
        self.b: List[Fraction] = [Fraction(v) for v in b]
        self.c: List[Fraction] = [Fraction(v) for v in c]
        self.z0 = Fraction(0)
        self.nonbasic: List[int] = list(range(self.n))
        self.basic: List[int] = [self.n + i for i in range(self.m)]
        self.pivots = 0

    def pivot(self, row: int, col: int) -> None:
        A = self.A
        inv = 1 / A[row][col]
        new_row = [v * inv for v in A[row]]
        new_row[col] = inv
        b_row = self.b[row] * inv

        for r in range(self.m):
            if r == row:
                continue
            f = A[r][col]
            if f == 0:
                continue
            ar = A[r]
            for k, v in enumerate(new_row):
                if v:
                    ar[k] -= f * v
            ar[col] = -f * inv
            self.b[r] -= f * b_row

        cj = self.c[col]
        if cj:
            for k, v in enumerate(new_row):
                if v:
                    self.c[k] -= cj * v
            self.c[col] = -cj * inv
            self.z0 += cj * b_row

        A[row] = new_row
        self.b[row] = b_row
        self.basic[row], self.nonbasic[col] = self.nonbasic[col], self.basic[row]
        self.pivots += 1

    def entering(self) -> Optional[int]:
        candidates = [k for k in range(len(self.c)) if self.c[k] > 0]
        if not candidates:
            return None
        return min(candidates, key=lambda k: self.nonbasic[k])

    def leaving(self, col: int) -> Optional[int]:
        best: Optional[int] = None
        best_key: Tuple[Fraction, int] | None = None
        for r in range(self.m):
            a = self.A[r][col]
            if a > 0:
                key = (self.b[r] / a, self.basic[r])
                if best_key is None or key < best_key:
                    best, best_key = r, key
        return best

    def run(self, config: LPConfig) -> str:
        while True:
            if self.pivots >= config.max_pivots:
                raise RuntimeError(f"simplex exceeded {config.max_pivots} pivots")
            col = self.entering()
            if col is None:
                return OPTIMAL
            row = self.leaving(col)
            if row is None:
                return UNBOUNDED
            self.pivot(row, col)

    def drop_column(self, col: int) -> None:
        for row in self.A:
            del row[col]
        del self.c[col]
        del self.nonbasic[col]

    def values(self, count: int) -> Tuple[Fraction, ...]:
        x = [Fraction(0)] * count
        for r, label in enumerate(self.basic):
            if label < count:
                x[label] = self.b[r]
        return tuple(x)


def _first_phase(d: _Dictionary, config: LPConfig) -> bool:
    """Drive the dictionary to a feasible basis; False when infeasible."""
    x0 = d.n + d.m
    for row in d.A:
        row.append(Fraction(-1))
    d.nonbasic.append(x0)
    original_c = d.c
    d.c = [Fraction(0)] * d.n + [Fraction(-1)]

    col = len(d.nonbasic) - 1
    row = min(range(d.m), key=lambda r: (d.b[r], d.basic[r]))
    d.pivot(row, col)
    d.run(config)
    if d.z0 < 0:
        return False

    if x0 in d.basic:
        r = d.basic.index(x0)
        k = next((k for k, v in enumerate(d.A[r]) if v != 0), None)
        if k is None:
            # x0 is identically zero on this row; the row carries no constraint.
            del d.A[r], d.b[r], d.basic[r]
            d.m -= 1
        else:
            d.pivot(r, k)
    if x0 in d.nonbasic:
        d.drop_column(d.nonbasic.index(x0))

    # Re-express the original objective over the current nonbasic variables.
    d.c = [Fraction(0)] * len(d.nonbasic)
    d.z0 = Fraction(0)
    for label, cv in enumerate(original_c):
        if cv == 0:
            continue
        if label in d.nonbasic:
            d.c[d.nonbasic.index(label)] += cv
        else:
            r = d.basic.index(label)
            d.z0 += cv * d.b[r]
            for k, v in enumerate(d.A[r]):
                if v:
                    d.c[k] -= cv * v
    return True


def maximize(
    c: Sequence[Fraction | int],
    A_ub: Sequence[Sequence[Fraction | int]],
    b_ub: Sequence[Fraction | int],
    config: LPConfig | None = None,
) -> LPResult:
    """
    Maximize c.x subject to A_ub x <= b_ub and x >= 0, exactly.

    Returns
    -------
    LPResult with status "optimal", "unbounded" or "infeasible"; `value` and
    `solution` are set for optimal problems.
    """
    if config is None:
        config = LPConfig()
    if any(len(row) != len(c) for row in A_ub) or len(A_ub) != len(b_ub):
        raise ValueError("LP dimensions do not match")

    d = _Dictionary(A_ub, b_ub, c)
    if any(v < 0 for v in d.b):
        if not _first_phase(d, config):
            logger.debug("LP infeasible after %d pivots", d.pivots)
            return LPResult(INFEASIBLE, None, (), d.pivots)

    status = d.run(config)
    logger.debug("LP %s after %d pivots (%d rows)", status, d.pivots, d.m)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, (), d.pivots)
    return LPResult(OPTIMAL, d.z0, d.values(len(c)), d.pivots)
