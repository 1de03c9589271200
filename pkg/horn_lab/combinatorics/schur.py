"""
Schur polynomial evaluation by the bialternant formula, used as an
independent oracle for the tableau-counted LR coefficients.

    s_lam(x_1..x_m) = det(x_i^(lam_j + m - j)) / det(x_i^(m - j))
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

import numpy as np
import sympy

from ..errors import DimensionError, SingularEvaluationError
from .partitions import Partition, as_partition
from .tableaux import product_expansion

logger = logging.getLogger(__name__)


def _exact_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    matrix = sympy.Matrix(
        [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows]
    )
    det = sympy.Rational(matrix.det(method="bareiss"))
    return Fraction(int(det.p), int(det.q))


def schur_eval(lam: Partition | Sequence[int], x: Sequence[Fraction | int]) -> Fraction:
    """
    Exact value of the Schur polynomial s_lam at the point x.

    Raises
    ------
    DimensionError
        If lam has more parts than there are variables.
    SingularEvaluationError
        If two evaluation points coincide.
    """
    lam = as_partition(lam)
    xs = [Fraction(v) for v in x]
    m = len(xs)
    if len(lam) > m:
        raise DimensionError(f"Partition {lam} has more than {m} parts")
    if len(set(xs)) != m:
        raise SingularEvaluationError(f"Evaluation points are not distinct: {xs}")
    if m == 0:
        return Fraction(1)

    parts = lam.padded(m)
    numerator = _exact_det([[xi ** (parts[j] + m - 1 - j) for j in range(m)] for xi in xs])
    denominator = _exact_det([[xi ** (m - 1 - j) for j in range(m)] for xi in xs])
    if denominator == 0:
        raise SingularEvaluationError("Vandermonde denominator vanished")
    return numerator / denominator


def random_points(m: int, rng: np.random.Generator, bound: int = 100) -> list[Fraction]:
    """m distinct small rationals p/q with |p|, q <= bound."""
    points: list[Fraction] = []
    while len(points) < m:
        candidate = Fraction(
            int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1))
        )
        if candidate not in points:
            points.append(candidate)
    return points


def verify_expansion(
    lam: Partition | Sequence[int],
    mu: Partition | Sequence[int],
    trials: int = 5,
    seed: int | np.random.Generator | None = 0,
    variables: int | None = None,
) -> bool:
    """
    Check s_lam * s_mu == sum_nu c_{lam mu}^nu s_nu exactly at `trials`
    random rational points.

    Parameters
    ----------
    variables:
        Number of variables m; defaults to len(lam) + len(mu) (at least 1),
        which keeps every nu with a non-zero coefficient.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    lam, mu = as_partition(lam), as_partition(mu)
    m = variables if variables is not None else max(len(lam) + len(mu), 1)
    if m < max(len(lam), len(mu)):
        raise DimensionError(f"{m} variables cannot carry {lam} and {mu}")

    rng = np.random.default_rng(seed)
    expansion = product_expansion(lam, mu, max_parts=m)
    for _ in range(trials):
        xs = random_points(m, rng)
        lhs = schur_eval(lam, xs) * schur_eval(mu, xs)
        rhs = sum((c * schur_eval(nu, xs) for nu, c in expansion.items()), Fraction(0))
        if lhs != rhs:
            logger.warning("expansion of s_%s * s_%s fails at %s", lam, mu, xs)
            return False
    return True
