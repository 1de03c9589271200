"""
Faces of Delta(n) cut out by a Horn triple (I, J, K).

rho splits a point of E(n) into its (I, J, K) coordinates and the
complementary ones; a point of E(n)^+ lies on the face where the (I, J, K)
form vanishes exactly when both halves are members of Delta(r) and
Delta(n - r). The inverse map interleaves two block spectra, which is how
face points are produced: as spectra of block-diagonal triples.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy

from .combinatorics.partitions import SubsetIndex, same_shape
from .combinatorics.tableaux import triple_intersection
from .errors import (
    DimensionError,
    InsufficientSamplesError,
    NotInChamberError,
    PreconditionError,
)
from .horn_cone import (
    HornInequality,
    LinearForm,
    Scalar,
    SpectrumPoint,
    chamber_constraints,
    enumerate_inequalities,
    is_member,
    trace_form,
)
from .lp import maximize
from .spectra import Seed, rational_member

logger = logging.getLogger(__name__)

Window = Tuple[Optional[Fraction], Optional[Fraction]]


@dataclass
class FaceSamplingConfig:
    max_attempts: int = 200
    scale_range: float = 8.0  # r-block scale factor drawn log-uniformly in [1/x, x]
    allow_ties: bool = True  # face_dimension falls back to weakly interleaved points
    objective_range: int = 9


def _block_shape(i: SubsetIndex, j: SubsetIndex, k: SubsetIndex) -> Tuple[int, int]:
    return same_shape((i, j, k))


def _member(
    q: SpectrumPoint,
    system: Optional[Sequence[HornInequality]],
) -> bool:
    if q.n == 0:
        return True
    return bool(is_member(q, system))


def rho(
    point: SpectrumPoint,
    i: SubsetIndex,
    j: SubsetIndex,
    k: SubsetIndex,
) -> Tuple[SpectrumPoint, SpectrumPoint]:
    """
    ((alpha_I, beta_J, gamma_K), (alpha_I^c, beta_J^c, gamma_K^c)).

    Selected coordinates keep their relative order, so a point of E(n)^+
    maps into E(r)^+ x E(n - r)^+.
    """
    r, n = _block_shape(i, j, k)
    if point.n != n:
        raise DimensionError(f"Triple over n={n} applied to a point with n={point.n}")
    inside, outside = [], []
    for seq, subset in zip(point.blocks, (i, j, k)):
        inside.append(tuple(seq[e - 1] for e in subset))
        outside.append(tuple(seq[e - 1] for e in subset.complement()))
    return SpectrumPoint(*inside), SpectrumPoint(*outside)


def assemble_block_spectrum(
    q_r: SpectrumPoint,
    q_s: SpectrumPoint,
    i: SubsetIndex,
    j: SubsetIndex,
    k: SubsetIndex,
    system_r: Optional[Sequence[HornInequality]] = None,
    system_s: Optional[Sequence[HornInequality]] = None,
    check_membership: bool = True,
) -> SpectrumPoint:
    """
    Inverse of `rho`: place q_r at positions (I, J, K) and q_s at the
    complements.

    The result is the spectrum of diag(A', A''), diag(B', B''), diag(C', C'')
    whenever q_r and q_s are spectra of (A', B', C') and (A'', B'', C'').

    Raises
    ------
    PreconditionError
        If `check_membership` and q_r is not in Delta(r) or q_s not in Delta(n - r).
    NotInChamberError
        If the interleaved sequences are not weakly decreasing.
    """
    r, n = _block_shape(i, j, k)
    if q_r.n != r or q_s.n != n - r:
        raise DimensionError(
            f"Blocks of sizes {q_r.n} and {q_s.n} do not fit r={r}, n={n}"
        )
    if check_membership:
        if not _member(q_r, system_r):
            raise PreconditionError(f"r-block is not a member of Delta({r})")
        if not _member(q_s, system_s):
            raise PreconditionError(f"complementary block is not a member of Delta({n - r})")

    blocks = []
    for inner, outer, subset in zip(q_r.blocks, q_s.blocks, (i, j, k)):
        seq: List[Scalar] = [Fraction(0)] * n
        for value, e in zip(inner, subset):
            seq[e - 1] = value
        for value, e in zip(outer, subset.complement()):
            seq[e - 1] = value
        blocks.append(tuple(seq))
    point = SpectrumPoint(*blocks)
    if not point.in_chamber():
        raise NotInChamberError(
            f"Interleaving at {i}{j}{k} is not weakly decreasing: {point}"
        )
    return point


def on_face(
    point: SpectrumPoint,
    i: SubsetIndex,
    j: SubsetIndex,
    k: SubsetIndex,
    system_r: Optional[Sequence[HornInequality]] = None,
    system_s: Optional[Sequence[HornInequality]] = None,
) -> bool:
    """
    Face membership through the splitting: both rho components are members
    of their cones.

    Raises
    ------
    PreconditionError
        If `point` is not in E(n)^+; the criterion is stated only there.
    """
    if not point.in_chamber():
        raise PreconditionError("on_face needs a weakly decreasing point")
    q_r, q_s = rho(point, i, j, k)
    return _member(q_r, system_r) and _member(q_s, system_s)


def on_face_direct(
    point: SpectrumPoint,
    i: SubsetIndex,
    j: SubsetIndex,
    k: SubsetIndex,
    system: Optional[Sequence[HornInequality]] = None,
) -> bool:
    """is_member(point) and the (I, J, K) form vanishes at it."""
    _block_shape(i, j, k)
    form = HornInequality(i, j, k, coefficient=0).evaluate(point)
    return form == 0 and bool(is_member(point, system))


def _shift_window(
    inner: Sequence[Fraction],
    outer: Sequence[Fraction],
    positions: Sequence[int],
) -> Window:
    """
    Interval of shifts x such that inner + x interleaves with outer at
    `positions` (1-based) and stays weakly decreasing; None means unbounded.
    """
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None
    for idx, pos in enumerate(positions):
        above = pos - 1 - idx
        if above < len(outer):
            lo = outer[above] - inner[idx]
            lower = lo if lower is None else max(lower, lo)
        if above >= 1:
            hi = outer[above - 1] - inner[idx]
            upper = hi if upper is None else min(upper, hi)
    return lower, upper


def _random_fraction(rng: np.random.Generator, low: float, high: float) -> Fraction:
    return Fraction(float(rng.uniform(low, high))).limit_denominator(1000)


def fit_block_shift(
    q_r: SpectrumPoint,
    q_s: SpectrumPoint,
    i: SubsetIndex,
    j: SubsetIndex,
    k: SubsetIndex,
    rng: Optional[np.random.Generator] = None,
) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    """
    Trace-free (a, b, c) such that q_r shifted by (a, b, c) interleaves
    strictly with q_s at (I, J, K), or None when the windows do not allow it.

    Without `rng` the shift is the point of the window box on the plane
    a + b + c = 0 along its main diagonal; with `rng` it is randomly moved
    inside the box along that plane.
    """
    windows = [
        _shift_window(inner, outer, subset.elements)
        for inner, outer, subset in zip(q_r.blocks, q_s.blocks, (i, j, k))
    ]
    finite = [abs(x) for w in windows for x in w if x is not None]
    spread = 1 + sum(finite, Fraction(0))

    lows: List[Fraction] = []
    highs: List[Fraction] = []
    for lo, hi in windows:
        if lo is None and hi is None:
            lo, hi = -spread, spread
        elif lo is None:
            lo = hi - spread
        elif hi is None:
            hi = lo + spread
        if not lo < hi:
            return None
        lows.append(lo)
        highs.append(hi)

    total_low, total_high = sum(lows), sum(highs)
    if not total_low < 0 < total_high:
        return None
    widths = [hi - lo for lo, hi in zip(lows, highs)]
    theta = -total_low / (total_high - total_low)
    offsets = [Fraction(0)] * 3
    if rng is not None:
        # |offset| < min(theta, 1 - theta) / 4 keeps every coefficient in (0, 1)
        radius = min(theta, 1 - theta) / 4
        offsets = [_random_fraction(rng, -1, 1) * radius for _ in range(3)]
        theta -= sum(o * w for o, w in zip(offsets, widths)) / sum(widths)
    return tuple(lo + (theta + o) * w for lo, o, w in zip(lows, offsets, widths))


def sample_face_point(
    i: SubsetIndex,
    j: SubsetIndex,
    k: SubsetIndex,
    seed: Seed = None,
    config: FaceSamplingConfig | None = None,
) -> SpectrumPoint:
    """
    Exact point of E(n)^{++} on the (I, J, K) face.

    Draws rational members of Delta(r) and Delta(n - r), rescales the r-block
    and shifts it into the interleaving window, then assembles.

    Raises
    ------
    InsufficientSamplesError
        When `config.max_attempts` draws all fail.
    """
    if config is None:
        config = FaceSamplingConfig()
    r, n = _block_shape(i, j, k)
    if r == n:
        raise PreconditionError("The full index set does not cut out a proper face")
    rng = np.random.default_rng(seed)
    system_r = enumerate_inequalities(r, facets_only=True)
    system_s = enumerate_inequalities(n - r, facets_only=True)
    log_range = math.log(config.scale_range)

    for attempt in range(config.max_attempts):
        q_r = rational_member(r, rng, system_r)
        q_s = rational_member(n - r, rng, system_s)
        if q_r is None or q_s is None:
            continue
        factor = Fraction(math.exp(rng.uniform(-log_range, log_range))).limit_denominator(1000)
        q_r = q_r.scaled(factor)
        shift = fit_block_shift(q_r, q_s, i, j, k, rng)
        if shift is None:
            logger.debug("attempt %d at %s%s%s: no interleaving window", attempt, i, j, k)
            continue
        try:
            point = assemble_block_spectrum(
                q_r.shifted(*shift), q_s, i, j, k, system_r, system_s
            )
        except NotInChamberError:
            continue
        if point.in_chamber(strict=True):
            return point
    raise InsufficientSamplesError(0, 1)


def _lift(form: LinearForm, positions: Sequence[Sequence[int]], n: int) -> List[int]:
    """Coefficients of `form` (over a block of size m) placed at `positions` in E(n)."""
    m = form.n
    coeffs = [0] * (3 * n)
    for block, subset in enumerate(positions):
        for idx, e in enumerate(subset):
            coeffs[block * n + e - 1] = form.coefficients[block * m + idx]
    return coeffs


def _pair_constraints(
    i: SubsetIndex,
    j: SubsetIndex,
    k: SubsetIndex,
) -> Tuple[List[List[int]], List[List[int]]]:
    """
    (inequalities, equalities) over E(n) for weakly decreasing points whose
    rho components lie in Delta(r) and Delta(n - r).
    """
    r, n = _block_shape(i, j, k)
    inner = [s.elements for s in (i, j, k)]
    outer = [s.complement() for s in (i, j, k)]
    rows = [list(f.coefficients) for f in chamber_constraints(n)]
    equalities = []
    for m, positions in ((r, inner), (n - r, outer)):
        rows.extend(
            _lift(h.form(), positions, n)
            for h in enumerate_inequalities(m, facets_only=True)
        )
        equalities.append(_lift(trace_form(m), positions, n))
    return rows, equalities


def sample_weak_face_point(
    i: SubsetIndex,
    j: SubsetIndex,
    k: SubsetIndex,
    seed: Seed = None,
    config: FaceSamplingConfig | None = None,
) -> SpectrumPoint:
    """
    Exact point of the (I, J, K) face in E(n)^+, ties between the two
    blocks allowed.

    Maximizes a random integer objective over the assembled pairs
    (q_r, q_s) in Delta(r) x Delta(n - r) whose interleaving is weakly
    decreasing, inside the unit box. Optima are vertices of that polytope,
    so repeated draws span the face even where it misses E(n)^{++}.
    """
    if config is None:
        config = FaceSamplingConfig()
    r, n = _block_shape(i, j, k)
    if r == n:
        raise PreconditionError("The full index set does not cut out a proper face")
    rng = np.random.default_rng(seed)
    rows, equalities = _pair_constraints(i, j, k)
    dim = 3 * n

    A: List[List[int]] = []
    b: List[Fraction] = []
    for row in rows:
        A.append(row + [-c for c in row])
        b.append(Fraction(0))
    for eq in equalities:
        A.append(eq + [-c for c in eq])
        A.append([-c for c in eq] + eq)
        b.extend([Fraction(0), Fraction(0)])
    for idx in range(dim):
        unit = [0] * dim
        unit[idx] = 1
        A.append(unit + [0] * dim)
        A.append([0] * dim + unit)
        b.extend([Fraction(1), Fraction(1)])

    for _ in range(config.max_attempts):
        weights = [int(w) for w in rng.integers(-config.objective_range, config.objective_range + 1, dim)]
        if not any(weights):
            continue
        result = maximize(weights + [-w for w in weights], A, b)
        if result.value is None:
            break
        coords = [p - m for p, m in zip(result.solution[:dim], result.solution[dim:])]
        return SpectrumPoint.from_coordinates(coords, n)
    raise InsufficientSamplesError(0, 1)


def affine_rank(points: Sequence[SpectrumPoint]) -> int:
    """Rank of {p - p_0}, computed exactly over the rationals."""
    if len(points) < 2:
        return 0
    base = points[0].coordinates()
    rows = [
        [sympy.Rational(Fraction(x - y).numerator, Fraction(x - y).denominator)
         for x, y in zip(p.coordinates(), base)]
        for p in points[1:]
    ]
    return int(sympy.Matrix(rows).rank())


def face_dimension(
    i: SubsetIndex,
    j: SubsetIndex,
    k: SubsetIndex,
    sample_count: Optional[int] = None,
    seed: Seed = None,
    config: FaceSamplingConfig | None = None,
) -> int:
    """
    Affine rank of `sample_count` (default 3n + 2) sampled face points.

    Points are drawn in E(n)^{++} first. If the face has none there and
    `config.allow_ties` is set, the remaining points come from
    `sample_weak_face_point`.

    Raises
    ------
    PreconditionError
        If the triple carries no Horn inequality.
    InsufficientSamplesError
        If fewer than `sample_count` points could be generated.
    """
    if config is None:
        config = FaceSamplingConfig()
    _, n = _block_shape(i, j, k)
    if triple_intersection(i, j, k) < 1:
        raise PreconditionError(f"{i}{j}{k} does not give a Horn inequality")
    if sample_count is None:
        sample_count = 3 * n + 2
    rng = np.random.default_rng(seed)
    sampler = sample_face_point
    points: List[SpectrumPoint] = []
    while len(points) < sample_count:
        try:
            points.append(sampler(i, j, k, rng, config))
        except InsufficientSamplesError:
            if sampler is sample_face_point and config.allow_ties:
                logger.info("face %s%s%s: no strict points, sampling with ties", i, j, k)
                sampler = sample_weak_face_point
                continue
            raise InsufficientSamplesError(len(points), sample_count) from None
    rank = affine_rank(points)
    logger.info("face %s%s%s of Delta(%d): affine rank %d", i, j, k, n, rank)
    return rank


def direct_sum(points: Sequence[SpectrumPoint]) -> SpectrumPoint:
    """Spectrum of the block-diagonal sum: each block's values merged and sorted."""
    if not points:
        raise ValueError("direct_sum needs at least one point")
    return SpectrumPoint(
        *(
            tuple(sorted((v for p in points for v in p.blocks[b]), reverse=True))
            for b in range(3)
        )
    )
