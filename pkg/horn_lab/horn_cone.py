"""
Horn cone Delta(n).

Responsible for:
- Enumerating the inequalities sum_I alpha + sum_J beta + sum_K gamma <= 0
  attached to triples (I, J, K) with c_{IJ}^{K^vee} >= 1, facets being those
  with coefficient 1.
- Testing membership of spectral triples, with a violated constraint as
  certificate.
- Classifying constraints as facets by exact LP: a constraint is a facet
  when some point satisfies it with equality while every other constraint
  and every chamber inequality holds strictly.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .combinatorics.partitions import SubsetIndex
from .combinatorics.tableaux import triple_intersection
from .combinatorics.utils import format_triple
from .errors import DimensionError
from .lp import LPConfig, maximize

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, int, float]


@dataclass(frozen=True)
class SpectrumPoint:
    """
    A point (alpha, beta, gamma) of E(n) = R^{3n}.

    Entries are exact (`Fraction`/`int`) or floating. Nothing forces the
    sequences to be decreasing; `in_chamber` tests membership in E(n)^+.
    """

    alpha: Tuple[Scalar, ...]
    beta: Tuple[Scalar, ...]
    gamma: Tuple[Scalar, ...]

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not len(self.alpha) == len(self.beta) == len(self.gamma):
            raise DimensionError(
                "alpha, beta, gamma must have equal length, got "
                f"{len(self.alpha)}, {len(self.beta)}, {len(self.gamma)}"
            )

    @classmethod
    def zero(cls, n: int) -> "SpectrumPoint":
        z = (Fraction(0),) * n
        return cls(z, z, z)

    @classmethod
    def from_coordinates(cls, coords: Sequence[Scalar], n: int) -> "SpectrumPoint":
        if len(coords) != 3 * n:
            raise DimensionError(f"Expected {3 * n} coordinates, got {len(coords)}")
        return cls(tuple(coords[:n]), tuple(coords[n : 2 * n]), tuple(coords[2 * n :]))

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def blocks(self) -> Tuple[Tuple[Scalar, ...], ...]:
        return (self.alpha, self.beta, self.gamma)

    @property
    def is_exact(self) -> bool:
        return not any(isinstance(v, float) for v in self.coordinates())

    def coordinates(self) -> Tuple[Scalar, ...]:
        return self.alpha + self.beta + self.gamma

    def trace(self) -> Scalar:
        return sum(self.coordinates())

    def in_chamber(self, strict: bool = False, tolerance: float = 0.0) -> bool:
        """E(n)^+ (weakly decreasing) or, with strict=True, E(n)^{++}."""
        for seq in self.blocks:
            for a, b in zip(seq, seq[1:]):
                gap = a - b
                if strict and not gap > 0:
                    return False
                if gap < -tolerance:
                    return False
        return True

    def chamber_gaps(self) -> List[Scalar]:
        return [a - b for seq in self.blocks for a, b in zip(seq, seq[1:])]

    def scaled(self, factor: Scalar) -> "SpectrumPoint":
        return SpectrumPoint(*(tuple(factor * v for v in seq) for seq in self.blocks))

    def shifted(self, a: Scalar, b: Scalar, c: Scalar) -> "SpectrumPoint":
        """Add a to every alpha_i, b to every beta_i and c to every gamma_i."""
        return SpectrumPoint(
            tuple(v + a for v in self.alpha),
            tuple(v + b for v in self.beta),
            tuple(v + c for v in self.gamma),
        )

    def __add__(self, other: "SpectrumPoint") -> "SpectrumPoint":
        if other.n != self.n:
            raise DimensionError(f"Cannot add points of size {self.n} and {other.n}")
        return SpectrumPoint.from_coordinates(
            [x + y for x, y in zip(self.coordinates(), other.coordinates())], self.n
        )


def relabel(point: SpectrumPoint, order: Sequence[int]) -> SpectrumPoint:
    """Permute the roles of (alpha, beta, gamma); `order` is a permutation of 0..2."""
    if sorted(order) != [0, 1, 2]:
        raise ValueError(f"order must be a permutation of (0, 1, 2), got {order}")
    return SpectrumPoint(*(point.blocks[o] for o in order))


@dataclass(frozen=True)
class LinearForm:
    """Linear constraint form(x) <= 0 over the 3n coordinates."""

    coefficients: Tuple[int, ...]
    name: str = field(default="", compare=False)

    @property
    def n(self) -> int:
        return len(self.coefficients) // 3

    def evaluate(self, point: SpectrumPoint) -> Scalar:
        coords = point.coordinates()
        if len(coords) != len(self.coefficients):
            raise DimensionError(
                f"Form over E({self.n}) evaluated at a point of E({point.n})"
            )
        return sum(c * x for c, x in zip(self.coefficients, coords) if c)


class FacetStatus(str, Enum):
    FACET = "facet"
    REDUNDANT = "redundant"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class HornInequality:
    """
    sum_{i in I} alpha_i + sum_{j in J} beta_j + sum_{k in K} gamma_k <= 0,
    valid on Delta(n) because `coefficient` = c_{IJ}^{K^vee} >= 1.
    """

    i: SubsetIndex
    j: SubsetIndex
    k: SubsetIndex
    coefficient: int
    status: FacetStatus = FacetStatus.UNCLASSIFIED

    @property
    def r(self) -> int:
        return self.i.r

    @property
    def n(self) -> int:
        return self.i.n

    @property
    def label(self) -> str:
        return format_triple(self.i, self.j, self.k)

    def form(self) -> LinearForm:
        n = self.n
        coeffs = [0] * (3 * n)
        for block, subset in enumerate((self.i, self.j, self.k)):
            for e in subset:
                coeffs[block * n + e - 1] = 1
        return LinearForm(tuple(coeffs), name=self.label)

    def evaluate(self, point: SpectrumPoint) -> Scalar:
        if point.n != self.n:
            raise DimensionError(
                f"Inequality for n={self.n} evaluated at a point with n={point.n}"
            )
        return (
            sum(point.alpha[e - 1] for e in self.i)
            + sum(point.beta[e - 1] for e in self.j)
            + sum(point.gamma[e - 1] for e in self.k)
        )


def chamber_constraints(n: int) -> List[LinearForm]:
    """alpha_{i+1} - alpha_i <= 0, then beta, then gamma; 3(n-1) forms."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    forms: List[LinearForm] = []
    for block, letter in enumerate("abc"):
        for i in range(n - 1):
            coeffs = [0] * (3 * n)
            coeffs[block * n + i] = -1
            coeffs[block * n + i + 1] = 1
            forms.append(LinearForm(tuple(coeffs), name=f"{letter}{i + 1}>={letter}{i + 2}"))
    return forms


def trace_form(n: int) -> LinearForm:
    return LinearForm((1,) * (3 * n), name="trace")


@lru_cache(maxsize=None)
def _horn_system(n: int) -> Tuple[HornInequality, ...]:
    system: List[HornInequality] = []
    for r in range(1, n):
        subsets = [
            SubsetIndex(n, c) for c in itertools.combinations(range(1, n + 1), r)
        ]
        by_codim: Dict[int, List[SubsetIndex]] = {}
        for s in subsets:
            by_codim.setdefault(s.codimension, []).append(s)
        top = r * (n - r)
        for i in subsets:
            for j in subsets:
                needed = top - i.codimension - j.codimension
                for k in by_codim.get(needed, ()):
                    c = triple_intersection(i, j, k)
                    if c >= 1:
                        system.append(HornInequality(i, j, k, c))
    logger.debug("Delta(%d): %d inequalities with coefficient >= 1", n, len(system))
    return tuple(system)


def enumerate_inequalities(n: int, facets_only: bool = False) -> List[HornInequality]:
    """
    Horn inequalities of Delta(n), ordered by r, then lexicographically on I, J, K.

    Every triple of r-subsets (1 <= r <= n - 1) with c_{IJ}^{K^vee} >= 1 is
    listed; with `facets_only` only those with coefficient 1. For n = 1 the
    list is empty (Delta(1) is cut out by the trace alone).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    system = _horn_system(n)
    if facets_only:
        return [h for h in system if h.coefficient == 1]
    return list(system)


@dataclass
class MembershipConfig:
    """Tolerances applied only to floating points."""

    slack_tolerance: float = 1e-8
    trace_tolerance: float = 1e-9


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    reason: Optional[str] = None  # "chamber" | "trace" | "inequality"
    certificate: Optional[HornInequality] = None
    value: Optional[Scalar] = None

    def __bool__(self) -> bool:
        return self.member


def is_member(
    point: SpectrumPoint,
    system: Optional[Sequence[HornInequality]] = None,
    config: MembershipConfig | None = None,
) -> MembershipVerdict:
    """
    Decide whether `point` lies in Delta(n).

    Checks E(n)^+, the trace hyperplane E_0(n) and every inequality of
    `system` (default: the facets of Delta(n)). Exact points are compared
    exactly; floating points with the tolerances of `config`.

    Raises
    ------
    DimensionError
        If the system was enumerated for a different n.
    """
    if config is None:
        config = MembershipConfig()
    if system is None:
        system = enumerate_inequalities(point.n, facets_only=True)
    if any(h.n != point.n for h in system):
        raise DimensionError(f"System does not belong to Delta({point.n})")

    exact = point.is_exact
    slack_tol = 0 if exact else config.slack_tolerance
    trace_tol = 0 if exact else config.trace_tolerance

    if not point.in_chamber(tolerance=slack_tol):
        return MembershipVerdict(False, "chamber")
    trace = point.trace()
    if abs(trace) > trace_tol:
        return MembershipVerdict(False, "trace", value=trace)
    for h in system:
        value = h.evaluate(point)
        if value > slack_tol:
            return MembershipVerdict(False, "inequality", h, value)
    return MembershipVerdict(True)


def max_min_slack(
    target: LinearForm,
    strict: Sequence[LinearForm],
    n: int,
    weak: Sequence[LinearForm] = (),
    config: LPConfig | None = None,
) -> Fraction:
    """
    max t such that target(x) = 0, trace(x) = 0, f(x) + t <= 0 for f in
    `strict`, g(x) <= 0 for g in `weak`, inside the box |x_i| <= bound, t <= bound.

    x is free, so it is split as x = x_plus - x_minus; t >= 0, and the
    origin is feasible, so the optimum is >= 0.
    """
    if config is None:
        config = LPConfig()
    dim = 3 * n
    bound = Fraction(config.bound)

    def _row(coeffs: Sequence[int], t_coef: int) -> List[int]:
        return list(coeffs) + [-c for c in coeffs] + [t_coef]

    A: List[List[int]] = []
    b: List[Fraction] = []
    for f in strict:
        A.append(_row(f.coefficients, 1))
        b.append(Fraction(0))
    for g in weak:
        A.append(_row(g.coefficients, 0))
        b.append(Fraction(0))
    for eq in (target, trace_form(n)):
        A.append(_row(eq.coefficients, 0))
        A.append(_row([-c for c in eq.coefficients], 0))
        b.extend([Fraction(0), Fraction(0)])
    for idx in range(dim):
        unit = [0] * dim
        unit[idx] = 1
        A.append(_row(unit, 0))
        A.append(_row([-u for u in unit], 0))
        b.extend([bound, bound])
    A.append([0] * (2 * dim) + [1])
    b.append(bound)

    objective = [0] * (2 * dim) + [1]
    result = maximize(objective, A, b, config)
    logger.debug(
        "min-slack LP for %s: %s value=%s (%d pivots)",
        target.name, result.status, result.value, result.pivots,
    )
    if result.value is None:
        raise RuntimeError(f"min-slack LP for {target.name} ended {result.status}")
    return result.value


def _as_form(target: HornInequality | LinearForm) -> LinearForm:
    return target.form() if isinstance(target, HornInequality) else target


def classify_facet(
    target: HornInequality | LinearForm,
    system: Optional[Sequence[HornInequality]] = None,
    config: LPConfig | None = None,
) -> FacetStatus:
    """
    Facet iff some point satisfies `target` with equality while all other
    inequalities of `system` (default: every coefficient >= 1 inequality)
    and all chamber inequalities hold strictly.
    """
    form = _as_form(target)
    n = form.n
    if system is None:
        system = enumerate_inequalities(n)
    others = [h.form() for h in system] + chamber_constraints(n)
    others = [f for f in others if f != form]
    slack = max_min_slack(form, others, n, config=config)
    return FacetStatus.FACET if slack > 0 else FacetStatus.REDUNDANT


def classify_inequalities(
    n: int,
    facets_only: bool = False,
    config: LPConfig | None = None,
) -> List[HornInequality]:
    """Enumerated inequalities with `status` decided by `classify_facet`."""
    full = enumerate_inequalities(n)
    chosen = enumerate_inequalities(n, facets_only=facets_only)
    return [replace(h, status=classify_facet(h, full, config)) for h in chosen]


def classify_chamber_facets(
    n: int,
    config: LPConfig | None = None,
) -> List[Tuple[LinearForm, FacetStatus]]:
    """Classify each chamber hyperplane alpha_i = alpha_{i+1} (and beta, gamma)."""
    full = enumerate_inequalities(n)
    return [(f, classify_facet(f, full, config)) for f in chamber_constraints(n)]


def face_meets_open_chamber(
    i: SubsetIndex,
    j: SubsetIndex,
    k: SubsetIndex,
    config: LPConfig | None = None,
) -> bool:
    """
    Whether the face cut out of Delta(n) by the (I, J, K) form contains a
    point of E(n)^{++}.
    """
    n = i.n
    target = HornInequality(i, j, k, triple_intersection(i, j, k)).form()
    weak = [h.form() for h in enumerate_inequalities(n) if h.form() != target]
    slack = max_min_slack(target, chamber_constraints(n), n, weak=weak, config=config)
    return slack > 0


def first_multiplicity_face(max_n: int) -> Optional[Tuple[int, HornInequality]]:
    """Smallest n <= max_n with an inequality of coefficient > 1, and its first such triple."""
    for n in range(2, max_n + 1):
        for h in enumerate_inequalities(n):
            if h.coefficient > 1:
                return n, h
    return None
