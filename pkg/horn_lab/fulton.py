"""
Fulton-property verification.

Phase 1 (combinatorial):
- Enumerate triples with c_{lam mu}^nu = 1 and check that every scaled
  coefficient c_{N lam, N mu}^{N nu} is again 1.
- Spot-check saturation: c_{N lam, N mu}^{N nu} != 0 implies c_{lam mu}^nu != 0.

Phase 2 (geometric):
- `geometric_trace` runs the face-based argument on one instance, step by
  step: the facet of Delta(n) attached to (lam, mu, nu) is sampled, its
  complementary block is replaced by N perturbed copies, and the resulting
  point of E(n'')^{++} on the scaled face forces the scaled coefficient to 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .combinatorics.partitions import (
    Partition,
    as_partition,
    dual_subset,
    from_subset,
    minimal_ambient,
    scale,
    to_subset,
    weight,
)
from .combinatorics.tableaux import lr_coefficient, schubert_constant
from .combinatorics.utils import partitions_up_to
from .errors import HypothesisError, InsufficientSamplesError, TraceStepError
from .face_geometry import (
    FaceSamplingConfig,
    assemble_block_spectrum,
    direct_sum,
    on_face,
    rho,
    sample_face_point,
)
from .horn_cone import (
    FacetStatus,
    HornInequality,
    SpectrumPoint,
    classify_facet,
    enumerate_inequalities,
)
from .spectra import Seed, rational_member

logger = logging.getLogger(__name__)

Triple = Tuple[Partition, Partition, Partition]


def enumerate_lr_one_triples(max_weight: int, max_parts: int) -> List[Triple]:
    """
    All (lam, mu, nu) with at most `max_parts` parts, |nu| <= max_weight,
    |lam| + |mu| = |nu| and c_{lam mu}^nu = 1.

    Ordered by nu (weight, then reverse-lex), then lam, then mu.
    """
    if max_weight < 0 or max_parts < 1:
        raise ValueError("max_weight must be >= 0 and max_parts >= 1")
    shapes = partitions_up_to(max_weight, max_parts)
    triples: List[Triple] = []
    for nu in shapes:
        for lam in shapes:
            if weight(lam) > weight(nu) or not nu.contains(lam):
                continue
            for mu in shapes:
                if weight(lam) + weight(mu) != weight(nu):
                    continue
                if lr_coefficient(lam, mu, nu) == 1:
                    triples.append((lam, mu, nu))
    logger.debug(
        "%d triples with coefficient 1 (weight <= %d, parts <= %d)",
        len(triples), max_weight, max_parts,
    )
    return triples


@dataclass(frozen=True)
class FultonReport:
    lam: Partition
    mu: Partition
    nu: Partition
    coefficients: Tuple[int, ...]  # c at N = 1, 2, ...

    @property
    def passed(self) -> bool:
        return all(c == 1 for c in self.coefficients)


def _require_multiplicity_one(lam: Partition, mu: Partition, nu: Partition) -> None:
    c = lr_coefficient(lam, mu, nu)
    if c != 1:
        raise HypothesisError(
            f"c_{{{lam}; {mu}}}^{{{nu}}} = {c}, expected 1", coefficient=c
        )


def verify_fulton(
    lam: Partition | Sequence[int],
    mu: Partition | Sequence[int],
    nu: Partition | Sequence[int],
    n_max: int,
) -> FultonReport:
    """
    Scaled coefficients c_{N lam, N mu}^{N nu} for N = 1..n_max.

    Raises
    ------
    HypothesisError
        If c_{lam mu}^nu != 1; the actual coefficient is attached.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    _require_multiplicity_one(lam, mu, nu)
    coefficients = tuple(
        lr_coefficient(scale(lam, N), scale(mu, N), scale(nu, N))
        for N in range(1, n_max + 1)
    )
    return FultonReport(lam, mu, nu, coefficients)


def verify_saturation(
    lam: Partition | Sequence[int],
    mu: Partition | Sequence[int],
    nu: Partition | Sequence[int],
    N: int,
) -> bool:
    """c_{N lam, N mu}^{N nu} != 0 implies c_{lam mu}^nu != 0."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if lr_coefficient(scale(lam, N), scale(mu, N), scale(nu, N)) == 0:
        return True
    return lr_coefficient(lam, mu, nu) != 0


@dataclass
class SweepConfig:
    max_weight: int = 6
    max_parts: int = 3
    n_max: int = 3
    workers: int = 1


def _fulton_rows(args: Tuple[Triple, int]) -> List[Dict[str, object]]:
    (lam, mu, nu), n_max = args
    report = verify_fulton(lam, mu, nu, n_max)
    return [
        {
            "lambda": str(lam),
            "mu": str(mu),
            "nu": str(nu),
            "N": N,
            "coefficient": c,
            "passed": c == 1,
        }
        for N, c in enumerate(report.coefficients, start=1)
    ]


def _saturation_rows(args: Tuple[Triple, int]) -> List[Dict[str, object]]:
    (lam, mu, nu), n_max = args
    rows = []
    for N in range(1, n_max + 1):
        if not verify_saturation(lam, mu, nu, N):
            rows.append(
                {
                    "lambda": str(lam),
                    "mu": str(mu),
                    "nu": str(nu),
                    "N": N,
                    "scaled_coefficient": lr_coefficient(
                        scale(lam, N), scale(mu, N), scale(nu, N)
                    ),
                }
            )
    return rows


def _run_parallel(func, tasks: Sequence, workers: int) -> List[Dict[str, object]]:
    """Apply `func` to every task; results keep task order for any worker count."""
    if workers <= 1:
        chunks: Iterable[List[Dict[str, object]]] = map(func, tasks)
        return [row for chunk in chunks for row in chunk]
    with Pool(processes=workers) as pool:
        return [row for chunk in pool.imap(func, tasks, chunksize=8) for row in chunk]


def fulton_sweep(config: SweepConfig | None = None) -> pd.DataFrame:
    """
    One row per (triple, N) over all coefficient-1 triples within the
    configured bounds; `passed` is False where the scaled coefficient is not 1.
    """
    if config is None:
        config = SweepConfig()
    triples = enumerate_lr_one_triples(config.max_weight, config.max_parts)
    rows = _run_parallel(_fulton_rows, [(t, config.n_max) for t in triples], config.workers)
    table = pd.DataFrame(rows, columns=["lambda", "mu", "nu", "N", "coefficient", "passed"])
    logger.info(
        "Fulton sweep: %d triples, %d failures",
        len(triples), int((~table["passed"]).sum()) if len(table) else 0,
    )
    return table


def saturation_sweep(config: SweepConfig | None = None) -> pd.DataFrame:
    """Saturation violations over every weight-compatible triple; expected empty."""
    if config is None:
        config = SweepConfig()
    shapes = partitions_up_to(config.max_weight, config.max_parts)
    triples = [
        (lam, mu, nu)
        for nu in shapes
        for lam in shapes
        for mu in shapes
        if weight(lam) + weight(mu) == weight(nu)
    ]
    rows = _run_parallel(
        _saturation_rows, [(t, config.n_max) for t in triples], config.workers
    )
    return pd.DataFrame(rows, columns=["lambda", "mu", "nu", "N", "scaled_coefficient"])


@dataclass
class TraceConfig:
    face_samples: int = 4
    retry_cap: int = 100
    epsilon_divisor: int = 10
    face_sampling: FaceSamplingConfig = field(default_factory=FaceSamplingConfig)


@dataclass(frozen=True)
class TraceStep:
    index: int
    name: str
    detail: str


@dataclass
class TraceReport:
    lam: Partition
    mu: Partition
    nu: Partition
    N: int
    n: int = 0
    r: int = 0
    steps: List[TraceStep] = field(default_factory=list)
    point: Optional[SpectrumPoint] = None

    @property
    def passed(self) -> bool:
        return len(self.steps) == 7

    def record(self, index: int, name: str, detail: str) -> None:
        logger.info("trace step %d (%s): %s", index, name, detail)
        self.steps.append(TraceStep(index, name, detail))


def _check(step: int, condition: bool, predicate: str) -> None:
    if not condition:
        raise TraceStepError(step, predicate)


def _normalized_member(
    n: int,
    rng: np.random.Generator,
) -> Optional[SpectrumPoint]:
    """Rational member of Delta(n) scaled to max |coordinate| = 1."""
    q = rational_member(n, rng, enumerate_inequalities(n, facets_only=True))
    if q is None:
        return None
    size = max(abs(v) for v in q.coordinates())
    return q.scaled(1 / size) if size else None


def _average(points: Sequence[SpectrumPoint]) -> SpectrumPoint:
    total = points[0]
    for p in points[1:]:
        total = total + p
    return total.scaled(Fraction(1, len(points)))


def geometric_trace(
    lam: Partition | Sequence[int],
    mu: Partition | Sequence[int],
    nu: Partition | Sequence[int],
    N: int,
    seed: Seed = None,
    config: TraceConfig | None = None,
) -> TraceReport:
    """
    Execute the face-based argument that c_{lam mu}^nu = 1 forces
    c_{N lam, N mu}^{N nu} = 1, asserting every step.

    Steps
    -----
    1. Minimal ambient n, index sets I, J, K, and c_{IJ}^K = c_{lam mu}^nu.
    2. The (I, J, K^vee) inequality is a facet of Delta(n).
    3. An averaged face point in E(n)^{++}, split by rho.
    4. N perturbed copies of the complementary block, assembled in size r + N(n - r).
    5. Scaled index sets I'', J'', K'' map back to N lam, N mu, N nu.
    6. The assembled point lies on the scaled face and in E^{++}.
    7. c_{I''J''}^{K''} = c_{N lam, N mu}^{N nu} = 1.

    Raises
    ------
    HypothesisError
        If c_{lam mu}^nu != 1.
    TraceStepError
        At the first step whose predicate fails.
    """
    if config is None:
        config = TraceConfig()
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    _require_multiplicity_one(lam, mu, nu)
    rng = np.random.default_rng(seed)
    report = TraceReport(lam, mu, nu, N)

    # 1
    a, n = minimal_ambient(lam, mu, nu)
    report.n, report.r = n, a
    _check(1, weight(lam) + weight(mu) == weight(nu), "|lam| + |mu| = |nu|")
    i, j, k = (to_subset(p, a, n) for p in (lam, mu, nu))
    _check(1, schubert_constant(i, j, k) == 1, "c_{IJ}^K = c_{lam mu}^nu = 1")
    report.record(1, "index sets", f"n={n} r={a} I={i} J={j} K={k}")

    # 2
    k_dual = dual_subset(k)
    facet = HornInequality(i, j, k_dual, 1)
    status = classify_facet(facet, enumerate_inequalities(n))
    _check(2, status == FacetStatus.FACET, f"{facet.label} is a facet of Delta({n})")
    report.record(2, "facet", f"{facet.label} is a facet of Delta({n})")

    # 3
    try:
        samples = [
            sample_face_point(i, j, k_dual, rng, config.face_sampling)
            for _ in range(config.face_samples)
        ]
    except InsufficientSamplesError as exc:
        raise TraceStepError(3, f"face sampling: {exc}") from exc
    base = _average(samples)
    _check(3, base.in_chamber(strict=True), "averaged face point lies in E^{++}")
    q_r, q_s = rho(base, i, j, k_dual)
    report.record(3, "face point", f"split into blocks of sizes {q_r.n} and {q_s.n}")

    # 4
    s = n - a
    epsilon = min(base.chamber_gaps()) / config.epsilon_divisor
    n_scaled = a + N * s
    i2, j2, k2 = (to_subset(scale(p, N), a, n_scaled) for p in (lam, mu, nu))
    k2_dual = dual_subset(k2)
    point: Optional[SpectrumPoint] = None
    for attempt in range(config.retry_cap):
        directions = [_normalized_member(s, rng) for _ in range(N)]
        if any(d is None for d in directions):
            continue
        copies = [q_s + d.scaled(epsilon) for d in directions]
        candidate = assemble_block_spectrum(
            q_r, direct_sum(copies), i2, j2, k2_dual, check_membership=False
        )
        if candidate.in_chamber(strict=True):
            point = candidate
            break
        logger.debug("trace step 4: tie in perturbed spectra (attempt %d)", attempt)
    _check(4, point is not None, f"untied perturbation within {config.retry_cap} draws")
    report.point = point
    report.record(4, "perturbation", f"epsilon={epsilon}, ambient size {n_scaled}")

    # 5
    for original, subset in zip((lam, mu, nu), (i2, j2, k2)):
        _check(
            5,
            from_subset(subset, a, n_scaled) == scale(original, N),
            f"{subset} encodes {N} * ({original})",
        )
    report.record(5, "scaled index sets", f"I''={i2} J''={j2} K''={k2}")

    # 6
    scaled_facet = HornInequality(i2, j2, k2_dual, 1)
    _check(6, scaled_facet.evaluate(point) == 0, f"{scaled_facet.label} form vanishes")
    _check(6, point.in_chamber(strict=True), "assembled point lies in E^{++}")
    _check(6, on_face(point, i2, j2, k2_dual), f"point lies on the {scaled_facet.label} face")
    report.record(6, "scaled face", f"{scaled_facet.label} meets E({n_scaled})^{{++}}")

    # 7
    geometric = schubert_constant(i2, j2, k2)
    direct = lr_coefficient(scale(lam, N), scale(mu, N), scale(nu, N))
    _check(7, geometric == 1, f"c_{{I''J''}}^{{K''}} = {geometric}, expected 1")
    _check(7, direct == geometric, f"direct coefficient {direct} agrees with {geometric}")
    report.record(7, "conclusion", f"c = 1 at N = {N}")
    return report
