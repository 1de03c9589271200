"""
Sampling of Hermitian triples A + B + C = 0 and their sorted spectra.

Sampled spectra are empirical members of Delta(n): floating ones are used
to check the Horn inequalities with tolerances; rationalized ones (rounded,
trace-corrected and re-checked exactly) feed the exact face computations.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd
import scipy.linalg

from .errors import NonHermitianError
from .horn_cone import (
    HornInequality,
    MembershipConfig,
    SpectrumPoint,
    enumerate_inequalities,
    is_member,
)

logger = logging.getLogger(__name__)

Seed = Union[int, np.random.Generator, np.random.SeedSequence, None]


@dataclass
class SamplingConfig:
    hermitian_tolerance: float = 1e-12
    slack_tolerance: float = 1e-8
    trace_tolerance: float = 1e-9
    max_denominator: int = 10**6


@dataclass(frozen=True, eq=False)
class HermitianTriple:
    """Three n x n Hermitian matrices with A + B + C = 0."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    @property
    def n(self) -> int:
        return self.a.shape[0]

    def validate(self, tolerance: float = 1e-12) -> None:
        """
        Raise NonHermitianError unless each matrix is Hermitian and the sum
        vanishes, both relative to the largest matrix norm.
        """
        scale = max(1.0, *(np.linalg.norm(m) for m in (self.a, self.b, self.c)))
        for name, m in (("A", self.a), ("B", self.b), ("C", self.c)):
            if m.shape != (self.n, self.n):
                raise NonHermitianError(f"{name} has shape {m.shape}")
            if np.abs(m - m.conj().T).max() > tolerance * scale:
                raise NonHermitianError(f"{name} is not Hermitian")
        if np.abs(self.a + self.b + self.c).max() > tolerance * scale:
            raise NonHermitianError("A + B + C does not vanish")


def _random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (g + g.conj().T) / 2


def random_triple(n: int, seed: Seed = None) -> HermitianTriple:
    """
    Gaussian A and B (real diagonal, complex off-diagonal) with C := -A - B.

    Deterministic for a given seed; a Generator is consumed in place.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    a = _random_hermitian(n, rng)
    b = _random_hermitian(n, rng)
    return HermitianTriple(a, b, -a - b)


def spectrum_point(
    t: HermitianTriple,
    config: SamplingConfig | None = None,
) -> SpectrumPoint:
    """Eigenvalues of A, B, C, each sorted decreasingly (floating)."""
    if config is None:
        config = SamplingConfig()
    t.validate(config.hermitian_tolerance)
    blocks = [
        tuple(float(v) for v in scipy.linalg.eigvalsh(m)[::-1]) for m in (t.a, t.b, t.c)
    ]
    return SpectrumPoint(*blocks)


def rationalize(
    point: SpectrumPoint,
    max_denominator: int = 10**6,
) -> SpectrumPoint:
    """Round to denominators <= max_denominator, then shift uniformly to trace 0."""
    coords = [Fraction(float(v)).limit_denominator(max_denominator) for v in point.coordinates()]
    shift = sum(coords, Fraction(0)) / len(coords)
    return SpectrumPoint.from_coordinates([c - shift for c in coords], point.n)


def rational_member(
    n: int,
    seed: Seed = None,
    system: Optional[Sequence[HornInequality]] = None,
    config: SamplingConfig | None = None,
) -> Optional[SpectrumPoint]:
    """
    Exact member of Delta(n) from one Hermitian sample, or None when the
    rounded point fails the exact membership re-check.
    """
    if config is None:
        config = SamplingConfig()
    if system is None:
        system = enumerate_inequalities(n, facets_only=True)
    point = rationalize(spectrum_point(random_triple(n, seed), config), config.max_denominator)
    if is_member(point, system):
        return point
    logger.debug("rounded sample of Delta(%d) left the cone; discarded", n)
    return None


def random_chamber_point(n: int, seed: Seed = None, bound: int = 100) -> SpectrumPoint:
    """Exact trace-zero point of E(n)^+ with small rational coordinates."""
    rng = np.random.default_rng(seed)
    blocks = []
    for _ in range(3):
        values = [
            Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))
            for _ in range(n)
        ]
        blocks.append(sorted(values, reverse=True))
    point = SpectrumPoint(*blocks)
    shift = point.trace() / (3 * n)
    return point.shifted(-shift, -shift, -shift)


@dataclass(frozen=True)
class SampleBatchReport:
    n: int
    count: int
    max_violation: float
    max_trace_error: float
    passed: bool
    samples: pd.DataFrame


def verify_sample_batch(
    n: int,
    count: int,
    seed: int | None = None,
    system: Optional[Sequence[HornInequality]] = None,
    config: SamplingConfig | None = None,
) -> SampleBatchReport:
    """
    Sample `count` triples and measure the worst inequality violation and
    trace error over all of them.

    Per-sample seeds are spawned from the master seed, so sample k does not
    depend on how many samples precede it.
    """
    if config is None:
        config = SamplingConfig()
    if system is None:
        system = enumerate_inequalities(n, facets_only=True)
    membership = MembershipConfig(config.slack_tolerance, config.trace_tolerance)

    rows = []
    for idx, child in enumerate(np.random.SeedSequence(seed).spawn(count)):
        point = spectrum_point(random_triple(n, child), config)
        worst = max((float(h.evaluate(point)) for h in system), default=0.0)
        gaps = point.chamber_gaps()
        rows.append(
            {
                "sample": idx,
                "max_slack": max(worst, 0.0),
                "min_gap": min(gaps, default=0.0),
                "trace_error": abs(float(point.trace())),
                "member": bool(is_member(point, system, membership)),
            }
        )
    samples = pd.DataFrame(rows, columns=["sample", "max_slack", "min_gap", "trace_error", "member"])

    max_violation = float(samples["max_slack"].max()) if count else 0.0
    max_trace = float(samples["trace_error"].max()) if count else 0.0
    passed = (
        max_violation <= config.slack_tolerance
        and max_trace <= config.trace_tolerance
        and bool(samples["member"].all())
    )
    logger.info(
        "Delta(%d): %d samples, max violation %.3g, max trace error %.3g",
        n, count, max_violation, max_trace,
    )
    return SampleBatchReport(n, count, max_violation, max_trace, passed, samples)
