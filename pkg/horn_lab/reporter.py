"""
Reporter module for the command-line deliverables.

Every report is built as a DataFrame and rendered either as aligned text or
as json-lines (one JSON object per row). Exact values are written as "p/q",
floating ones with 12 significant digits, so identical runs produce
byte-identical output.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence

import pandas as pd

from .combinatorics.utils import format_float, format_rational
from .fulton import TraceReport
from .horn_cone import HornInequality, Scalar, SpectrumPoint

TEXT = "text"
JSON_LINES = "json-lines"
FORMATS = (TEXT, JSON_LINES)


def format_scalar(x: Scalar) -> str:
    if isinstance(x, (Fraction, int)):
        return format_rational(x)
    return format_float(x)


def render(table: pd.DataFrame, fmt: str = TEXT, header: bool = True) -> str:
    """Render a report table; empty tables render as an empty string."""
    if fmt not in FORMATS:
        raise ValueError(f"Unknown format {fmt!r}; expected one of {FORMATS}")
    if table.empty:
        return ""
    if fmt == JSON_LINES:
        return table.to_json(orient="records", lines=True).rstrip("\n") + "\n"
    if not header:
        lines = [" ".join(str(v) for v in row) for row in table.itertuples(index=False)]
        return "\n".join(lines) + "\n"
    return table.to_string(index=False) + "\n"


def inequality_table(system: Sequence[HornInequality]) -> pd.DataFrame:
    rows = [
        {
            "triple": h.label,
            "r": f"r={h.r}",
            "c": f"c={h.coefficient}",
            "status": h.status.value,
        }
        for h in system
    ]
    return pd.DataFrame(rows, columns=["triple", "r", "c", "status"])


def point_lines(point: SpectrumPoint) -> str:
    """alpha, beta and gamma on three comma-separated lines."""
    return "\n".join(",".join(format_scalar(v) for v in seq) for seq in point.blocks) + "\n"


def points_table(points: Sequence[SpectrumPoint]) -> pd.DataFrame:
    rows: List[Dict[str, object]] = []
    for idx, p in enumerate(points):
        rows.append(
            {
                "sample": idx,
                "alpha": ",".join(format_scalar(v) for v in p.alpha),
                "beta": ",".join(format_scalar(v) for v in p.beta),
                "gamma": ",".join(format_scalar(v) for v in p.gamma),
            }
        )
    return pd.DataFrame(rows, columns=["sample", "alpha", "beta", "gamma"])


def fulton_summary(table: pd.DataFrame) -> str:
    """One line: triples checked, scaled coefficients checked, failures."""
    triples = len(table[["lambda", "mu", "nu"]].drop_duplicates()) if len(table) else 0
    failures = int((~table["passed"].astype(bool)).sum()) if len(table) else 0
    return f"{triples} triples, {len(table)} checks, {failures} failures\n"


def trace_table(report: TraceReport) -> pd.DataFrame:
    rows = [{"step": s.index, "name": s.name, "detail": s.detail} for s in report.steps]
    return pd.DataFrame(rows, columns=["step", "name", "detail"])
