"""
Command-line entry point: `python -m horn_lab <command> ...`.

Exit codes: 0 success, 1 mathematical failure (non-member, failed check,
failed trace step), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

import numpy as np
import pandas as pd

from . import reporter
from .combinatorics.tableaux import lr_coefficient, product_expansion, triple_intersection
from .combinatorics.utils import format_float, format_partition, parse_partition, parse_triple
from .errors import InsufficientSamplesError, TraceStepError
from .face_geometry import face_dimension, on_face, on_face_direct
from .fulton import SweepConfig, TraceConfig, fulton_sweep, geometric_trace, saturation_sweep, verify_fulton
from .horn_cone import classify_inequalities, enumerate_inequalities, first_multiplicity_face, is_member
from .point_io import read_point
from .spectra import SamplingConfig, random_triple, spectrum_point, verify_sample_batch

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _add_common(parser: argparse.ArgumentParser, seed_required: bool = False) -> None:
    parser.add_argument("--seed", type=int, required=seed_required, default=None)
    parser.add_argument("--format", choices=reporter.FORMATS, default=reporter.TEXT)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horn_lab",
        description="Horn inequalities, LR coefficients and the Fulton property.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    lr = sub.add_parser("lr", help="LR coefficient c_{lam mu}^nu, or the product s_lam s_mu")
    lr.add_argument("partitions", nargs="*", help="lam mu [nu] as comma-separated parts")
    lr.add_argument("--batch", type=Path, help="file of 'lam mu nu' lines")
    _add_common(lr)

    horn = sub.add_parser("horn", help="inequalities of Delta(n)")
    horn_sub = horn.add_subparsers(dest="horn_command", required=True)
    enum = horn_sub.add_parser("enumerate")
    enum.add_argument("n", type=int)
    enum.add_argument("--all", action="store_true", help="include coefficients > 1")
    enum.add_argument("--classify", action="store_true", help="decide facets by exact LP")
    _add_common(enum)
    # `member` is reachable both as `horn member` and at top level
    for target in (horn_sub, sub):
        member = target.add_parser("member", help="membership in Delta(n)")
        member.add_argument("n", type=int)
        member.add_argument("--point", type=Path, required=True)
        _add_common(member)
    first = horn_sub.add_parser("first", help="smallest n with a coefficient > 1")
    first.add_argument("--max-n", type=int, default=6)
    _add_common(first)

    face = sub.add_parser("face", help="faces cut out by a triple (I, J, K)")
    face_sub = face.add_subparsers(dest="face_command", required=True)
    test = face_sub.add_parser("test")
    test.add_argument("n", type=int)
    test.add_argument("--triple", required=True)
    test.add_argument("--point", type=Path, required=True)
    _add_common(test)
    dim = face_sub.add_parser("dim")
    dim.add_argument("n", type=int)
    dim.add_argument("--triple", required=True)
    dim.add_argument("--samples", type=int, default=None)
    _add_common(dim, seed_required=True)

    sample = sub.add_parser("sample", help="spectra of random Hermitian triples")
    sample.add_argument("n", type=int)
    sample.add_argument("--count", type=int, default=1)
    sample.add_argument("--check", action="store_true")
    _add_common(sample, seed_required=True)

    fulton = sub.add_parser("fulton", help="Fulton property checks")
    fulton_sub = fulton.add_subparsers(dest="fulton_command", required=True)
    sweep = fulton_sub.add_parser("sweep")
    sweep.add_argument("--max-weight", type=int, default=6)
    sweep.add_argument("--max-parts", type=int, default=3)
    sweep.add_argument("--nmax", type=int, default=3)
    sweep.add_argument("--saturation", action="store_true", help="also sweep saturation")
    sweep.add_argument("--workers", type=int, default=1, help="worker processes")
    _add_common(sweep)
    trace = fulton_sub.add_parser("trace")
    trace.add_argument("partitions", nargs=3)
    trace.add_argument("--n", dest="N", type=int, required=True, help="scaling factor N")
    _add_common(trace, seed_required=True)
    check = fulton_sub.add_parser("check")
    check.add_argument("partitions", nargs=3)
    check.add_argument("--nmax", type=int, default=3)
    _add_common(check)
    return parser


def _cmd_lr(args: argparse.Namespace, out: TextIO) -> int:
    if args.batch is not None:
        rows = []
        for line in args.batch.read_text().splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            lam, mu, nu = (parse_partition(x) for x in line.split())
            rows.append(
                {
                    "lambda": format_partition(lam),
                    "mu": format_partition(mu),
                    "nu": format_partition(nu),
                    "c": lr_coefficient(lam, mu, nu),
                }
            )
        table = pd.DataFrame(rows, columns=["lambda", "mu", "nu", "c"])
        out.write(reporter.render(table, args.format, header=False))
        return EXIT_OK
    if len(args.partitions) == 3:
        lam, mu, nu = (parse_partition(x) for x in args.partitions)
        c = lr_coefficient(lam, mu, nu)
        if args.format == reporter.JSON_LINES:
            row = {
                "lambda": format_partition(lam),
                "mu": format_partition(mu),
                "nu": format_partition(nu),
                "c": c,
            }
            out.write(reporter.render(pd.DataFrame([row]), args.format))
        else:
            out.write(f"{c}\n")
        return EXIT_OK
    if len(args.partitions) == 2:
        lam, mu = (parse_partition(x) for x in args.partitions)
        rows = [
            {"nu": format_partition(nu), "c": c}
            for nu, c in product_expansion(lam, mu).items()
        ]
        out.write(reporter.render(pd.DataFrame(rows, columns=["nu", "c"]), args.format, header=False))
        return EXIT_OK
    raise ValueError("lr expects 'lam mu nu', 'lam mu' or --batch FILE")


def _cmd_horn(args: argparse.Namespace, out: TextIO) -> int:
    if args.horn_command == "enumerate":
        if args.classify:
            system = classify_inequalities(args.n, facets_only=not args.all)
        else:
            system = enumerate_inequalities(args.n, facets_only=not args.all)
        out.write(reporter.render(reporter.inequality_table(system), args.format, header=False))
        return EXIT_OK
    if args.horn_command == "member":
        return _cmd_member(args, out)
    found = first_multiplicity_face(args.max_n)
    if found is None:
        out.write(f"no coefficient > 1 up to n={args.max_n}\n")
        return EXIT_FAILURE
    n, h = found
    out.write(f"n={n} {h.label} c={h.coefficient}\n")
    return EXIT_OK


def _cmd_member(args: argparse.Namespace, out: TextIO) -> int:
    point = read_point(args.point, args.n)
    verdict = is_member(point)
    if verdict:
        out.write("member\n")
        return EXIT_OK
    detail = verdict.reason or ""
    if verdict.certificate is not None:
        detail += f" {verdict.certificate.label}"
    if verdict.value is not None:
        detail += f" value={reporter.format_scalar(verdict.value)}"
    out.write(f"not a member: {detail}\n")
    return EXIT_FAILURE


def _cmd_face(args: argparse.Namespace, out: TextIO) -> int:
    i, j, k = parse_triple(args.triple, args.n)
    if args.face_command == "test":
        point = read_point(args.point, args.n)
        split = on_face(point, i, j, k)
        direct = on_face_direct(point, i, j, k)
        out.write(f"rho: {str(split).lower()}\ndirect: {str(direct).lower()}\n")
        return EXIT_OK if split and direct else EXIT_FAILURE
    try:
        rank = face_dimension(i, j, k, args.samples, args.seed)
    except InsufficientSamplesError as exc:
        out.write(f"{exc}\n")
        return EXIT_FAILURE
    expected = 3 * args.n - 2
    out.write(
        f"{i}{j}{k} c={triple_intersection(i, j, k)} rank={rank} codim-one={expected}\n"
    )
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace, out: TextIO) -> int:
    if args.check:
        report = verify_sample_batch(args.n, args.count, args.seed, config=SamplingConfig())
        out.write(
            f"n={report.n} samples={report.count} "
            f"max_violation={format_float(report.max_violation)} "
            f"max_trace_error={format_float(report.max_trace_error)} "
            f"{'pass' if report.passed else 'FAIL'}\n"
        )
        return EXIT_OK if report.passed else EXIT_FAILURE
    children = np.random.SeedSequence(args.seed).spawn(args.count)
    points = [spectrum_point(random_triple(args.n, child)) for child in children]
    out.write(reporter.render(reporter.points_table(points), args.format))
    return EXIT_OK


def _cmd_fulton(args: argparse.Namespace, out: TextIO) -> int:
    if args.fulton_command == "sweep":
        config = SweepConfig(args.max_weight, args.max_parts, args.nmax, args.workers)
        table = fulton_sweep(config)
        failures = table[~table["passed"].astype(bool)] if len(table) else table
        out.write(reporter.render(table, args.format))
        if args.format == reporter.TEXT:
            out.write(reporter.fulton_summary(table))
        code = EXIT_OK if failures.empty else EXIT_FAILURE
        if args.saturation:
            violations = saturation_sweep(config)
            out.write(reporter.render(violations, args.format))
            if args.format == reporter.TEXT:
                out.write(f"{len(violations)} saturation violations\n")
            if not violations.empty:
                code = EXIT_FAILURE
        return code

    lam, mu, nu = (parse_partition(x) for x in args.partitions)
    if args.fulton_command == "check":
        report = verify_fulton(lam, mu, nu, args.nmax)
        for N, c in enumerate(report.coefficients, start=1):
            out.write(f"N={N} c={c}\n")
        out.write("pass\n" if report.passed else "FAIL\n")
        return EXIT_OK if report.passed else EXIT_FAILURE
    try:
        trace = geometric_trace(lam, mu, nu, args.N, args.seed, TraceConfig())
    except TraceStepError as exc:
        out.write(f"{exc}\n")
        return EXIT_FAILURE
    out.write(reporter.render(reporter.trace_table(trace), args.format))
    out.write(f"all {len(trace.steps)} steps pass\n")
    return EXIT_OK


_COMMANDS: Dict[str, Callable[[argparse.Namespace, TextIO], int]] = {
    "lr": _cmd_lr,
    "horn": _cmd_horn,
    "member": _cmd_member,
    "face": _cmd_face,
    "sample": _cmd_sample,
    "fulton": _cmd_fulton,
}


def dispatch(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Parse `argv`, run the command and write its report to `stdout`."""
    out = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return _COMMANDS[args.command](args, out)
    except (ValueError, OSError) as exc:
        logger.debug("input error", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(dispatch(argv))
