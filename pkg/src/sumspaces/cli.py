"""Command-line front end.

Subcommands:
  analyze         measure the angle-cosine matrix of a family and test the
                  spectral criterion
  project         additionally run the projection iteration with its
                  certified error bound
  counterexample  generate a block family realizing a boundary matrix

Exit codes: 0 criterion satisfied / counterexample verified, 1 invalid
input, 2 criterion failed or verification failed, 3 spectral radius on
the boundary.
"""

import argparse
import sys
import warnings

from . import io
from .counterexamples import (
    CounterexampleSpec,
    build_counterexample,
    geometric_alphas,
    verify_counterexample,
)
from .criterion import build_e_matrix, evaluate_criterion, spectral_radius
from .errors import CriterionNotSatisfied, SumspacesError, VerificationFailed

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_SATISFIED = 2
EXIT_BOUNDARY = 3


def _parser():
    parser = argparse.ArgumentParser(
        prog="sumspaces",
        description="Spectral test, projection iteration and boundary "
        "counterexamples for sums of subspaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser(
        "analyze", help="test the spectral criterion on a family file"
    )
    p_analyze.add_argument("family", help="family JSON file")
    p_analyze.add_argument("--report", help="write the JSON report here")

    p_project = sub.add_parser(
        "project", help="run the projection iteration with certified bounds"
    )
    p_project.add_argument("family", help="family JSON file")
    p_project.add_argument("--n-max", type=int, required=True, help="iteration steps")
    p_project.add_argument("--report", help="write the JSON report here")
    p_project.add_argument("--csv", help="write N,error,bound rows here")

    p_counter = sub.add_parser(
        "counterexample", help="build a block family for a boundary matrix"
    )
    p_counter.add_argument("ematrix", help="angle-cosine matrix JSON file")
    p_counter.add_argument("--blocks", type=int, required=True, help="block count K")
    p_counter.add_argument(
        "--alpha-schedule",
        default="geometric",
        help="'geometric' (1 - 2^-k) or 'custom=a1,a2,...' ascending in (0,1)",
    )
    p_counter.add_argument("--out", required=True, help="write the family here")
    p_counter.add_argument("--verify", help="write the verification record here")
    return parser


def _cmd_analyze(args) -> int:
    try:
        family, _ = io.load_family(args.family)
        report = evaluate_criterion(build_e_matrix(family))
    except (SumspacesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    doc = {
        "criterion": io.criterion_section(report),
        "metadata": io.report_metadata(args.family),
    }
    io.write_report(args.report, doc, stream=sys.stdout)
    if report.boundary:
        return EXIT_BOUNDARY
    return EXIT_OK if report.satisfied else EXIT_NOT_SATISFIED


def _cmd_project(args) -> int:
    from .iteration import convergence_report

    try:
        family, _ = io.load_family(args.family)
        criterion = evaluate_criterion(build_e_matrix(family))
    except (SumspacesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.n_max < 1:
        print("error: --n-max must be at least 1", file=sys.stderr)
        return EXIT_INPUT

    doc = {
        "criterion": io.criterion_section(criterion),
        "metadata": io.report_metadata(args.family),
    }
    try:
        convergence = convergence_report(family, args.n_max)
    except CriterionNotSatisfied:
        io.write_report(args.report, doc, stream=sys.stdout)
        return EXIT_BOUNDARY if criterion.boundary else EXIT_NOT_SATISFIED
    doc |= io.convergence_section(convergence)
    io.write_report(args.report, doc, stream=sys.stdout)
    if args.csv:
        io.write_convergence_csv(args.csv, convergence)
    return EXIT_OK


def _parse_alphas(schedule: str, blocks: int):
    if schedule == "geometric":
        return geometric_alphas(blocks)
    if schedule.startswith("custom="):
        alphas = tuple(float(x) for x in schedule[len("custom="):].split(","))
        if len(alphas) != blocks:
            raise ValueError(
                f"custom schedule has {len(alphas)} values but --blocks is {blocks}"
            )
        return alphas
    raise ValueError(f"unknown alpha schedule {schedule!r}")


def _cmd_counterexample(args) -> int:
    try:
        e = io.load_ematrix(args.ematrix)
        if args.blocks < 1:
            raise ValueError("--blocks must be at least 1")
        alphas = _parse_alphas(args.alpha_schedule, args.blocks)
        r = spectral_radius(e)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            spec = CounterexampleSpec(e, alphas)
        for w in caught:
            print(f"notice: {w.message}", file=sys.stderr)
        cf = build_counterexample(spec)
    except (SumspacesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    io.save_family(args.out, cf.family)
    try:
        record = verify_counterexample(cf, spec)
        status = EXIT_OK
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        record = exc.record
        status = EXIT_NOT_SATISFIED
    if args.verify:
        doc = {
            "verification": io.verification_section(record),
            "spectral_radius_input": r,
            "alphas": list(spec.alphas),
            "metadata": io.report_metadata(args.ematrix),
        }
        io.write_report(args.verify, doc)
    return status


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "project": _cmd_project,
        "counterexample": _cmd_counterexample,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
