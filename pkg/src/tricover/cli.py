"""Command line entry point: ``tricover {cover,verify,render,bounds,sweep}``.

Exit codes: 0 success / covered, 2 gap found, 3 threshold refusal,
4 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds, methods
from .bounds import ThresholdExceeded
from .geometry import CoveringPlan
from .plan_io import PlanFormatError, load, parse_rational, save
from .render import FRAMES, render_svg
from .verify import sample_check, verify_coverage

EXIT_OK = 0
EXIT_GAP = 2
EXIT_THRESHOLD = 3
EXIT_USAGE = 4

METHOD_CHOICES = ("auto", "even", "odd", "cs1", "cs1_gen", "bl3", "naive", "grid")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except PlanFormatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_plan(n: int, d: Fraction, method: str = "auto", j: int | None = None, force: bool = False) -> CoveringPlan:
    if n < 1:
        raise UsageError("--n must be >= 1")
    if method == "grid":
        if d != 0 or j is not None:
            raise UsageError("grid covers T_n only: use --d 0 and no --j")
        return methods.grid_cover(n)
    if not 0 < d < 1:
        raise UsageError("--d must satisfy 0 < d < 1")
    if j is not None and method not in ("even", "odd"):
        raise UsageError("--j applies only to --method even or odd")
    try:
        if method == "auto":
            return methods.consolidated_cover(n, d)
        if method == "even":
            return methods.even_cover_auto(n, d) if j is None else methods.even_cover(n, d, j, force)
        if method == "odd":
            return methods.odd_cover_auto(n, d) if j is None else methods.odd_cover(n, d, j, force)
        if method == "cs1":
            return methods.cs1_cover(n, d, force)
        if method == "cs1_gen":
            return methods.cs1_generalized_cover(n, d)
        if method == "bl3":
            return methods.bl3_cover(n, d, force)
        if method == "naive":
            return methods.naive_cover(n, d)
    except ThresholdExceeded:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown method {method!r}")


def summary_line(plan: CoveringPlan) -> str:
    j = "-" if plan.j is None else plan.j
    threshold = methods.plan_threshold(plan)
    return f"method={plan.method.value} j={j} count={plan.count} threshold={threshold}"


def cmd_cover(args) -> int:
    try:
        plan = build_plan(args.n, args.d, args.method, args.j, args.force)
    except ThresholdExceeded as exc:
        print(f"refused: d={exc.d} exceeds threshold={exc.bound} ({exc.method.value}); "
              "use --force to emit anyway", file=sys.stderr)
        return EXIT_THRESHOLD
    if args.out:
        save(plan, args.out)
    print(summary_line(plan))
    return EXIT_OK


def _load_plan(path) -> CoveringPlan:
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except PlanFormatError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_verify(args) -> int:
    plan = _load_plan(args.plan)
    if args.sample is not None:
        if args.sample < 1:
            raise UsageError("--sample must be >= 1")
        report = sample_check(plan, seed=args.seed, count=args.sample)
    else:
        report = verify_coverage(plan)
    print(f"verdict={'covered' if report.covered else 'gap'}")
    if report.witness is not None:
        print(f"witness={report.witness.x},{report.witness.y}")
    print(f"critical_levels={report.critical_levels}")
    print(f"method={report.checked_method.value}")
    return EXIT_OK if report.covered else EXIT_GAP


def cmd_render(args) -> int:
    plan = _load_plan(args.plan)
    svg = render_svg(plan, show_target=not args.no_target, frame=args.frame, row_labels=args.labels)
    Path(args.out).write_text(svg)
    print(f"wrote {args.out} ({plan.count} triangles)")
    return EXIT_OK


def cmd_bounds(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("n must be >= 1")
    print(f"n={n}")
    print("p\tp/(n+1)\tp/n")
    for rec in bounds.bounds_table(n):
        odd = "-" if rec.threshold_odd is None else str(rec.threshold_odd)
        print(f"{rec.p}\t{rec.threshold_even}\t{odd}")
    return EXIT_OK


def sweep_rows(n_min: int, n_max: int, grid_points: int):
    """(n, d, k_min, method, verified) for d = i/(grid_points+1), ordered by n then d."""
    for n in range(n_min, n_max + 1):
        for i in range(1, grid_points + 1):
            d = Fraction(i, grid_points + 1)
            count, method = bounds.k_min(n, d)
            plan = methods.consolidated_cover(n, d)
            verified = plan.count == count and verify_coverage(plan).covered
            yield n, d, count, method.value, verified


def cmd_sweep(args) -> int:
    if args.n_min < 1 or args.n_max < args.n_min or args.grid_points < 1:
        raise UsageError("need 1 <= n-min <= n-max and grid-points >= 1")
    all_ok = True
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "d", "k_min", "method", "verified"])
        for n, d, count, method, ok in sweep_rows(args.n_min, args.n_max, args.grid_points):
            writer.writerow([n, str(d), count, method, "true" if ok else "false"])
            all_ok &= ok
    print(f"wrote {args.out}")
    return EXIT_OK if all_ok else EXIT_GAP


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tricover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cover", help="build a covering plan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=_rational, required=True, help='"p/q" or a terminating decimal')
    p.add_argument("--method", choices=METHOD_CHOICES, default="auto")
    p.add_argument("--j", type=int)
    p.add_argument("--force", action="store_true", help="emit the plan even past its threshold")
    p.add_argument("--out", help="write the plan JSON here")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="check that a plan covers its target")
    p.add_argument("plan")
    p.add_argument("--sample", type=int, help="use N random lattice points instead of the exact check")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a plan as SVG")
    p.add_argument("plan")
    p.add_argument("--out", required=True)
    p.add_argument("--frame", choices=FRAMES, default="simplex")
    p.add_argument("--no-target", action="store_true")
    p.add_argument("--labels", action="store_true", help="number the rows")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bounds", help="print the tight thresholds for one n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="tabulate the minimal count over a d grid")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--grid-points", type=int, default=99)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tricover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
