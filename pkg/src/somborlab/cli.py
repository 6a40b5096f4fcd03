"""Command-line front end: batch access to indices, families, enumeration,
transformations, and the verification suite.

Exit codes form the machine contract: 0 for success (and, on verification
commands, every check passing), 1 for a failed verification (violations or a
non-unique/refuted extremal verdict), 2 for usage or input errors.  Report
CSVs get a sibling .png figure unless --no-figure is passed.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from . import __version__
from .enumeration import EnumFilter, enumerate_unicyclic
from .errors import OutOfTheoremRange
from .extremal import (
    VERDICT_UNIQUE,
    extremal_search,
    verify_transform_monotonicity,
)
from .families import closed_form_u, parse_family_spec
from .formats import load_graphs, to_graph6
from .indices import general_sombor
from .inequalities import (
    CONSTANT_IDS,
    LEMMA_IDS,
    GridSpec,
    check_constant,
    check_lemma,
)
from .plots import render_extremal_figure, render_lemma_figure
from .transforms import parse_swap_tokens, apply_swap, relocate


def _emit(lines, out: str | None) -> None:
    text = "".join(f"{line}\n" for line in lines)
    if out:
        Path(out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def _cmd_index(args) -> int:
    graphs = load_graphs(args.infile)
    for g in graphs:
        print(f"{general_sombor(g, args.alpha):.15g}")
    return 0


def _cmd_family(args) -> int:
    spec = parse_family_spec(args.spec)
    g = spec.build()
    if args.closed_form:
        if args.alpha is None:
            print("error: --closed-form needs --alpha", file=sys.stderr)
            return 2
        if spec.kind != "U":
            print("error: closed form is defined for U specs only", file=sys.stderr)
            return 2
        n, d, i = spec.params
        if i != 1:
            print("error: closed form is defined for the i=1 member", file=sys.stderr)
            return 2
        print(f"{closed_form_u(n, d, args.alpha):.15g}")
    _emit([to_graph6(g)], args.out)
    return 0


def _cmd_enumerate(args) -> int:
    filt = EnumFilter(args.n, args.diameter, args.girth)
    result = enumerate_unicyclic(filt, jobs=args.jobs)
    if args.count_only:
        print(result.count)
        return 0
    _emit([to_graph6(g) for g in result.graphs], args.out)
    return 0


def _cmd_transform(args) -> int:
    graphs = load_graphs(args.infile)
    out = []
    for g in graphs:
        if args.relocate:
            u, v = (int(tok) for tok in args.relocate.split(","))
            out.append(to_graph6(relocate(g, u, v)))
        else:
            out.append(to_graph6(apply_swap(g, parse_swap_tokens(args.swap))))
    _emit(out, args.out)
    return 0


def _write_extremal_csv(report, path: Path) -> None:
    with open(path, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["n", "d", "alpha", "max_value", "argmax_g6", "predicted_g6", "verdict", "seconds"]
        )
        writer.writerow([
            report.n,
            report.d,
            f"{report.alpha:g}",
            f"{report.max_value:.12g}",
            ";".join(report.argmax_g6),
            report.predicted_g6,
            report.verdict,
            f"{report.seconds:.3f}",
        ])


def _cmd_extremal(args) -> int:
    try:
        report = extremal_search(args.n, args.d, args.alpha, args.tol, jobs=args.jobs)
    except OutOfTheoremRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(
        f"n={report.n} d={report.d} alpha={report.alpha:g}: {report.verdict} "
        f"(max {report.max_value:.12g} over {report.class_size} classes; "
        f"argmax {';'.join(report.argmax_g6)}; predicted {report.predicted_g6})"
    )
    if args.report:
        path = Path(args.report)
        _write_extremal_csv(report, path)
        if not args.no_figure:
            render_extremal_figure(report, path.with_suffix(".png"))
    return 0 if report.verdict == VERDICT_UNIQUE else 1


def _grid_from_flags(args, axis: str) -> GridSpec | None:
    triple = [getattr(args, f"{axis}_{part}") for part in ("start", "stop", "step")]
    if all(v is None for v in triple):
        return None
    if any(v is None for v in triple):
        raise ValueError(f"--{axis}-start/stop/step must be given together")
    return GridSpec(*triple)


def _cmd_check_lemma(args) -> int:
    report = check_lemma(
        args.id,
        alpha_grid=_grid_from_flags(args, "alpha"),
        x_grid=_grid_from_flags(args, "x"),
        y_grid=_grid_from_flags(args, "y"),
    )
    print(
        f"{report.lemma_id}: {len(report.rows)} rows, "
        f"{len(report.violations)} violations, {report.boundary_count} boundary points, "
        f"min margin {report.min_margin:.6g}"
    )
    if args.report:
        path = Path(args.report)
        with open(path, "w", newline="", encoding="ascii") as fh:
            writer = csv.writer(fh)
            writer.writerow(["lemma", "alpha", "x", "value", "status"])
            for alpha, x, value, status in report.rows:
                writer.writerow(
                    [report.lemma_id, f"{alpha:.6g}", f"{x:.6g}", f"{value:.12g}", status]
                )
        if not args.no_figure:
            render_lemma_figure(report, path.with_suffix(".png"))
    return 0 if report.passed else 1


def _cmd_check_constant(args) -> int:
    report = check_constant(args.id, alpha_max=args.alpha_max, step=args.step)
    line = (
        f"{report.constant_id}: max value {report.max_value:.6g} at "
        f"alpha={report.max_at:.4g}; {len(report.violations)} sign violations "
        f"on (0, {report.alpha_max:g}) step {report.step:g}"
    )
    if report.root_estimate is not None:
        line += f"; sign change near alpha={report.root_estimate:.5f}"
    print(line)
    for alpha, value in report.violations[:20]:
        print(f"  violation: alpha={alpha:.4f} value={value:.6g}")
    return 0 if report.passed else 1


def _cmd_prop_test(args) -> int:
    sampler = (lambda _rng: args.alpha) if args.alpha is not None else None
    report = verify_transform_monotonicity(args.samples, sampler, seed=args.seed)
    print(
        f"relocation monotonicity: {report.applicable} applicable samples "
        f"(seed {report.seed}, {report.skipped} skipped), "
        f"{len(report.counterexamples)} counterexamples"
    )
    for g6, u, v, alpha, before, after in report.counterexamples:
        print(f"  counterexample: {g6} relocate ({u},{v}) alpha={alpha:.6g} "
              f"{before:.12g} -> {after:.12g}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="somborlab",
        description="General Sombor index workbench for unicyclic graphs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="evaluate the index on graphs from a file")
    p.add_argument("--in", dest="infile", required=True, help="graph6 or edge-list file")
    p.add_argument("--alpha", type=float, required=True)
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("family", help="build a parametric family member")
    p.add_argument("--spec", required=True, help="C:p | U:n,d,i | CF:p,q,r")
    p.add_argument("--out", help="write graph6 here instead of stdout")
    p.add_argument("--closed-form", action="store_true",
                   help="also print the closed-form index value (U specs, i=1)")
    p.add_argument("--alpha", type=float)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("enumerate", help="enumerate unicyclic classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diameter", type=int)
    p.add_argument("--girth", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", help="write graph6 lines here instead of stdout")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: all cores)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("transform", help="apply a rewiring to graphs from a file")
    p.add_argument("--in", dest="infile", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--relocate", metavar="u,v",
                      help="move v's branches onto u across edge uv")
    mode.add_argument("--swap", metavar="'+a,b -c,d ...'",
                      help="explicit edge additions/removals")
    p.add_argument("--out", help="write graph6 here instead of stdout")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("extremal", help="exhaustive in-class check of the predicted maximizer")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--report", help="CSV path; a .png figure lands alongside")
    p.add_argument("--no-figure", action="store_true")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("check-lemma", help="grid check of one scalar inequality")
    p.add_argument("--id", required=True, choices=list(LEMMA_IDS))
    for axis in ("alpha", "x", "y"):
        p.add_argument(f"--{axis}-start", type=float)
        p.add_argument(f"--{axis}-stop", type=float)
        p.add_argument(f"--{axis}-step", type=float)
    p.add_argument("--report", help="CSV path; a .png figure lands alongside")
    p.add_argument("--no-figure", action="store_true")
    p.set_defaults(func=_cmd_check_lemma)

    p = sub.add_parser("check-constant", help="sign scan of a catalog constant")
    p.add_argument("--id", required=True, choices=list(CONSTANT_IDS))
    p.add_argument("--alpha-max", type=float, default=None)
    p.add_argument("--step", type=float, default=1e-3)
    p.set_defaults(func=_cmd_check_constant)

    p = sub.add_parser("prop-test", help="randomized strict-increase check of relocation")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, default=None,
                   help="fix alpha instead of sampling it per instance")
    p.set_defaults(func=_cmd_prop_test)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
