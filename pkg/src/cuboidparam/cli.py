"""Command-line surface for the library.

Every rational argument is written in "p/q" form (the "/q" part optional).
Exit codes: 0 success; 1 a requested check evaluated to false; 2 usage;
3 singular parameter point or singular completion; 4 degenerate depression
(B0 = 0 or B1 = 0, or w = +-1); 5 checkpoint mismatch or corruption.
"""

import argparse
import sys

from .coeffs import (E21_CORRECTED, E21_VARIANTS, Cubic, ParamPoint,
                     eval_coeffs, singular_factors)
from .cubics import analyze_cubic, sextic_poly
from .errors import (CheckpointCorrupt, CheckpointMismatch, ConfigInvalid,
                     CuboidError, DegenerateDepression, SingularCompletion,
                     SingularPoint, WDegenerate)
from .parametrize import (Instance, Solution, complete_first, complete_second,
                          d_pipeline, d1_explicit, d2_explicit, param_first,
                          param_second, ring_verify_identities, verify_solution)
from .polynomials import DEFAULT_HEIGHT_BOUND, format_poly
from .rationals import format_rational, parse_rational
from .search import SearchConfig, degree_probe, scan, scan_to_file

EXIT_CODES_HELP = """\
exit codes:
  0  success
  1  a requested check evaluated to false
  2  usage error
  3  singular parameter point / singular completion system
  4  degenerate depression (B0 = 0 or B1 = 0) or w = +-1
  5  checkpoint mismatch or corruption
"""

COEFF_ORDER = ("E10", "E20", "E30", "E01", "E02", "E03", "E21", "E11", "E12")


def _rat(text):
    try:
        return parse_rational(text)
    except (CuboidError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _instance(text):
    try:
        return Instance(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"instance must be 'first' or 'second', not {text!r}") from exc


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cuboidparam",
        description="Exact tools for the two sextic parametrizations of "
                    "rational cuboid solutions.",
        epilog=EXIT_CODES_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--e21-variant", choices=E21_VARIANTS,
                        default=E21_CORRECTED,
                        help="which E21 transcription to use "
                             "(see TRANSCRIPTION.md)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print the nine E_ij values at (b, c)")
    p.add_argument("b", type=_rat)
    p.add_argument("c", type=_rat)

    p = sub.add_parser("singular",
                       help="list the denominator factors vanishing at (b, c)")
    p.add_argument("b", type=_rat)
    p.add_argument("c", type=_rat)

    p = sub.add_parser("dparam", help="resolvent parameter D at (b, c)")
    p.add_argument("which", type=_instance)
    p.add_argument("b", type=_rat)
    p.add_argument("c", type=_rat)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--explicit", action="store_true",
                   help="use the closed-form expression")
    g.add_argument("--pipeline", action="store_true",
                   help="depress the cubic and form B0^2/B1^3 (default)")

    p = sub.add_parser("roots",
                       help="rationality verdict for a3 x^3 + a2 x^2 + a1 x "
                            "+ a0")
    for name in ("a3", "a2", "a1", "a0"):
        p.add_argument(name, type=_rat)
    p.add_argument("--height-bound", type=int, default=DEFAULT_HEIGHT_BOUND)

    p = sub.add_parser("sextic", help="print the resolvent sextic at (b, c)")
    p.add_argument("which", type=_instance)
    p.add_argument("b", type=_rat)
    p.add_argument("c", type=_rat)

    p = sub.add_parser("param",
                       help="lift a witness w to the instance's root triple")
    p.add_argument("which", type=_instance)
    p.add_argument("b", type=_rat)
    p.add_argument("c", type=_rat)
    p.add_argument("w", type=_rat)

    p = sub.add_parser("complete",
                       help="solve the 3x3 completion system for the other "
                            "triple")
    p.add_argument("which", type=_instance)
    p.add_argument("b", type=_rat)
    p.add_argument("c", type=_rat)
    for name in ("v1", "v2", "v3"):
        p.add_argument(name, type=_rat)

    p = sub.add_parser("verify",
                       help="exact residuals of all equations at a sextuple")
    p.add_argument("b", type=_rat)
    p.add_argument("c", type=_rat)
    for name in ("x1", "x2", "x3", "d1", "d2", "d3"):
        p.add_argument(name, type=_rat)

    p = sub.add_parser("ring-verify",
                       help="identity check with w as a residue class mod "
                            "the sextic")
    p.add_argument("which", type=_instance)
    p.add_argument("b", type=_rat)
    p.add_argument("c", type=_rat)

    p = sub.add_parser("search", help="scan a height-bounded (b, c) grid")
    p.add_argument("--height-b", type=int, default=1)
    p.add_argument("--height-c", type=int, default=1)
    p.add_argument("--instance", choices=("first", "second", "both"),
                   default="both")
    p.add_argument("--root-height-bound", type=int,
                   default=DEFAULT_HEIGHT_BOUND)
    p.add_argument("--require-positive", action="store_true")
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--checkpoint", default=None,
                   help="checkpoint file (required for --resume)")
    p.add_argument("--output", default="-",
                   help="record file; '-' streams to stdout (no checkpoint)")
    p.add_argument("--resume", action="store_true",
                   help="continue from the checkpoint")

    p = sub.add_parser("degree-probe",
                       help="total degree of the cleared sextic in (b, c, w)")
    p.add_argument("which", type=_instance)
    p.add_argument("--seed", type=int, default=7)

    p = sub.add_parser("report",
                       help="render PNG figures summarizing a scan record "
                            "file")
    p.add_argument("records", help="path to a scan output file")
    p.add_argument("--out-dir", default=None)
    p.add_argument("--prefix", default="scan")

    return parser


def _cmd_coeffs(args):
    e = eval_coeffs(ParamPoint(args.b, args.c), args.e21_variant)
    table = e.as_dict()
    for name in COEFF_ORDER:
        print(f"{name} = {format_rational(table[name])}")
    return 0


def _cmd_singular(args):
    report = singular_factors(ParamPoint(args.b, args.c))
    if report.is_singular:
        print("singular: " + " ".join(sorted(report.vanishing)))
    else:
        print("nonsingular")
    return 0


def _cmd_dparam(args):
    point = ParamPoint(args.b, args.c)
    if args.explicit:
        d = (d1_explicit(point) if args.which is Instance.FIRST
             else d2_explicit(point))
    else:
        d = d_pipeline(args.which, point)
    print(format_rational(d))
    return 0


def _cmd_roots(args):
    cubic = Cubic(args.a3, args.a2, args.a1, args.a0)
    v = analyze_cubic(cubic, args.height_bound)
    print(f"decided = {str(v.decided).lower()}")
    print(f"has_three_rational_roots = "
          f"{str(v.has_three_rational_roots).lower()}")
    print("roots = " + " ".join(format_rational(r) for r in v.roots))
    print("witnesses = " + " ".join(
        f"{format_rational(w)}^{m}" for w, m in v.witnesses))
    print(f"path = {v.path}")
    if v.d is not None:
        print(f"D = {format_rational(v.d)}")
    return 0


def _cmd_sextic(args):
    point = ParamPoint(args.b, args.c)
    d = d_pipeline(args.which, point)
    print(format_poly(sextic_poly(d), var="w"))
    return 0


def _cmd_param(args):
    point = ParamPoint(args.b, args.c)
    lift = param_first if args.which is Instance.FIRST else param_second
    triple = lift(point, args.w, args.e21_variant)
    print(" ".join(format_rational(v) for v in triple))
    return 0


def _cmd_complete(args):
    point = ParamPoint(args.b, args.c)
    complete = (complete_first if args.which is Instance.FIRST
                else complete_second)
    triple = complete(point, (args.v1, args.v2, args.v3), args.e21_variant)
    print(" ".join(format_rational(v) for v in triple))
    return 0


def _cmd_verify(args):
    point = ParamPoint(args.b, args.c)
    sol = Solution(x=(args.x1, args.x2, args.x3),
                   d=(args.d1, args.d2, args.d3))
    rep = verify_solution(point, sol, args.e21_variant)
    for name, value in rep.residuals.items():
        print(f"{name} = {format_rational(value)}")
    print(f"all_pass={str(rep.all_pass).lower()} "
          f"positivity={str(rep.positivity).lower()}")
    return 0 if rep.all_pass else 1


def _cmd_ring_verify(args):
    ok = ring_verify_identities(ParamPoint(args.b, args.c), args.which,
                                args.e21_variant)
    print(f"ok={str(ok).lower()}")
    return 0 if ok else 1


def _cmd_search(args):
    config = SearchConfig(
        height_b=args.height_b, height_c=args.height_c,
        instance=args.instance, root_height_bound=args.root_height_bound,
        require_positive=args.require_positive, parallelism=args.parallelism,
        checkpoint_path=args.checkpoint)
    config.validate()
    if args.output == "-":
        if args.resume:
            raise ConfigInvalid("--resume needs --output pointing to a file")
        for _, rec in scan(config):
            print(rec.to_line())
        return 0
    counts = scan_to_file(config, args.output, resume=args.resume)
    for status, n in sorted(counts.items()):
        print(f"{status}\t{n}", file=sys.stderr)
    return 0


def _cmd_degree_probe(args):
    print(degree_probe(args.which, seed=args.seed))
    return 0


def _cmd_report(args):
    from .report import render_report
    for path in render_report(args.records, args.out_dir, args.prefix):
        print(path)
    return 0


_COMMANDS = {
    "coeffs": _cmd_coeffs,
    "singular": _cmd_singular,
    "dparam": _cmd_dparam,
    "roots": _cmd_roots,
    "sextic": _cmd_sextic,
    "param": _cmd_param,
    "complete": _cmd_complete,
    "verify": _cmd_verify,
    "ring-verify": _cmd_ring_verify,
    "search": _cmd_search,
    "degree-probe": _cmd_degree_probe,
    "report": _cmd_report,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (SingularPoint, SingularCompletion) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DegenerateDepression, WDegenerate) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (CheckpointMismatch, CheckpointCorrupt) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except CuboidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
