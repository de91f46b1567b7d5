"""Command-line front end.

Subcommands: sweep (grid -> CSV), point (one row to stdout), death-radius
and critical-kt (bisection threshold finders). Exit codes: 0 success,
2 invalid arguments, 3 no entanglement anywhere in a finder's bracket,
4 output I/O failure. The HEISENPAIR_WORKERS environment variable sets the
sweep worker count (default: number of processors).
"""

import argparse
import sys

from .errors import NoEntanglementError
from .model import ModelParams
from .sweep import (
    SweepConfig,
    find_critical_kt,
    find_death_radius,
    point_report,
    run_sweep,
)

_DEATH_RADIUS_NOTES = {
    "paper": (
        "# exact zero crossing of concurrence; in the default closed-form"
        " family it solves J(R*) = KT*ln(2)/2\n"
        "# note: coarse graphical readings of this boundary at KT = 0.2 are"
        " commonly quoted as R = 3.2; the exact crossing there is R = 2.924\n"
    ),
    "gibbs": (
        "# exact zero crossing of concurrence; for the exact thermal state it"
        " solves J(R*) = KT*ln(3)/2 (reconciled convention) or KT*ln(3)/4"
        " (eq3 convention)\n"
    ),
}


def _float_list(text):
    items = [tok for tok in text.split(",") if tok.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of numbers")
    try:
        return [float(tok) for tok in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number list: {text!r}")


def _add_eval_options(sub):
    sub.add_argument("--mode", choices=("paper", "gibbs"), default="paper",
                     help="thermal-state construction: closed form (paper) or"
                          " exact exponential (gibbs); default paper")
    sub.add_argument("--convention", choices=("reconciled", "eq3"),
                     default="reconciled",
                     help="Hamiltonian convention used in gibbs mode:"
                          " 'reconciled' halves exchange and field so the"
                          " Gibbs weights match the closed form's, 'eq3'"
                          " scales the field term by J(R); default reconciled")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="heisenpair",
        description="Thermal entanglement and quantum discord of a two-qubit"
                    " XXX Heisenberg pair with distance-dependent coupling"
                    " J(R) = 1.642 * exp(-2R) * R^(5/2).",
        epilog="Set HEISENPAIR_WORKERS to cap sweep parallelism"
               " (default: number of processors).",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sweep = subs.add_parser("sweep", help="evaluate a (R, B, KT) grid and write CSV")
    sweep.add_argument("--kt", type=_float_list, required=True, metavar="LIST",
                       help="comma-separated temperatures, e.g. 0.2,0.4")
    sweep.add_argument("--b", type=_float_list, required=True, metavar="LIST",
                       help="comma-separated magnetic fields, e.g. 0,0.5,1")
    sweep.add_argument("--r-min", type=float, required=True)
    sweep.add_argument("--r-max", type=float, required=True)
    sweep.add_argument("--r-steps", type=int, required=True,
                       help="number of uniform R grid points (>= 2)")
    _add_eval_options(sweep)
    sweep.add_argument("--grid-theta", type=int, default=181,
                       help="discord minimizer grid resolution (default 181)")
    sweep.add_argument("--tol", type=float, default=1e-9,
                       help="discord minimizer refinement width (default 1e-9)")
    sweep.add_argument("--out", required=True, help="output CSV path")

    point = subs.add_parser("point", help="evaluate one point, print one-row CSV")
    point.add_argument("--r", type=float, required=True)
    point.add_argument("--b", type=float, required=True)
    point.add_argument("--kt", type=float, required=True)
    _add_eval_options(point)
    point.add_argument("--grid-theta", type=int, default=181)
    point.add_argument("--tol", type=float, default=1e-9)

    death = subs.add_parser(
        "death-radius",
        help="coupling distance where concurrence reaches exactly zero",
        epilog="Reports the exact zero crossing. Coarse graphical readings of"
               " this boundary at KT = 0.2 are commonly quoted as R = 3.2;"
               " the exact crossing there is R = 2.924 (it solves"
               " J(R) = KT*ln(2)/2 in the default closed-form family).",
    )
    death.add_argument("--kt", type=float, required=True)
    death.add_argument("--b", type=float, required=True)
    _add_eval_options(death)
    death.add_argument("--tol", type=float, default=1e-9,
                       help="bisection bracket width (default 1e-9)")

    crit = subs.add_parser(
        "critical-kt",
        help="largest temperature with nonzero concurrence at the coupling peak",
    )
    crit.add_argument("--b", type=float, required=True)
    _add_eval_options(crit)
    crit.add_argument("--tol", type=float, default=1e-9,
                      help="bisection bracket width (default 1e-9)")

    return parser


def _run(args):
    if args.command == "sweep":
        cfg = SweepConfig(
            r_min=args.r_min,
            r_max=args.r_max,
            r_steps=args.r_steps,
            b_values=args.b,
            kt_values=args.kt,
            out_path=args.out,
            mode=args.mode,
            convention=args.convention,
            grid_theta=args.grid_theta,
            tol=args.tol,
        )
        records = run_sweep(cfg)
        print(f"wrote {len(records)} records to {cfg.out_path}")
    elif args.command == "point":
        point_report(
            ModelParams(r=args.r, b=args.b, kt=args.kt),
            mode=args.mode,
            convention=args.convention,
            grid_theta=args.grid_theta,
            tol=args.tol,
        )
    elif args.command == "death-radius":
        radius = find_death_radius(args.b, args.kt, mode=args.mode,
                                   convention=args.convention, tol=args.tol)
        sys.stdout.write(format(radius, ".12g") + "\n")
        sys.stdout.write(_DEATH_RADIUS_NOTES[args.mode])
    elif args.command == "critical-kt":
        kt_star = find_critical_kt(args.b, mode=args.mode,
                                   convention=args.convention, tol=args.tol)
        sys.stdout.write(format(kt_star, ".12g") + "\n")
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except NoEntanglementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
