"""Command-line entry point.

Exit codes: 0 on success, 2 on usage errors, 1 on numerical failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

import numpy as np

from .analytic import radial_wavefunction_value
from .errors import CurvedKeplerError
from .grid import MIN_CELLS, build_grid
from .model import ManifoldKind, ModelParams, QuantumNumbers
from .oracle import DEFAULT_THETA_MAX, numeric_spectrum
from .report import (
    GENERATED_BY,
    analytic_report,
    compare_report,
    oracle_report,
    serialize_report,
    to_json_text,
    write_atomic,
)

PARAM_FLAGS = {"mass": "--mass", "inertia": "--inertia", "radius": "--radius", "alpha": "--alpha", "hbar": "--hbar"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--manifold", choices=["sphere", "pseudosphere"], default="sphere")
    common.add_argument("--sign", choices=["plus", "minus"], default=None,
                        help="branch of the +-(m/I)R^2 term (pseudosphere only, default plus)")
    common.add_argument("--n", type=int, default=0)
    common.add_argument("--l", type=int, default=0)
    common.add_argument("--grid", type=int, default=2000, metavar="N", help="number of grid cells")
    common.add_argument("--theta-max", type=float, default=None, metavar="X",
                        help=f"pseudosphere truncation (default {DEFAULT_THETA_MAX:g})")
    for name, flag in PARAM_FLAGS.items():
        common.add_argument(flag, type=float, default=None, dest=name)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--output", default=None, metavar="PATH")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="curved-kepler", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=GENERATED_BY)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common()

    p = sub.add_parser("spectrum", parents=[common], help="closed-form levels")
    p.add_argument("--kmax", type=int, default=2)

    p = sub.add_parser("oracle", parents=[common], help="finite-difference levels")
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--extrapolate", action=argparse.BooleanOptionalAction, default=True,
                   help="report Richardson limits from N/4, N/2 and N cells")

    p = sub.add_parser("compare", parents=[common], help="closed-form versus finite-difference levels")
    p.add_argument("--kmax", type=int, default=2)
    p.add_argument("--extrapolate", action=argparse.BooleanOptionalAction, default=True)

    p = sub.add_parser("wavefunction", parents=[common], help="radial function samples")
    p.add_argument("--k", type=int, default=0, help="level (closed-form k or numeric index)")
    p.add_argument("--source", choices=["analytic", "numeric"], default="analytic")

    p = sub.add_parser("check", parents=[common], help="run the invariant and convergence suite")
    return parser


def _resolve(args) -> tuple[ManifoldKind, ModelParams, tuple[str, ...], float | None]:
    if args.manifold == "sphere":
        if args.theta_max is not None:
            raise UsageError("--theta-max is only valid with --manifold pseudosphere")
        if args.sign is not None:
            raise UsageError("--sign is only valid with --manifold pseudosphere")
        kind = ManifoldKind.sphere()
        theta_max = None
    else:
        kind = ManifoldKind.pseudosphere(args.sign or "plus")
        theta_max = DEFAULT_THETA_MAX if args.theta_max is None else args.theta_max
        if not (np.isfinite(theta_max) and theta_max > 0):
            raise UsageError("--theta-max must be > 0")
    values = {}
    defaulted = []
    for name, flag in PARAM_FLAGS.items():
        v = getattr(args, name)
        if v is None:
            defaulted.append(name)
            continue
        if not (np.isfinite(v) and v > 0):
            raise UsageError(f"{flag} must be a finite number > 0")
        values[name] = v
    if args.grid < MIN_CELLS:
        raise UsageError(f"--grid must be >= {MIN_CELLS}")
    return kind, ModelParams(**values), tuple(defaulted), theta_max


def _check_extrapolation(args):
    if args.extrapolate and (args.grid % 4 or args.grid // 4 < MIN_CELLS):
        raise UsageError(f"--grid must be a multiple of 4 and >= {4 * MIN_CELLS} with --extrapolate")


def _wavefunction_payload(args, kind, p, theta_max) -> bytes:
    if args.k < 0:
        raise UsageError("--k must be >= 0")
    if args.source == "analytic":
        grid = build_grid(kind, args.grid, theta_max)
        if kind.is_sphere:
            grid = grid.window(np.pi / 2)
        theta = grid.nodes
        values = radial_wavefunction_value(kind, p, QuantumNumbers(args.n, args.l, args.k), theta)
        normalization = "raw"
    else:
        levels = numeric_spectrum(kind, p, args.n, args.l, args.k + 1, args.grid, theta_max)
        samples = levels[args.k].eigenvector
        theta, values = samples.grid.nodes, samples.values
        normalization = "unit"
    if args.format == "json":
        obj = {
            "manifold": kind.kind.value,
            "sign": None if kind.is_sphere else kind.pseudo_sign.value,
            "params": p.as_dict(),
            "mode": {"n": args.n, "l": args.l, "k": args.k},
            "source": args.source,
            "normalization": normalization,
            "theta": [float(x) for x in theta],
            "values": [float(x) for x in values],
            "generated_by": GENERATED_BY,
        }
        return (to_json_text(obj) + "\n").encode()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["theta", "value"])
    for t, v in zip(theta, values):
        writer.writerow(["%.17g" % t, "%.17g" % v])
    return buf.getvalue().encode()


def _emit(args, payload: bytes) -> None:
    if args.output:
        write_atomic(args.output, payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()


def run(args) -> int:
    kind, p, defaulted, theta_max = _resolve(args)
    cmd = args.command
    if cmd == "spectrum":
        if args.kmax < 0:
            raise UsageError("--kmax must be >= 0")
        report = analytic_report(kind, p, args.n, args.l, args.kmax, natural_units=defaulted)
    elif cmd == "oracle":
        if args.count < 0:
            raise UsageError("--count must be >= 0")
        _check_extrapolation(args)
        report = oracle_report(kind, p, args.n, args.l, args.count, args.grid, theta_max,
                               extrapolate=args.extrapolate, natural_units=defaulted)
    elif cmd == "compare":
        if args.kmax < 0:
            raise UsageError("--kmax must be >= 0")
        _check_extrapolation(args)
        report = compare_report(kind, p, args.n, args.l, args.kmax, args.grid, theta_max,
                                extrapolate=args.extrapolate, natural_units=defaulted)
    elif cmd == "wavefunction":
        _emit(args, _wavefunction_payload(args, kind, p, theta_max))
        return 0
    else:
        from .checks import run_checks

        results = run_checks(kind, p, theta_max)
        lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results]
        _emit(args, ("\n".join(lines) + "\n").encode())
        return 0 if all(r.passed for r in results) else 1
    _emit(args, serialize_report(report, args.format))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return run(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (CurvedKeplerError, ArithmeticError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: numerical failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
