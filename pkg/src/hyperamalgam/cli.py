"""Command-line entry point: ``hyperamalgam --suite NAME [options]``."""
from __future__ import annotations

import argparse
import os
import sys

from .errors import ConfigError, DomainError, UnknownSuite
from .harness import SUITES, RunConfig, emit, run_suite
from .params import _parse_exponent

SEED_ENV = "HYPERAMALGAM_SEED"


def _exponent(text: str) -> float:
    try:
        return _parse_exponent(text)
    except (DomainError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hyperamalgam",
        description="Run hypergroup amalgam-norm verification suites and emit reports.")
    ap.add_argument("--suite", required=True, choices=SUITES + ("all",))
    ap.add_argument("--seed", type=int, default=0,
                    help=f"base seed for generated inputs (overridden by ${SEED_ENV})")
    ap.add_argument("--p", type=_exponent, default=None,
                    help="restrict suites to this local exponent (number or 'inf')")
    ap.add_argument("--q", type=_exponent, default=None, help="global exponent (recorded)")
    ap.add_argument("--nmax", type=int, default=6, help="number of unit cells for discrete norms")
    ap.add_argument("--xmax", type=float, default=64.0, help="window for Bochner functions")
    ap.add_argument("--tol-abs", type=float, default=1e-10)
    ap.add_argument("--tol-rel", type=float, default=1e-8)
    ap.add_argument("--a", type=float, default=-16.0, help="Naimark character parameter")
    ap.add_argument("--workers", type=int, default=1, help="process pool size")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--out", default="-", help="output path ('-' for stdout)")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    seed = args.seed
    env = os.environ.get(SEED_ENV)
    if env:
        try:
            seed = int(env)
        except ValueError:
            print(f"error: {SEED_ENV}={env!r} is not an integer", file=sys.stderr)
            return 2
    try:
        cfg = RunConfig(seed=seed, p=args.p, q=args.q, n_max=args.nmax, x_max=args.xmax,
                        tol_abs=args.tol_abs, tol_rel=args.tol_rel, a=args.a, workers=args.workers)
        report = run_suite(args.suite, cfg)
    except (ConfigError, UnknownSuite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = emit(report, args.format, None if args.out == "-" else args.out)
    if args.out == "-":
        sys.stdout.write(text)
    s = report.summary
    print(f"{report.suite}: {s['passed']}/{s['asserted']} asserted cases passed, "
          f"{s['recorded']} recorded, {report.wall_time:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
