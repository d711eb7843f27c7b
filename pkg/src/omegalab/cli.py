"""Command-line entry point: one subcommand per check family plus the
distribution experiment. Exit code 0 iff every check ran within its
registered tolerance."""

import argparse
import dataclasses
import json
import sys

from .checks import (
    chebyshev_entropy_sum,
    independence_check,
    independence_max_check,
    lindeberg_check,
    lindeberg_lambda,
    mertens_sum,
    tolerances,
)
from .errors import OmegaLabError
from .experiment import EkReport, ExperimentConfig, emit_report, run_ek_experiment
from .omega import omega_range, omega_truncated
from .primes import PrimeTable, primes_up_to
from .stats import BinPolicy

_CLI_FORMATS = {"json": "json", "csv": "csv-histogram", "svg": "svg-histogram"}


def _parse_tolerances(pairs):
    overrides = {}
    for item in pairs or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise OmegaLabError(f"--tolerance expects name=value, got {item!r}")
        overrides[name] = float(value)
    return overrides


def _emit(args, payload: bytes) -> None:
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload.decode())


def _check_json(result) -> bytes:
    d = dataclasses.asdict(result)
    return (json.dumps(d, sort_keys=True, indent=2, default=str) + "\n").encode()


def _experiment_config(args) -> ExperimentConfig:
    bins = BinPolicy(width=args.bin_width, lo=args.bin_lo, hi=args.bin_hi)
    return ExperimentConfig(
        n_decimal=args.n,
        mode=args.mode,
        samples=args.samples,
        truncation_bound=args.bound,
        seed=args.seed,
        bins=bins,
        sigma_mode=args.sigma,
        lindeberg_variant=args.lindeberg,
        lindeberg_epsilon=args.epsilon,
        threads=args.threads,
        tolerance_overrides=_parse_tolerances(args.tolerance),
    )


def _run_report(args) -> tuple[EkReport, bytes]:
    report = run_ek_experiment(_experiment_config(args))
    return report, emit_report(report, _CLI_FORMATS[args.format])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omegalab",
        description="Distinct prime divisor statistics and normality experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="write output to this path")
    common.add_argument(
        "--tolerance",
        action="append",
        metavar="NAME=VALUE",
        help="override a registry tolerance (repeatable)",
    )

    p = sub.add_parser("primes", parents=[common], help="build or load a prime table")
    p.add_argument("--bound", type=int, help="sieve primes up to this bound")
    p.add_argument("--load", help="load and verify a binary cache file")
    p.add_argument("--save", help="write the binary cache file here")

    p = sub.add_parser("omega", parents=[common], help="distinct prime divisor counts")
    p.add_argument("--lo", type=int, help="range start (exact mode)")
    p.add_argument("--hi", type=int, help="range end (exact mode)")
    p.add_argument("--n", help="decimal integer for truncated omega")
    p.add_argument("--bound", type=int, default=100_000, help="truncation bound")

    for name, helptext in (
        ("mertens", "prime reciprocal sum vs ln ln N"),
        ("chebyshev", "information sum log2(p)/p vs log2 N"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("independence", parents=[common], help="pairwise divisibility")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, help="first prime (omit to scan pairs)")
    p.add_argument("--q", type=int, help="second prime")
    p.add_argument("--max-prime", type=int, default=50, dest="max_prime")

    p = sub.add_parser("lindeberg", parents=[common], help="truncated second moments")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--lindeberg", choices=("centered", "literal"), default="centered")

    for name, helptext in (
        ("ekdist", "run the distribution experiment"),
        ("report", "full experiment report with all checks"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--n", required=True, help="upper bound N as a decimal string")
        p.add_argument("--mode", choices=("exhaustive", "sample"), default="sample")
        p.add_argument("--samples", type=int, default=100_000)
        p.add_argument("--bound", type=int, default=100_000, help="truncation bound")
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--sigma", choices=("lnln", "model"), default=None)
        p.add_argument("--lindeberg", choices=("centered", "literal"), default="centered")
        p.add_argument("--epsilon", type=float, default=1.0)
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--format", choices=tuple(_CLI_FORMATS), default="json")
        p.add_argument("--bin-width", type=float, default=0.5)
        p.add_argument("--bin-lo", type=float, default=-4.0)
        p.add_argument("--bin-hi", type=float, default=4.0)

    return parser


def _cmd_primes(args) -> int:
    if args.load:
        table = PrimeTable.load(args.load)
    elif args.bound is not None:
        table = primes_up_to(args.bound)
    else:
        raise OmegaLabError("primes: provide --bound or --load")
    if args.save:
        table.save(args.save)
    summary = {
        "bound": table.bound,
        "count": table.prime_count(),
        "first": int(table.primes[0]),
        "last": int(table.primes[-1]),
    }
    _emit(args, (json.dumps(summary, sort_keys=True, indent=2) + "\n").encode())
    return 0


def _cmd_omega(args) -> int:
    if args.n is not None:
        table = primes_up_to(args.bound)
        res = omega_truncated(int(args.n), table)
        payload = {"n": args.n, "bound": res.bound, "omega_truncated": res.value_omega}
    elif args.lo is not None and args.hi is not None:
        rng = omega_range(args.lo, args.hi)
        payload = {
            "lo": rng.lo,
            "hi": rng.hi,
            "counts": [int(c) for c in rng.counts],
        }
    else:
        raise OmegaLabError("omega: provide --lo/--hi or --n")
    _emit(args, (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode())
    return 0


def _cmd_check(args, fn) -> int:
    registry = tolerances(_parse_tolerances(args.tolerance))
    table = primes_up_to(max(2, args.n))
    result = fn(args.n, table, registry)
    _emit(args, _check_json(result))
    return 0 if result.passed else 1


def _cmd_independence(args) -> int:
    registry = tolerances(_parse_tolerances(args.tolerance))
    if args.p is not None and args.q is not None:
        result = independence_check(args.p, args.q, args.n, registry)
    else:
        table = primes_up_to(max(2, min(args.n, args.max_prime)))
        result = independence_max_check(args.n, table, registry, args.max_prime)
    _emit(args, _check_json(result))
    return 0 if result.passed else 1


def _cmd_lindeberg(args) -> int:
    registry = tolerances(_parse_tolerances(args.tolerance))
    variant = args.lindeberg
    table = primes_up_to(max(2, args.n))
    rep = lindeberg_lambda(args.n, args.epsilon, table, variant)
    result = lindeberg_check(args.n, args.epsilon, table, variant, registry)
    payload = dataclasses.asdict(rep)
    payload["passed"] = result.passed
    _emit(args, (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode())
    return 0 if result.passed else 1


def _cmd_experiment(args) -> int:
    report, payload = _run_report(args)
    _emit(args, payload)
    return 0 if report.all_checks_passed() else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "primes":
            return _cmd_primes(args)
        if args.command == "omega":
            return _cmd_omega(args)
        if args.command == "mertens":
            return _cmd_check(args, mertens_sum)
        if args.command == "chebyshev":
            return _cmd_check(args, chebyshev_entropy_sum)
        if args.command == "independence":
            return _cmd_independence(args)
        if args.command == "lindeberg":
            return _cmd_lindeberg(args)
        if args.command in ("ekdist", "report"):
            return _cmd_experiment(args)
    except OmegaLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
