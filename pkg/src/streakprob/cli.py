"""Command-line interface: exact curves/grids, simulation, scenarios, tables.

Subcommands: exact | simulate | scenario | table | oracle. Every output
file starts with a '#'-prefixed manifest block (tool version, subcommand,
resolved parameters, input digest, seeds) and is byte-reproducible given
the same inputs, flags, and seeds; wall-clock duration goes to stderr only.

Exit codes: 0 success, 2 usage or validation error, 3 enumeration cap
violation, 4 internal numerical invariant breach.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import __version__, engine, montecarlo, oracle, rng
from .engine import NumericalInvariantError, StreakQuery, no_streak_curve, streak_grid
from .model import (
    ScenarioSpec,
    SequenceValidationError,
    UniformInterval,
    generate_scenario,
    load_sequence,
    sequence_to_csv,
)
from .oracle import EnumerationCapError

RNG_NOTE = "splitmix64 counter streams (see streakprob.rng)"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_NUMERICAL = 4


@dataclass
class RunManifest:
    """Provenance of one CLI invocation, embedded in every output file."""

    subcommand: str
    parameters: dict
    input_digest: str
    seeds: str
    version: str = __version__
    duration_seconds: float = 0.0  # reported on stderr, not in files

    def header_lines(self) -> list[str]:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        return [
            f"# streakprob {self.version}",
            f"# subcommand: {self.subcommand}",
            f"# parameters: {params}",
            f"# input-sha256: {self.input_digest}",
            f"# seed: {self.seeds}",
            f"# rng: {RNG_NOTE}",
        ]


def _digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _write_output(out: Optional[str], manifest: RunManifest, header: str, rows) -> None:
    lines = manifest.header_lines()
    lines.append(header)
    lines.extend(rows)
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# ---------------------------------------------------------------------------
# argparse types
# ---------------------------------------------------------------------------

def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}") from None
    try:
        return rng.check_seed(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _level_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a confidence level, got {text!r}") from None
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"confidence level must be in (0, 1), got {value}")
    return value


def _kind_arg(text: str) -> str:
    try:
        return engine.normalize_kind(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _uniform_arg(text: str) -> UniformInterval:
    if not text.startswith("uniform:"):
        raise argparse.ArgumentTypeError(
            f"distribution must look like uniform:LOW,HIGH, got {text!r}")
    body = text[len("uniform:"):]
    parts = body.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"distribution must look like uniform:LOW,HIGH, got {text!r}")
    try:
        low, high = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric interval endpoint in {text!r}") from None
    try:
        return UniformInterval(low, high)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _k_list_arg(text: str) -> list[int]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("k list must not be empty")
    return [_positive_int(p.strip()) for p in parts]


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_exact(args) -> int:
    seq = load_sequence(args.input)
    digest = _digest(args.input)
    if args.max_k is not None:
        grid = streak_grid(seq, args.kind, args.max_k)
        manifest = RunManifest(
            "exact",
            {"input": args.input, "kind": args.kind, "max-k": args.max_k, "n": seq.n},
            digest, "none")
        rows = [f"{k},{float(grid.values[k - 1])!r}" for k in range(1, args.max_k + 1)]
        _write_output(args.out, manifest, "k,streak_probability", rows)
    else:
        curve = no_streak_curve(seq, StreakQuery(args.kind, args.k))
        manifest = RunManifest(
            "exact",
            {"input": args.input, "kind": args.kind, "k": args.k, "n": seq.n},
            digest, "none")
        rows = [f"{m},{float(curve.values[m - 1])!r}" for m in range(1, curve.n + 1)]
        _write_output(args.out, manifest, "m,no_streak_probability", rows)
    return EXIT_OK


def _cmd_simulate(args) -> int:
    seq = load_sequence(args.input)
    digest = _digest(args.input)
    result = montecarlo.simulate(
        seq, StreakQuery(args.kind, args.k), args.reps, args.seed, args.level)
    manifest = RunManifest(
        "simulate",
        {"input": args.input, "kind": args.kind, "k": args.k, "reps": args.reps,
         "level": args.level, "interval": result.interval, "n": seq.n},
        digest, str(args.seed))
    row = (f"{args.k},{result.estimate!r},{result.ci_low!r},"
           f"{result.ci_high!r},{result.reps},{result.seed}")
    _write_output(args.out, manifest, "k,estimate,ci_low,ci_high,reps,seed", [row])
    return EXIT_OK


def _cmd_scenario(args) -> int:
    spec = ScenarioSpec(n=args.n, seed=args.seed, win=args.win, draw=args.draw, loss=args.loss)
    seq = generate_scenario(spec)
    manifest = RunManifest(
        "scenario",
        {"n": args.n,
         "win": _describe_dist(args.win, "remainder"),
         "draw": _describe_dist(args.draw, "constant:0"),
         "loss": _describe_dist(args.loss, "remainder")},
        "none", str(args.seed))
    csv_text = sequence_to_csv(seq)
    lines = csv_text.rstrip("\n").split("\n")
    _write_output(args.out, manifest, lines[0], lines[1:])
    return EXIT_OK


def _describe_dist(dist: Optional[UniformInterval], absent: str) -> str:
    if dist is None:
        return absent
    return f"uniform:{dist.low!r},{dist.high!r}"


def _cmd_table(args) -> int:
    seq = load_sequence(args.input)
    digest = _digest(args.input)
    rows = []
    for i, k in enumerate(args.ks):
        curve = no_streak_curve(seq, StreakQuery(args.kind, k))
        exact = curve.streak_probability
        # row i simulates with seed base+i so rows are independent
        row_seed = (args.seed + i) % (rng.MASK64 + 1)
        result = montecarlo.simulate(
            seq, StreakQuery(args.kind, k), args.reps, row_seed, args.level)
        rows.append(f"{k},{exact!r},{result.estimate!r},{result.ci_low!r},{result.ci_high!r}")
    manifest = RunManifest(
        "table",
        {"input": args.input, "kind": args.kind,
         "ks": ",".join(str(k) for k in args.ks), "reps": args.reps,
         "level": args.level, "n": seq.n, "row-seed-rule": "base+row-index"},
        digest, str(args.seed))
    _write_output(args.out, manifest, "k,exact,mc_estimate,ci_low,ci_high", rows)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    seq = load_sequence(args.input)
    prob = oracle.enumerate_streak_probability(seq, StreakQuery(args.kind, args.k))
    print(repr(prob))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="streakprob",
        description="Exact and simulated probabilities of win streaks in "
                    "sequences of independent games.")
    parser.add_argument("--version", action="version", version=f"streakprob {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    kinds_help = "streak kind: pure, nonlosing or inbetween"

    p = sub.add_parser("exact", help="exact no-streak curve or streak-probability grid")
    p.add_argument("input", help="probability CSV (game,loss,draw,win)")
    p.add_argument("--kind", type=_kind_arg, required=True, help=kinds_help)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=_positive_int, help="single streak parameter: emit the curve over m")
    group.add_argument("--max-k", type=_positive_int, help="emit the grid of streak probabilities for k=1..max-k")
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.set_defaults(handler=_cmd_exact)

    p = sub.add_parser("simulate", help="Monte-Carlo estimate with confidence interval")
    p.add_argument("input", help="probability CSV (game,loss,draw,win)")
    p.add_argument("--kind", type=_kind_arg, required=True, help=kinds_help)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--reps", type=_positive_int, required=True, help="number of replicates")
    p.add_argument("--seed", type=_seed_arg, required=True, help="unsigned 64-bit seed")
    p.add_argument("--level", type=_level_arg, default=0.95, help="confidence level (default 0.95)")
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("scenario", help="generate a synthetic probability CSV")
    p.add_argument("--n", type=_positive_int, required=True, help="number of games")
    p.add_argument("--win", type=_uniform_arg, help="uniform:LOW,HIGH win probabilities (loss becomes the remainder)")
    p.add_argument("--loss", type=_uniform_arg, help="uniform:LOW,HIGH loss probabilities (win becomes the remainder)")
    p.add_argument("--draw", type=_uniform_arg, help="uniform:LOW,HIGH draw probabilities (default: constant 0)")
    p.add_argument("--seed", type=_seed_arg, required=True, help="unsigned 64-bit seed")
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.set_defaults(handler=_cmd_scenario)

    p = sub.add_parser("table", help="exact vs Monte-Carlo comparison rows")
    p.add_argument("input", help="probability CSV (game,loss,draw,win)")
    p.add_argument("--kind", type=_kind_arg, required=True, help=kinds_help)
    p.add_argument("--ks", type=_k_list_arg, required=True, help="comma-separated streak parameters")
    p.add_argument("--reps", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed_arg, required=True, help="base seed; row i uses seed base+i")
    p.add_argument("--level", type=_level_arg, default=0.95)
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("oracle", help="exhaustive-enumeration probability (small n only)")
    p.add_argument("input", help="probability CSV (game,loss,draw,win)")
    p.add_argument("--kind", type=_kind_arg, required=True, help=kinds_help)
    p.add_argument("--k", type=_positive_int, required=True)
    p.set_defaults(handler=_cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.handler(args)
    except SequenceValidationError as exc:
        print(f"streakprob {args.subcommand}: validation failed", file=sys.stderr)
        for violation in exc.violations:
            print(f"  {violation}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapError as exc:
        print(f"streakprob {args.subcommand}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NumericalInvariantError as exc:
        print(f"streakprob {args.subcommand}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, OSError) as exc:
        print(f"streakprob {args.subcommand}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    duration = time.perf_counter() - start
    print(f"streakprob {args.subcommand}: completed in {duration:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
