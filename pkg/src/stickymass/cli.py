"""Command line entry point: ``stickymass <subcommand> ...``."""

from __future__ import annotations

import argparse
import contextlib
import sys
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np

from stickymass.analytics.bounds import bound_report
from stickymass.analytics.mse import DEFAULT_MAX_DISTINCT
from stickymass.channel import ChannelParams, simulate_markov, simulate_repeats
from stickymass.distributions import parse_dist_spec
from stickymass.estimators import AlphaSource, estimate_alpha, good_turing, modified_good_turing
from stickymass.harness import ALPHA_MODES, ExperimentSpec, figdata, format_csv, run_mse_experiment
from stickymass.stats import counts, missing_mass, phi1_interior, state_changes
from stickymass.verify import GRIDS, format_table, run_verification

DIST_HELP = (
    "input distribution: powerlaw:K,s | uniform:K | nearly:K,p1,s | twopoint:gamma,L | "
    "explicit:p1,p2,... ; K may be given as e.g. 1.2n (ceil(1.2*n))"
)

# flags whose value may be given more than once
REPEATABLE = {"alpha", "n"}


def read_config(path: str) -> Dict[str, List[str]]:
    """Parse ``key = value`` lines; ``#`` starts a comment, repeated keys accumulate."""
    out: Dict[str, List[str]] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key = key.strip().lstrip("-").replace("-", "_")
        out.setdefault(key, []).append(value.strip())
    return out


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, default=None, help="master seed, unsigned 64-bit (default 0)")
    parser.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument("--config", default=None, help="file of 'key = value' lines; flags win on conflict")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stickymass", description="Missing mass estimation from sticky channels")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="print one channel output sequence")
    p.add_argument("--dist", help=DIST_HELP)
    p.add_argument("--alpha", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=("markov", "repeats"), default=None)
    _common(p)

    p = sub.add_parser("estimate", help="occupancy statistics and missing-mass estimates for one sequence")
    p.add_argument("--dist", help=DIST_HELP + " (needed to simulate and to report the true missing mass)")
    p.add_argument("--alpha", help="known stickiness, or 'auto' to use only the state-change estimate")
    p.add_argument("--n", type=int)
    p.add_argument("--input", default=None, help="read the sequence (whitespace-separated letters) from a file, '-' for stdin")
    p.add_argument("--clip", action="store_true", default=None, help="truncate estimates to [0, 1]")
    _common(p)

    p = sub.add_parser("mse", help="Monte Carlo MSE over an (alpha, n) grid, as CSV")
    p.add_argument("--dist", help=DIST_HELP)
    p.add_argument("--alpha", type=float, action="append")
    p.add_argument("--n", type=int, action="append")
    p.add_argument("--trials", type=int)
    p.add_argument("--alpha-mode", choices=ALPHA_MODES, default=None)
    p.add_argument("--no-exact", action="store_true", default=None, help="skip the exact-MSE column")
    _common(p)

    p = sub.add_parser("bounds", help="minimax bounds and, with --dist, exact MSE and bias")
    p.add_argument("--alpha", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--dist", help=DIST_HELP)
    p.add_argument("--csv", action="store_true", default=None)
    p.add_argument("--max-distinct", type=int, default=None, help=f"cap on distinct masses for exact MSE (default {DEFAULT_MAX_DISTINCT})")
    _common(p)

    p = sub.add_parser("verify", help="check every closed form against exhaustive enumeration")
    p.add_argument("--grid", choices=sorted(GRIDS), default=None)
    _common(p)

    p = sub.add_parser("figdata", help="regenerate the data behind one MSE-vs-n figure, as CSV")
    p.add_argument("figure", choices=("fig1", "fig2"))
    p.add_argument("--trials", type=int)
    p.add_argument("--no-exact", action="store_true", default=None)
    _common(p)
    return parser


DEFAULTS = {
    "seed": 0,
    "threads": 0,
    "method": "markov",
    "trials": 16000,
    "alpha_mode": "both",
    "no_exact": False,
    "clip": False,
    "csv": False,
    "grid": "small",
    "max_distinct": DEFAULT_MAX_DISTINCT,
}


def _apply_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if args.config:
        sub = parser._subparsers._group_actions[0].choices[args.command]
        actions = {a.dest: a for a in sub._actions}
        for key, values in read_config(args.config).items():
            if key not in actions or key == "config":
                raise ValueError(f"unknown config key {key!r} for {args.command}")
            if getattr(args, key) is not None:
                continue
            action = actions[key]
            conv = action.type or (lambda v: v)
            if isinstance(action, argparse._StoreTrueAction):
                value = values[-1].lower() in ("1", "true", "yes", "on")
            elif key in REPEATABLE and isinstance(action, argparse._AppendAction):
                value = [conv(tok) for v in values for tok in v.replace(",", " ").split()]
            else:
                value = conv(values[-1])
            setattr(args, key, value)
    for key, value in DEFAULTS.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) in (None, [])]
    if missing:
        raise ValueError(f"{args.command} needs {', '.join(missing)}")


def _read_sequence(path: str) -> np.ndarray:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return np.array([int(tok) for tok in text.split()], dtype=np.int64)


def _fmt(value) -> str:
    return "" if value is None else repr(value) if isinstance(value, float) else str(value)


def cmd_simulate(args) -> str:
    _require(args, "dist", "alpha", "n")
    dist = parse_dist_spec(args.dist, n=args.n)
    sim = simulate_markov if args.method == "markov" else simulate_repeats
    seq = sim(dist, ChannelParams(args.alpha), args.n, np.random.default_rng(args.seed))
    return " ".join(map(str, seq.letters.tolist())) + "\n"


def cmd_estimate(args) -> str:
    _require(args, "alpha")
    auto = args.alpha == "auto"
    if args.input is not None:
        letters = _read_sequence(args.input)
        dist = parse_dist_spec(args.dist, n=letters.size) if args.dist else None
    else:
        if auto:
            raise ValueError("--alpha auto needs --input: simulation requires a stickiness")
        _require(args, "dist", "n")
        dist = parse_dist_spec(args.dist, n=args.n)
        letters = simulate_markov(dist, ChannelParams(float(args.alpha)), args.n, np.random.default_rng(args.seed)).letters

    def show(x):
        return min(max(x, 0.0), 1.0) if args.clip else x

    occ = counts(letters)
    lines = [("n", letters.size)]
    if dist is not None:
        lines.append(("missing_mass", missing_mass(letters, dist)))
    lines += [("phi1", occ.phi_l(1)), ("phi1_interior", phi1_interior(letters)), ("state_changes", state_changes(letters))]
    lines.append(("good_turing", show(good_turing(letters).estimate)))
    a_hat = estimate_alpha(letters)
    lines.append(("alpha_hat", a_hat))
    if not auto:
        alpha = float(args.alpha)
        lines.append(("alpha_known", alpha))
        lines.append(("modified_good_turing_known", show(modified_good_turing(letters, alpha).estimate)))
    est = modified_good_turing(letters, a_hat, AlphaSource.ESTIMATED)
    lines.append(("modified_good_turing_estimated", show(est.estimate)))
    return "".join(f"{k}: {_fmt(v)}\n" for k, v in lines)


def cmd_mse(args) -> str:
    _require(args, "dist", "alpha", "n")
    spec = ExperimentSpec(
        dist_spec=args.dist,
        alphas=args.alpha,
        ns=args.n,
        trials=args.trials,
        seed=args.seed,
        alpha_mode=args.alpha_mode,
        exact=not args.no_exact,
    )
    return format_csv(run_mse_experiment(spec, threads=args.threads))


def cmd_bounds(args) -> str:
    _require(args, "alpha", "n")
    dist = parse_dist_spec(args.dist, n=args.n) if args.dist else None
    report = bound_report(args.n, args.alpha, dist, max_distinct=args.max_distinct).as_dict()
    if args.csv:
        return ",".join(report) + "\n" + ",".join(_fmt(v) for v in report.values()) + "\n"
    return "".join(f"{k}: {_fmt(v)}\n" for k, v in report.items() if v is not None)


def cmd_verify(args):
    results = run_verification(args.grid, seed=args.seed)
    ok = all(r.passed for r in results)
    return format_table(results) + f"\n{'ALL PASS' if ok else 'FAILURES'}\n", 0 if ok else 1


def cmd_figdata(args) -> str:
    report = figdata(args.figure, trials=args.trials, seed=args.seed, threads=args.threads, exact=not args.no_exact)
    return format_csv(report)


COMMANDS = {
    "simulate": cmd_simulate,
    "estimate": cmd_estimate,
    "mse": cmd_mse,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
    "figdata": cmd_figdata,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, parser)
        result = COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"stickymass {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text, status = result if isinstance(result, tuple) else (result, 0)
    if args.out:
        Path(args.out).write_text(text)
    else:
        with contextlib.suppress(BrokenPipeError):
            sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
