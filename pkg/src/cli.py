# src/cli.py
"""Command-line entry point: domset-lab {gen,solve,bounds,experiment,verify}.

Exit codes: 0 success, 1 error (including usage errors), 2 solver capped.
Every run first writes the resolved configuration as one JSON line to stderr;
for experiments it includes each trial's graph seed and tie seed.
"""

import argparse
import json
import sys
from typing import List, Sequence

from .bounds import CATALOG, evaluate
from .core.config import load_config
from .core.errors import DomsetError
from .core.logger import get_logger
from .core.schemas import Regime
from .core.seeding import derive_seed
from .graphs import format_graph, gnp_sample, read_graph, write_graph
from .harness import growth_rate, sweep, trial_seed, verify_all, write_csv
from .solvers import get_all_solvers, get_solver

log = get_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CAPPED = 2


class LabArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = LabArgumentParser(prog="domset-lab", description=__doc__,
                               formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=LabArgumentParser)

    gen = sub.add_parser("gen", help="sample a G(n, p) graph")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", help="output file (default: stdout)")

    solve = sub.add_parser("solve", help="compute a minimum dominating set")
    solve.add_argument("--in", dest="input", required=True, help="graph file")
    solve.add_argument("--algo", default="bb", choices=sorted(get_all_solvers()))
    solve.add_argument("--tie", default=None, choices=["det", "rand"])
    solve.add_argument("--seed", type=int, default=None, help="seed for --tie rand")
    solve.add_argument("--cap", type=int, default=None, help="expansion cap for bb")
    solve.add_argument("--frontier-limit", type=int, default=None)

    bounds = sub.add_parser("bounds", help="evaluate a closed-form bound")
    bound_sub = bounds.add_subparsers(dest="bound", required=True, parser_class=LabArgumentParser)
    for name, spec in sorted(CATALOG.items()):
        bp = bound_sub.add_parser(name, help=spec.help)
        for param, kind in spec.params.items():
            flag = "--" + param.replace("_", "-")
            if kind is bool:
                bp.add_argument(flag, dest=param, action="store_true", default=None)
            else:
                bp.add_argument(flag, dest=param, type=kind, default=None)

    exp = sub.add_parser("experiment", help="run a seeded sweep and write a CSV")
    exp.add_argument("--regime", required=True, help="fixed_p, c_over_n, f_over_n:log or f_over_n:sqrt")
    exp.add_argument("--param", type=float, required=True)
    exp.add_argument("--n-list", type=_int_list, required=True, help="e.g. 10,20,30")
    exp.add_argument("--trials", type=int, required=True)
    exp.add_argument("--seed", type=int, required=True, help="master seed")
    exp.add_argument("--algo", default="bb", choices=sorted(get_all_solvers()))
    exp.add_argument("--tie", default=None, choices=["det", "rand"])
    exp.add_argument("--cap", type=int, default=None)
    exp.add_argument("--out", required=True)
    exp.add_argument("--workers", type=int, default=None)

    ver = sub.add_parser("verify", help="cross-check all solvers against the oracle")
    ver.add_argument("--max-n", type=int, default=None)
    ver.add_argument("--battery", type=int, default=None)
    ver.add_argument("--seed", type=int, default=None)
    return parser


def _resolve(args: argparse.Namespace) -> dict:
    """Fill unset flags from config.yaml and return the effective settings."""
    config = load_config()
    if getattr(args, "tie", "unset") is None:
        args.tie = config.value("solver", "tie_rule", "det")
    resolved = {}
    if args.command == "experiment":
        if args.workers is None:
            args.workers = config.value("harness", "workers", 4)
        resolved["trial_seeds"] = _derived_seeds(args)
    if args.command == "verify":
        if args.max_n is None:
            args.max_n = config.value("guards", "verify_max_n", 5)
        if args.battery is None:
            args.battery = config.value("harness", "battery_size", 300)
        if args.seed is None:
            args.seed = config.value("harness", "master_seed", 0)
    if args.command in ("solve", "experiment") and getattr(args, "cap", None) is None:
        args.cap = config.value("solver", "cap", 10_000_000)
    return {"args": vars(args), "config": config.as_dict(), **resolved}


def _derived_seeds(args: argparse.Namespace) -> List[dict]:
    """Graph seed, and tie seed under the random rule, for every (n, trial) of an experiment."""
    regime = Regime.from_label(args.regime, args.param)
    seeds = []
    for n in args.n_list:
        for t in range(args.trials):
            seed = trial_seed(args.seed, regime, n, t)
            tie = derive_seed(seed, "tie") if args.tie == "rand" else None
            seeds.append({"n": n, "trial": t, "seed": seed, "tie_seed": tie})
    return seeds


def cmd_gen(args) -> int:
    g = gnp_sample(args.n, args.p, args.seed)
    if args.out:
        write_graph(g, args.out)
        print(f"n={g.n} m={g.edge_count()}")
    else:
        sys.stdout.write(format_graph(g))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = read_graph(args.input)
    options = {}
    if args.algo == "bb":
        options = {"tie_rule": args.tie, "seed": args.seed, "cap": args.cap,
                   "frontier_limit": args.frontier_limit}
    report = get_solver(args.algo, **options).solve(g)
    print(report.to_record())
    return EXIT_CAPPED if report.capped else EXIT_OK


def cmd_bounds(args) -> int:
    spec = CATALOG[args.bound]
    params = {p: getattr(args, p) for p in spec.params}
    for result in evaluate(args.bound, **params):
        print(result.to_record())
    return EXIT_OK


def cmd_experiment(args) -> int:
    regime = Regime.from_label(args.regime, args.param)
    records = sweep(regime, args.n_list, args.trials, args.seed, algo=args.algo, cap=args.cap,
                    tie_rule=args.tie, workers=args.workers)
    write_csv(records, args.out)

    estimate = growth_rate(records)
    for pt in estimate.points:
        rate = "n/a" if pt.rate is None else f"{pt.rate:.4f}"
        flag = "" if pt.valid else "  (invalid: too many capped)"
        print(f"n={pt.n} trials={pt.trials} capped={pt.capped} rate={rate}{flag}")
    if estimate.has_estimate:
        print(f"slope={estimate.slope:.4f} intercept={estimate.intercept:.4f} "
              f"excluded_capped={estimate.excluded_capped}")
    else:
        print(f"no estimate: {estimate.reason}")
    return EXIT_OK


def cmd_verify(args) -> int:
    summary = verify_all(args.max_n, args.battery, args.seed)
    print(summary.model_dump_json())
    for failure in summary.failures[:20]:
        print(failure, file=sys.stderr)
    return EXIT_OK if summary.passed else EXIT_ERROR


COMMANDS = {
    "gen": cmd_gen,
    "solve": cmd_solve,
    "bounds": cmd_bounds,
    "experiment": cmd_experiment,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        resolved = _resolve(args)
        print(json.dumps(resolved, sort_keys=True, default=str), file=sys.stderr)
        return COMMANDS[args.command](args)
    except (DomsetError, ValueError, OSError) as e:
        log.info(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
