"""Command-line entry point: python -m coalition_interact.main <command> [options]."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from coalition_interact import config
from coalition_interact.axioms import GraphIndexKind
from coalition_interact.errors import CoalitionInteractError
from coalition_interact.indices import IndexKind
from coalition_interact.reporting.commands import (
    CASES,
    CommandResult,
    RunConfig,
    cmd_compute,
    cmd_counterfactual,
    cmd_independence,
    cmd_reproduce,
    cmd_verify,
)
from coalition_interact.reporting.outputs import FORMATS

logger = logging.getLogger("coalition_interact")

EXIT_CODES = """exit codes:
  0  success
  1  unexpected internal error
  2  invalid input
  3  game larger than the size cap
  4  verify or independence found an unexpected verdict
"""


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, help="Output file (default: a named file under generated/)")
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="csv")
    p.add_argument("--max-n", dest="max_n", type=int, help="Override the size cap for this run")
    p.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")


def _add_situation(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--game", dest="game_path", type=Path, required=required, help="Game file (JSON)")
    p.add_argument("--graph", dest="graph_path", type=Path, help="Graph file (JSON); omitted means complete")


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="coalition_interact",
        description="Exact interaction indices for cooperative games with restricted communication.",
        epilog=EXIT_CODES,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    index_kinds = [k.value for k in IndexKind]

    p = sub.add_parser("compute", help="Interaction table of a game, optionally on a graph")
    _add_situation(p)
    p.add_argument("--index", choices=index_kinds, default=IndexKind.SHAPLEY.value)
    p.add_argument("--order", type=int, help=f"Largest coalition size (default {config.DEFAULT_MAX_ORDER})")
    p.add_argument("--coalition", help='A single coalition, e.g. "1,3"')
    _add_common(p)

    p = sub.add_parser("reproduce", help="Tables of the messages game and the horse market")
    p.add_argument("--case", choices=CASES, help="Only one worked example (default both)")
    p.add_argument("--out", type=Path, help="Output directory (default generated/)")
    p.add_argument("-v", "--verbose", action="count", default=0)

    p = sub.add_parser("counterfactual", help="Index changes after adding or removing edges")
    _add_situation(p)
    p.add_argument("--index", choices=index_kinds, default=IndexKind.MYERSON.value)
    p.add_argument("--order", type=int)
    p.add_argument("--coalition")
    p.add_argument(
        "--toggle-edge", dest="toggles", action="append", default=[],
        help="i,j toggles an edge. Repeatable; use --toggle-edge=+i,j or =-i,j for a strict add or remove.",
    )
    p.add_argument(
        "--add-edge", dest="toggles", action="append", type=lambda s: f"+{s}",
        help="i,j must be a new edge. Repeatable.",
    )
    p.add_argument(
        "--remove-edge", dest="toggles", action="append", type=lambda s: f"-{s}",
        help="i,j must be an existing edge. Repeatable.",
    )
    _add_common(p)

    p = sub.add_parser("verify", help="Check the five properties for one graph interaction index")
    _add_situation(p, required=False)
    p.add_argument("--index", choices=[k.value for k in GraphIndexKind], default=GraphIndexKind.MYERSON.value)
    p.add_argument("--alpha", type=float, default=1.0, help="Bonus weight for fgn_modified")
    p.add_argument("--tol", type=float, default=config.AXIOM_TOL)
    _add_common(p)

    p = sub.add_parser("independence", help="Verdict matrix of the five counterexample indices")
    p.add_argument("--alpha", type=float, default=1.0, help="Bonus weight for fgn_modified")
    _add_common(p)

    return parser.parse_args(argv)


def _configure_logging(verbose: int) -> None:
    level = config.LOG_LEVEL.upper()
    if verbose == 1:
        level = "INFO"
    elif verbose >= 2:
        level = "DEBUG"
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def _run(args: argparse.Namespace) -> CommandResult:
    if args.command == "reproduce":
        return cmd_reproduce(args.case, args.out)
    cfg = RunConfig(
        game_path=getattr(args, "game_path", None),
        graph_path=getattr(args, "graph_path", None),
        index=getattr(args, "index", GraphIndexKind.MYERSON.value),
        order=getattr(args, "order", None),
        coalition=getattr(args, "coalition", None),
        out=args.out,
        fmt=args.fmt,
        toggles=tuple(getattr(args, "toggles", ())),
        max_n=args.max_n,
        tol=getattr(args, "tol", config.AXIOM_TOL),
        alpha=getattr(args, "alpha", 1.0),
    )
    commands = {
        "compute": cmd_compute,
        "counterfactual": cmd_counterfactual,
        "verify": cmd_verify,
        "independence": cmd_independence,
    }
    return commands[args.command](cfg)


def main(argv: list[str] | None = None) -> int:
    args = _parse_args(argv)
    _configure_logging(args.verbose)
    try:
        result = _run(args)
    except CoalitionInteractError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception:
        logger.exception("Unexpected failure")
        return 1
    sys.stdout.write(result.text)
    for path in result.paths:
        logger.info("wrote %s", path)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
