#!/usr/bin/env python3
"""
indsub CLI - machine-checked fixed-point witnesses for counting induced subgraphs
"""

import argparse
import sys
from typing import List, Optional

from loguru import logger

from src.core.errors import IndsubError, InputError


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 1), not argparse's exit 2."""

    def error(self, message: str) -> None:
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="indsub",
        description="Alternating enumerators, fixed-point witnesses and reductions for #IndSub(Φ)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  indsub lattice --p 11                              # 32 fixed points of Rot_11, by level
  indsub lattice --p 2 --m 3 --group sylow --output csv
  indsub ae --property bipartite --graph k3.txt --p 3
  indsub witness --property phi2_3 --p 7             # prime-power witness
  indsub witness --property independent --p 2 --m 2 --witness sylow
  indsub witness --property phi1_half --k 6 --witness classify
  indsub reduce --property bipartite --graph c4.txt --h k2.txt --k 2 --verify
  indsub gadget --f k22.txt --ell 2 --graph k3.txt
  indsub verify                                      # quick acceptance suites
  indsub verify --full --suite unimodularity         # one suite, acceptance scale

  # Replay a saved run profile (flags override profile values):
  indsub --config run.yml
        """,
    )
    parser.add_argument(
        "command",
        nargs="?",
        choices=["ae", "lattice", "witness", "reduce", "gadget", "verify"],
        help="Command to execute",
    )
    parser.add_argument("--property", dest="property_source", help="Built-in name, property file or inline DSL text")
    parser.add_argument("--graph", dest="graph_file", help="Graph file (the host G, or the graph for ae)")
    parser.add_argument("--f", dest="f_file", help="Pattern F for the clique gadget")
    parser.add_argument("--h", dest="h_file", help="Shift graph H for reduce")
    parser.add_argument("--p", type=int, help="Prime")
    parser.add_argument("--m", type=int, help="Exponent, field F_{p^m} (default 1)")
    parser.add_argument("--d", type=int, help="Number of blocks for the product group (default 1)")
    parser.add_argument("--k", type=int, help="Vertex count / subset size")
    parser.add_argument("--ell", type=int, help="Clique size for the gadget")
    parser.add_argument(
        "--group",
        choices=["rotation", "sylow", "product", "trivial"],
        help="Acting group for ae and lattice (default rotation)",
    )
    parser.add_argument(
        "--witness",
        choices=["prime-power", "sylow", "classify", "probe", "avalanche"],
        help="Witness search (default prime-power)",
    )
    parser.add_argument("--subset", nargs="+", help="Difference set A for the avalanche check, e.g. 1 2 3 4")
    parser.add_argument("--output", choices=["json", "csv", "pretty"], help="Output format (default json)")
    parser.add_argument("--verify", action="store_true", default=None, help="Cross-check results independently")
    parser.add_argument("--full", action="store_true", default=None, help="Run verify at the acceptance scale")
    parser.add_argument(
        "--check-pushdown",
        action="store_true",
        default=None,
        help="Probe pushdown soundness on every level during the Sylow search",
    )
    parser.add_argument("--suite", dest="suites", action="append", help="Restrict verify to a named criterion")
    parser.add_argument("--max-edges-naive", type=int, help="Edge cap of the naive engine (<= 64)")
    parser.add_argument("--max-orbits", type=int, help="Orbit cap for fixed-point enumeration (<= 30)")
    parser.add_argument("--max-tw-n", type=int, help="Vertex cap for exact treewidth (<= 16)")
    parser.add_argument("--config", help="Load a YAML run profile")
    parser.add_argument("--save-config", help="Save the effective run as a YAML profile")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    return parser


def configure_logging(verbose: bool) -> None:
    from src.config.settings import settings

    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else settings.log_level)


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the process exit code"""
    from src.cli.commands import dispatch
    from src.cli.output import emit
    from src.config.config_manager import ConfigManager
    from src.config.run_config import RunConfig

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    except InputError as e:
        print(f"indsub: {e}", file=sys.stderr)
        return e.exit_code
    configure_logging(args.verbose)

    overrides = {
        name: getattr(args, name)
        for name in (
            "command",
            "property_source",
            "graph_file",
            "f_file",
            "h_file",
            "p",
            "m",
            "d",
            "k",
            "ell",
            "group",
            "witness",
            "subset",
            "output",
            "verify",
            "full",
            "check_pushdown",
            "suites",
        )
    }
    overrides["caps"] = {
        "max_edges_naive": args.max_edges_naive,
        "max_orbits": args.max_orbits,
        "max_tw_n": args.max_tw_n,
    }

    try:
        if args.config:
            manager = ConfigManager(args.config)
            config = manager.merge(manager.load(), overrides)
        else:
            if args.command is None:
                raise InputError("a command is required unless --config is given")
            config = ConfigManager().merge(RunConfig(), overrides)
        if args.save_config:
            ConfigManager(args.save_config).save(config)

        result = dispatch(config)
    except IndsubError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except Exception as e:
        logger.exception(f"Unexpected failure: {e}")
        return 1

    emit(result.payload, config.output, result.rows)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
