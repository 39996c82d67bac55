import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from ..errors import ConfigError
from .commands import cmd_check, cmd_solve, cmd_tree
from .config import RunConfig, default_depth
from .repl import Repl
from .results import EX_USAGE, CommandResult


class ArgumentParser(argparse.ArgumentParser):
    """An argument parser whose usage errors exit with status 64."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    options = ArgumentParser(add_help=False)
    options.add_argument("-p", "--program", type=Path, help="program file")
    options.add_argument("--depth", type=int, help="depth bound of TSLD-trees (default: $TSLD_DEPTH or 64)")
    options.add_argument("--max-answers", type=int, default=10, help="answers to report")
    options.add_argument("--pool-depth", type=int, default=2, help="tree depth of semantic value pools")
    options.add_argument("--format", choices=("text", "json", "dot"), default="text")
    options.add_argument("--semantic", action="store_true", help="also run the declarative checker")
    options.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    return options


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="tsld", description="Typed SLD-resolution with run-time type-error diagnosis.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    options = _common_options()

    solve = subparsers.add_parser("solve", parents=[options], help="answer a query")
    solve.add_argument("query", nargs="?", default="", help="query text, e.g. 'p(X).'")
    solve.set_defaults(func=lambda config, args: cmd_solve(config, args.query))

    check = subparsers.add_parser("check", parents=[options], help="diagnose a program")
    check.set_defaults(func=lambda config, args: cmd_check(config))

    tree = subparsers.add_parser("tree", parents=[options], help="print the TSLD-tree of a query")
    tree.add_argument("query", nargs="?", default="", help="query text")
    tree.set_defaults(func=lambda config, args: cmd_tree(config, args.query))

    repl = subparsers.add_parser("repl", parents=[options], help="interactive session")
    repl.set_defaults(func=lambda config, args: CommandResult(exit_code=Repl(config).run()))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = RunConfig(
            program_path=args.program,
            depth_bound=args.depth if args.depth is not None else default_depth(),
            max_answers=args.max_answers,
            value_pool_bound=args.pool_depth,
            output_format=args.format,
            semantic=args.semantic,
            verbose=args.verbose,
        )
    except ConfigError as e:
        print(f"tsld: error: {e.message}", file=sys.stderr)
        return EX_USAGE
    result: CommandResult = args.func(config, args)
    if result.output:
        print(result.output)
    if result.error:
        print(f"tsld: {result.error}", file=sys.stderr)
    return result.exit_code
