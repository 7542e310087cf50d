import argparse
import importlib
import logging
import os
import sys
from typing import Union

from dotenv import load_dotenv

from multiseg.config import get_settings
from multiseg.errors import (
    CapExceededError,
    MultisegmentError,
    NegativeMultiplicityError,
    PropertyViolation,
)
from verbs.descriptions.common import PROG_DESC
from verbs.enum.exit_code import ExitCode
from verbs.util.arguments import CommandParser, common_arguments
from verbs.util.log import setup_logging

VERBS_DIR: str = os.path.join(os.path.dirname(os.path.abspath(__file__)), "verbs")


def load_verbs(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    for filename in sorted(os.listdir(VERBS_DIR)):
        if filename.endswith(".py"):
            module = importlib.import_module(f"verbs.{filename[:-3]}")
            module.setup(subparsers, parent)


def build_parser() -> CommandParser:
    parser: CommandParser = CommandParser(prog="multiseg", description=PROG_DESC)
    subparsers = parser.add_subparsers(dest="verb", required=True)
    load_verbs(subparsers, common_arguments())
    return parser


def _fail(error: MultisegmentError, code: ExitCode) -> int:
    logging.getLogger("main").error(error)
    print(f"error: {error}", file=sys.stderr)
    if isinstance(error, PropertyViolation) and error.reproducer is not None:
        print(f"reproducer: {error.reproducer}", file=sys.stderr)
    return int(code)


def run(argv: Union[list[str], None] = None) -> int:
    """Parse `argv`, run the chosen verb and return its exit code."""
    try:
        setup_logging(get_settings().log_level)
        args: argparse.Namespace = build_parser().parse_args(argv)
        return int(args.handler(args))
    except (PropertyViolation, NegativeMultiplicityError) as error:
        return _fail(error, ExitCode.PROPERTY_VIOLATION)
    except CapExceededError as error:
        return _fail(error, ExitCode.CAP_EXCEEDED)
    except MultisegmentError as error:
        return _fail(error, ExitCode.USAGE)


def main() -> None:
    load_dotenv()
    sys.exit(run())


if __name__ == "__main__":
    try:
        main()
    except KeyboardInterrupt:
        logging.getLogger("main").info("Gracefully handling keyboard interrupt")
