import argparse
from pathlib import Path

from multiseg.core import Multisegment, parse_multisegment, parse_value
from multiseg.errors import CosetError, ParseError, UsageError
from verbs.descriptions.common import *
from verbs.enum.algorithm import Algorithm
from verbs.enum.output_format import OutputFormat


class CommandParser(argparse.ArgumentParser):
    """An `ArgumentParser` whose usage errors become exit code 1 instead of 2."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def read_multisegment(argument: str) -> Multisegment:
    """Inline text, or `@path` for a file holding the text."""
    if argument.startswith("@"):
        try:
            argument = Path(argument[1:]).read_text(encoding="utf-8")
        except OSError as error:
            raise UsageError(f"cannot read {argument[1:]!r}: {error.strerror}") from None
    return parse_multisegment(argument)


def support(text: str) -> tuple[int, int]:
    """`a..b` as a pair of doubled values."""
    low, separator, high = text.partition("..")
    if not separator:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    try:
        lo2, hi2 = parse_value(low), parse_value(high)
    except ParseError as error:
        raise argparse.ArgumentTypeError(str(error)) from None

    if lo2 > hi2:
        raise argparse.ArgumentTypeError(f"empty support {text!r}")
    if (lo2 - hi2) % 2 != 0:
        raise argparse.ArgumentTypeError(str(CosetError(f"support {text!r} mixes cosets")))
    return lo2, hi2


def value(text: str) -> int:
    try:
        return parse_value(text)
    except ParseError as error:
        raise argparse.ArgumentTypeError(str(error)) from None


def count(text: str) -> int:
    try:
        number: int = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if number < 0:
        raise argparse.ArgumentTypeError(f"{number} must not be negative")
    return number


def common_arguments() -> CommandParser:
    """Flags shared by every sub-command."""
    parent: CommandParser = CommandParser(add_help=False)
    parent.add_argument(
        "--alg",
        choices=[algorithm.value for algorithm in Algorithm],
        default=Algorithm.BOTH.value,
        help=ARG_ALG,
    )
    parent.add_argument("--trace", action="store_true", help=ARG_TRACE)
    parent.add_argument(
        "--format",
        choices=[output_format.value for output_format in OutputFormat],
        default=OutputFormat.TEXT.value,
        help=ARG_FORMAT,
    )
    parent.add_argument("--max-content", type=count, default=None, metavar="N", help=ARG_MAX_CONTENT)
    parent.add_argument("--support", type=support, default=None, metavar="a..b", help=ARG_SUPPORT)
    parent.add_argument("--seed", type=count, default=None, metavar="N", help=ARG_SEED)
    return parent
