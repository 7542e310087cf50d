import argparse
import logging
from typing import Union

from multiseg.config import get_settings
from multiseg.core import format_multisegment
from multiseg.errors import PropertyViolation
from multiseg.selfcheck import Bounds, RankFault, SelfCheck, SuiteResult
from multiseg.serialization import multisegment_to_json
from verbs.descriptions.selfcheck import *
from verbs.enum.exit_code import ExitCode
from verbs.enum.output_format import OutputFormat
from verbs.util.arguments import count, value
from verbs.util.macro import emit

# replaced by tests to corrupt the flow engine's rank triangles
RANK_FAULT: Union[RankFault, None] = None


def _suite_line(result: SuiteResult) -> str:
    line: str = f"{'pass' if result.passed else 'FAIL'}  {result.name} ({result.checked} checked)"
    if not result.passed:
        line += f"  reproducer: {format_multisegment(result.reproducer)}"
    return line


def _suite_json(result: SuiteResult) -> dict:
    return {
        "suite": result.name,
        "passed": result.passed,
        "checked": result.checked,
        "reproducer": None
        if result.reproducer is None
        else multisegment_to_json(result.reproducer),
    }


class SelfCheckCommands:
    def __init__(self) -> None:
        self.logger = logging.getLogger("verbs.selfcheck")

    def selfcheck(self, args: argparse.Namespace) -> ExitCode:
        settings = get_settings()
        defaults: Bounds = Bounds()
        lo2, hi2 = (defaults.lo2, defaults.hi2) if args.support is None else args.support

        bounds: Bounds = Bounds(
            lo2=lo2,
            hi2=hi2,
            max_content=defaults.max_content if args.max_content is None else args.max_content,
            arthur_reach2=defaults.arthur_reach2
            if args.arthur_reach is None
            else args.arthur_reach,
            random_count=settings.random_count
            if args.random_count is None
            else args.random_count,
            seed=settings.seed if args.seed is None else args.seed,
            partition_cap=settings.partition_cap,
        )

        output_format: OutputFormat = OutputFormat(args.format)
        emit(output_format, text=f"seed: {bounds.seed}", payload={"seed": bounds.seed})

        results: list[SuiteResult] = SelfCheck(bounds, rank_fault=RANK_FAULT).run()
        for result in results:
            emit(output_format, text=_suite_line(result), payload=_suite_json(result))

        failed: list[SuiteResult] = [result for result in results if not result.passed]
        emit(
            output_format,
            text=f"{len(results) - len(failed)} of {len(results)} suites passed",
            payload={"summary": True, "suites": len(results), "failed": len(failed)},
        )

        if failed:
            raise PropertyViolation(
                f"suite {failed[0].name} failed",
                reproducer=format_multisegment(failed[0].reproducer),
            )
        return ExitCode.OK


def setup(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    commands: SelfCheckCommands = SelfCheckCommands()

    selfcheck_parser = subparsers.add_parser(
        "selfcheck", parents=[parent], help=CMD_SELFCHECK_DESC
    )
    selfcheck_parser.add_argument(
        "--arthur-reach", type=value, default=None, metavar="h", help=CMD_SELFCHECK_ARTHUR_REACH
    )
    selfcheck_parser.add_argument(
        "--random-count", type=count, default=None, metavar="N", help=CMD_SELFCHECK_RANDOM_COUNT
    )
    selfcheck_parser.set_defaults(handler=commands.selfcheck)

    commands.logger.info("Command loaded")
