import argparse
import logging

from multiseg.config import get_settings
from multiseg.core import Multisegment, Weight, format_multisegment, parse_weight
from multiseg.errors import PropertyViolation, UsageError
from multiseg.order_space import (
    Family,
    RigidityMethod,
    RigidityReport,
    SweepResult,
    enumerate_weight,
    rigidity_check,
    rigidity_sweep,
    upper_set,
)
from multiseg.serialization import (
    multisegment_to_json,
    report_to_json,
    summary_to_json,
    weight_to_json,
)
from verbs.descriptions.common import ARG_MULTISEGMENT
from verbs.descriptions.order import *
from verbs.enum.algorithm import Algorithm
from verbs.enum.exit_code import ExitCode
from verbs.enum.output_format import OutputFormat
from verbs.util.arguments import read_multisegment
from verbs.util.engines import DualFunction, select_dual
from verbs.util.macro import emit

# sweeps over these families check a theorem, so a non-rigid member is a violation
THEOREM_FAMILIES: frozenset[Family] = frozenset({Family.SIMPLE, Family.LADDER, Family.ARTHUR})


def _listing(members: list[Multisegment]) -> str:
    return "\n".join(format_multisegment(member) for member in members)


def _report_text(report: RigidityReport) -> str:
    lines: list[str] = [
        f"subject: {format_multisegment(report.subject)}",
        f"singleton: {'true' if report.singleton else 'false'}",
        f"class size: {report.class_size}",
        f"method: {report.method.value}",
    ]
    lines.extend(f"witness: {format_multisegment(beta)}" for beta in report.witnesses)
    return "\n".join(lines)


class OrderCommands:
    def __init__(self) -> None:
        self.logger = logging.getLogger("verbs.order")

    @staticmethod
    def _max_content(args: argparse.Namespace) -> int:
        return get_settings().max_content if args.max_content is None else args.max_content

    def above(self, args: argparse.Namespace) -> ExitCode:
        alpha: Multisegment = read_multisegment(args.multisegment)
        members: list[Multisegment] = upper_set(alpha, self._max_content(args))
        emit(
            OutputFormat(args.format),
            text=_listing(members),
            payload={
                "input": multisegment_to_json(alpha),
                "above": [multisegment_to_json(beta) for beta in members],
            },
        )
        return ExitCode.OK

    def enumerate(self, args: argparse.Namespace) -> ExitCode:
        w: Weight = parse_weight(args.weight)
        members: list[Multisegment] = enumerate_weight(w, self._max_content(args))
        self.logger.info(f"{len(members)} multisegments of weight {w}")
        emit(
            OutputFormat(args.format),
            text=_listing(members),
            payload={
                "weight": weight_to_json(w),
                "members": [multisegment_to_json(beta) for beta in members],
            },
        )
        return ExitCode.OK

    def rigid(self, args: argparse.Namespace) -> ExitCode:
        method: RigidityMethod = RigidityMethod(args.method)
        if args.family is not None:
            return self._sweep(args)
        if args.multisegment is None:
            raise UsageError("rigid needs a multisegment or --family with --support")

        alpha: Multisegment = read_multisegment(args.multisegment)
        dual: DualFunction = select_dual(Algorithm(args.alg), self.logger)
        report: RigidityReport = rigidity_check(
            alpha, dual=dual, max_content=self._max_content(args), method=method
        )
        emit(OutputFormat(args.format), text=_report_text(report), payload=report_to_json(report))
        return ExitCode.OK

    def _sweep(self, args: argparse.Namespace) -> ExitCode:
        if args.multisegment is not None:
            raise UsageError("rigid takes either a multisegment or --family, not both")
        if args.support is None:
            raise UsageError("rigid --family needs --support a..b")

        family: Family = Family(args.family)
        lo2, hi2 = args.support
        result: SweepResult = rigidity_sweep(
            family,
            lo2,
            hi2,
            self._max_content(args),
            dual=select_dual(Algorithm(args.alg), self.logger),
            method=RigidityMethod(args.method),
        )

        output_format: OutputFormat = OutputFormat(args.format)
        for report in result.failures:
            emit(output_format, text=_report_text(report), payload=report_to_json(report))

        summary: dict = summary_to_json(result, include_time=args.timing)
        text: str = f"{family.value}: checked {result.checked}, not rigid {len(result.failures)}"
        if args.timing:
            text += f", {summary['wall_time_s']} s"
        emit(output_format, text=text, payload=summary)

        if result.failures and family in THEOREM_FAMILIES:
            first: Multisegment = result.failures[0].subject
            raise PropertyViolation(
                f"{len(result.failures)} {family.value} multisegment(s) are not rigid",
                reproducer=format_multisegment(first),
            )
        return ExitCode.OK


def setup(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    commands: OrderCommands = OrderCommands()

    above_parser = subparsers.add_parser("above", parents=[parent], help=CMD_ABOVE_DESC)
    above_parser.add_argument("multisegment", help=ARG_MULTISEGMENT)
    above_parser.set_defaults(handler=commands.above)

    enumerate_parser = subparsers.add_parser(
        "enumerate", parents=[parent], help=CMD_ENUMERATE_DESC
    )
    enumerate_parser.add_argument("weight", help=CMD_ENUMERATE_WEIGHT)
    enumerate_parser.set_defaults(handler=commands.enumerate)

    rigid_parser = subparsers.add_parser("rigid", parents=[parent], help=CMD_RIGID_DESC)
    rigid_parser.add_argument("multisegment", nargs="?", default=None, help=CMD_RIGID_MULTISEGMENT)
    rigid_parser.add_argument(
        "--family", choices=[family.value for family in Family], default=None, help=CMD_RIGID_FAMILY
    )
    rigid_parser.add_argument(
        "--method",
        choices=[method.value for method in RigidityMethod],
        default=RigidityMethod.EXHAUSTIVE.value,
        help=CMD_RIGID_METHOD,
    )
    rigid_parser.add_argument("--timing", action="store_true", help=CMD_RIGID_TIMING)
    rigid_parser.set_defaults(handler=commands.rigid)

    commands.logger.info("Command loaded")
