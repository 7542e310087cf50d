import argparse
import logging
from pathlib import Path
from typing import Union

from multiseg.core import (
    Multisegment,
    RankTriangle,
    format_multisegment,
    format_value,
    multisegment_from_ranks,
    ranks,
    render_triangle,
)
from multiseg.duality_flow import build_precedence_graph, dual_ranks, flow_dual, to_dot
from multiseg.duality_mw import DualTrace, mw_dual, mw_dual_traced
from multiseg.serialization import multisegment_to_json, ranks_to_json, trace_to_json
from verbs.descriptions.common import ARG_MULTISEGMENT
from verbs.descriptions.dual import *
from verbs.enum.algorithm import Algorithm
from verbs.enum.exit_code import ExitCode
from verbs.enum.output_format import OutputFormat
from verbs.util.arguments import read_multisegment
from verbs.util.engines import require_agreement
from verbs.util.macro import emit


def render_trace(trace: DualTrace) -> str:
    lines: list[str] = []
    for number, iteration in enumerate(trace.iterations, start=1):
        chain: str = " <- ".join(
            f"{link.segment} drops {format_value(link.removed2)}" for link in iteration.chain
        )
        lines.append(f"iteration {number}: {chain} => {iteration.emitted}")
    return "\n".join(lines)


class DualCommands:
    def __init__(self) -> None:
        self.logger = logging.getLogger("verbs.dual")

    def dual(self, args: argparse.Namespace) -> ExitCode:
        alpha: Multisegment = read_multisegment(args.multisegment)
        algorithm: Algorithm = Algorithm(args.alg)

        if args.dot is not None:
            Path(args.dot).write_text(to_dot(build_precedence_graph(alpha)) + "\n", encoding="utf-8")
            self.logger.info(f"Precedence graph written to {args.dot}")

        by_mw: Union[Multisegment, None] = None
        trace: Union[DualTrace, None] = None
        if algorithm is not Algorithm.FLOW:
            by_mw, trace = mw_dual_traced(alpha)
        if algorithm is Algorithm.FLOW and args.trace:
            _, trace = mw_dual_traced(alpha)

        by_flow: Union[Multisegment, None] = None
        if algorithm is not Algorithm.MW:
            by_flow = flow_dual(alpha)
        if by_mw is not None and by_flow is not None:
            require_agreement(self.logger, alpha, by_mw, by_flow)

        result: Multisegment = by_mw if by_mw is not None else by_flow
        text: str = format_multisegment(result)
        payload: dict = {
            "input": multisegment_to_json(alpha),
            "dual": multisegment_to_json(result),
            "algorithm": algorithm.value,
        }
        if args.trace and trace is not None:
            text = render_trace(trace) + "\n" + text if trace.iterations else text
            payload["trace"] = trace_to_json(trace)

        emit(OutputFormat(args.format), text=text, payload=payload)
        return ExitCode.OK

    def ranks(self, args: argparse.Namespace) -> ExitCode:
        alpha: Multisegment = read_multisegment(args.multisegment)
        algorithm: Algorithm = Algorithm(args.alg)

        triangle: RankTriangle = ranks(alpha)
        if args.dual:
            match algorithm:
                case Algorithm.MW:
                    triangle = ranks(mw_dual(alpha))
                case Algorithm.FLOW:
                    triangle = dual_ranks(alpha)
                case Algorithm.BOTH:
                    triangle = dual_ranks(alpha)
                    require_agreement(
                        self.logger, alpha, mw_dual(alpha), multisegment_from_ranks(triangle)
                    )

        emit(
            OutputFormat(args.format),
            text=render_triangle(triangle),
            payload=ranks_to_json(triangle),
        )
        return ExitCode.OK


def setup(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    commands: DualCommands = DualCommands()

    dual_parser = subparsers.add_parser("dual", parents=[parent], help=CMD_DUAL_DESC)
    dual_parser.add_argument("multisegment", help=ARG_MULTISEGMENT)
    dual_parser.add_argument("--dot", default=None, metavar="PATH", help=CMD_DUAL_DOT)
    dual_parser.set_defaults(handler=commands.dual)

    ranks_parser = subparsers.add_parser("ranks", parents=[parent], help=CMD_RANKS_DESC)
    ranks_parser.add_argument("multisegment", help=ARG_MULTISEGMENT)
    ranks_parser.add_argument("--dual", action="store_true", help=CMD_RANKS_DUAL)
    ranks_parser.set_defaults(handler=commands.ranks)

    commands.logger.info("Command loaded")
