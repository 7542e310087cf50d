import argparse
import logging
from typing import Union

from multiseg.config import get_settings
from multiseg.core import Multisegment, format_multisegment, format_value
from multiseg.families import (
    ArthurDecomposition,
    Classification,
    InvariantProfile,
    arthur_decompose,
    classify,
    endoscopic_decomposition,
    invariant_profile,
)
from multiseg.serialization import (
    classification_to_json,
    decomposition_to_json,
    multisegment_to_json,
    profile_to_json,
)
from verbs.descriptions.common import ARG_MULTISEGMENT
from verbs.descriptions.invariants import *
from verbs.enum.exit_code import ExitCode
from verbs.enum.output_format import OutputFormat
from verbs.util.arguments import read_multisegment
from verbs.util.macro import emit


def _flag(value: bool) -> str:
    return "true" if value else "false"


class InvariantCommands:
    def __init__(self) -> None:
        self.logger = logging.getLogger("verbs.invariants")

    def invariants(self, args: argparse.Namespace) -> ExitCode:
        alpha: Multisegment = read_multisegment(args.multisegment)
        partition_cap: int = get_settings().partition_cap

        profile: InvariantProfile = invariant_profile(alpha, partition_cap)
        parts: list[Multisegment] = endoscopic_decomposition(alpha, partition_cap)

        text: str = "\n".join(
            [
                f"e = {profile.e_max}",
                f"L = {profile.longest}",
                f"n = {profile.count}",
                f"c = {profile.components}",
                f"S = {profile.cover_size}",
                f"C = {profile.endoscopic}",
                "endoscopic: " + " | ".join(format_multisegment(part) for part in parts),
            ]
        )
        payload: dict = {
            "input": multisegment_to_json(alpha),
            "invariants": profile_to_json(profile),
            "endoscopic": [multisegment_to_json(part) for part in parts],
        }
        emit(OutputFormat(args.format), text=text, payload=payload)
        return ExitCode.OK

    def classify(self, args: argparse.Namespace) -> ExitCode:
        alpha: Multisegment = read_multisegment(args.multisegment)
        classification: Classification = classify(alpha)
        decomposition: Union[ArthurDecomposition, None] = (
            arthur_decompose(alpha) if alpha.segments else None
        )

        lines: list[str] = [
            f"simple: {_flag(classification.simple)}",
            f"ladder: {_flag(classification.ladder)}",
            f"symmetric: {_flag(classification.symmetric)}",
            f"arthur: {_flag(classification.arthur)}",
            "center: "
            + ("-" if classification.center is None else str(classification.center)),
        ]
        if decomposition is not None:
            for block, multiplicity in decomposition.blocks:
                lines.append(f"block: {format_multisegment(block)} x{multiplicity}")
            lines.append(f"offset: {format_value(decomposition.offset.twice)}")

        payload: dict = {
            "input": multisegment_to_json(alpha),
            "classification": classification_to_json(classification),
            "decomposition": decomposition_to_json(decomposition),
        }
        emit(OutputFormat(args.format), text="\n".join(lines), payload=payload)
        return ExitCode.OK


def setup(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    commands: InvariantCommands = InvariantCommands()

    invariants_parser = subparsers.add_parser(
        "invariants", parents=[parent], help=CMD_INVARIANTS_DESC
    )
    invariants_parser.add_argument("multisegment", help=ARG_MULTISEGMENT)
    invariants_parser.set_defaults(handler=commands.invariants)

    classify_parser = subparsers.add_parser("classify", parents=[parent], help=CMD_CLASSIFY_DESC)
    classify_parser.add_argument("multisegment", help=ARG_MULTISEGMENT)
    classify_parser.set_defaults(handler=commands.classify)

    commands.logger.info("Command loaded")
