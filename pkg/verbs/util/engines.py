import logging
from typing import Callable

from multiseg.core import Multisegment, format_multisegment
from multiseg.duality_flow import flow_dual
from multiseg.duality_mw import mw_dual
from multiseg.errors import PropertyViolation
from verbs.enum.algorithm import Algorithm

DualFunction = Callable[[Multisegment], Multisegment]


def require_agreement(
    logger: logging.Logger, alpha: Multisegment, by_mw: Multisegment, by_flow: Multisegment
) -> None:
    if by_mw != by_flow:
        logger.error(f"Engines disagree on {alpha}: mw {by_mw}, flow {by_flow}")
        raise PropertyViolation(
            f"engines disagree: mw gives {format_multisegment(by_mw)}, "
            f"flow gives {format_multisegment(by_flow)}",
            reproducer=format_multisegment(alpha),
        )


def select_dual(algorithm: Algorithm, logger: logging.Logger) -> DualFunction:
    """The dual engine behind `--alg`; `both` runs the two and insists they agree."""
    match algorithm:
        case Algorithm.MW:
            return mw_dual
        case Algorithm.FLOW:
            return flow_dual

    def checked_dual(alpha: Multisegment) -> Multisegment:
        by_mw: Multisegment = mw_dual(alpha)
        require_agreement(logger, alpha, by_mw, flow_dual(alpha))
        return by_mw

    return checked_dual
