"""Mœglin–Waldspurger duality: peel one dual segment per iteration."""

import logging
from dataclasses import dataclass
from typing import Union

from multiseg.core import STEP, Multisegment, Segment, precedes
from multiseg.errors import EmptyMultisegmentError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainLink:
    index: int
    segment: Segment
    removed2: int


@dataclass(frozen=True)
class Iteration:
    chain: tuple[ChainLink, ...]
    emitted: Segment
    remainder: Multisegment

    def chosen(self) -> Multisegment:
        """The chained segments as they were before their end values were removed."""
        return Multisegment.of(link.segment for link in self.chain)


@dataclass(frozen=True)
class DualTrace:
    iterations: tuple[Iteration, ...] = ()


def _shortest(
    alpha: Multisegment, end2: int, after: Union[Segment, None], taken: set[int]
) -> Union[int, None]:
    """Index of the shortest segment ending at `end2` (preceding `after` when given)."""
    best: Union[int, None] = None
    for index, segment in enumerate(alpha.segments):
        if segment.e2 != end2 or index in taken:
            continue
        if after is not None and not precedes(segment, after):
            continue
        # canonical order breaks ties: the first index seen wins
        if best is None or segment.length < alpha.segments[best].length:
            best = index
    return best


def mw_first_segment(alpha: Multisegment) -> Iteration:
    """Run one iteration: emit Δ′ = [m, e] and remove the chained end values."""
    if not alpha.segments:
        raise EmptyMultisegmentError("the Mœglin–Waldspurger step needs a non-empty multisegment")

    top2: int = alpha.max2
    taken: set[int] = set()
    links: list[ChainLink] = []

    current: Union[int, None] = _shortest(alpha, top2, None, taken)
    value2: int = top2
    while current is not None:
        links.append(ChainLink(current, alpha.segments[current], value2))
        taken.add(current)
        value2 -= STEP
        current = _shortest(alpha, value2, alpha.segments[current], taken)

    bottom2: int = links[-1].removed2
    remaining: list[Segment] = []
    for index, segment in enumerate(alpha.segments):
        if index not in taken:
            remaining.append(segment)
        elif segment.b2 < segment.e2:
            remaining.append(Segment(segment.b2, segment.e2 - STEP))

    return Iteration(tuple(links), Segment(bottom2, top2), Multisegment.of(remaining))


def mw_dual_traced(alpha: Multisegment) -> tuple[Multisegment, DualTrace]:
    iterations: list[Iteration] = []
    current: Multisegment = alpha
    while current.segments:
        iteration: Iteration = mw_first_segment(current)
        iterations.append(iteration)
        current = iteration.remainder

    dual: Multisegment = Multisegment.of(iteration.emitted for iteration in iterations)
    logger.debug("MW dual of %s is %s after %d iterations", alpha, dual, len(iterations))
    return dual, DualTrace(tuple(iterations))


def mw_dual(alpha: Multisegment) -> Multisegment:
    """The Zelevinskii dual computed by repeated Mœglin–Waldspurger iterations."""
    dual, _ = mw_dual_traced(alpha)
    return dual
