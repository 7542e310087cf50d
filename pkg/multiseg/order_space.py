"""Weight classes, upper sets, action closures and rigidity checks."""

import logging
import time
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Union

from multiseg.config import get_settings
from multiseg.core import (
    STEP,
    Multisegment,
    RankTriangle,
    Segment,
    Weight,
    act_conjunction,
    act_union_intersection,
    ranks,
    weight,
)
from multiseg.duality_mw import mw_dual
from multiseg.errors import CapExceededError
from multiseg.families import simple_symmetric_block

DualFunction = Callable[[Multisegment], Multisegment]

logger = logging.getLogger(__name__)


class Family(Enum):
    SIMPLE = "simple"
    LADDER = "ladder"
    ARTHUR = "arthur"
    ALL = "all"


class RigidityMethod(Enum):
    EXHAUSTIVE = "exhaustive"
    ACTION_CLOSURE = "action-closure"


@dataclass(frozen=True)
class RigidityReport:
    subject: Multisegment
    singleton: bool
    witnesses: tuple[Multisegment, ...]
    class_size: int
    method: RigidityMethod = RigidityMethod.EXHAUSTIVE


@dataclass(frozen=True)
class SweepResult:
    family: Family
    checked: int
    failures: tuple[RigidityReport, ...]
    elapsed: float


class DualCache:
    """Memoized duals (and dual ranks) shared across the subjects of a sweep."""

    def __init__(self, dual: DualFunction = mw_dual) -> None:
        self.dual = dual
        self._duals: dict[Multisegment, Multisegment] = {}
        self._ranks: dict[Multisegment, RankTriangle] = {}

    def __call__(self, alpha: Multisegment) -> Multisegment:
        if alpha not in self._duals:
            self._duals[alpha] = self.dual(alpha)
        return self._duals[alpha]

    def ranks(self, alpha: Multisegment) -> RankTriangle:
        if alpha not in self._ranks:
            self._ranks[alpha] = ranks(alpha)
        return self._ranks[alpha]

    def leq(self, alpha: Multisegment, beta: Multisegment) -> bool:
        """`leq` for multisegments already known to share a weight."""
        upper: RankTriangle = self.ranks(beta)
        return all(
            count <= upper.r(i2, j2) for (i2, j2), count in self.ranks(alpha).entries.items()
        )


def _check_cap(total: int, max_content: Union[int, None]) -> int:
    cap: int = get_settings().max_content if max_content is None else max_content
    if total > cap:
        logger.error(f"Content {total} is over the enumeration cap {cap}")
        raise CapExceededError("content", cap, total)
    return cap


def _peel(residual: dict[int, int], last: Union[Segment, None]) -> Iterator[list[Segment]]:
    """Segments covering `residual` exactly, generated in canonical order."""
    present: list[int] = [twice for twice, count in residual.items() if count > 0]
    if not present:
        yield []
        return

    base2: int = min(present)
    end2: int = base2
    while residual.get(end2, 0) > 0:
        segment: Segment = Segment(base2, end2)
        if last is None or last <= segment:
            for twice in segment.values():
                residual[twice] -= 1
            for tail in _peel(residual, segment):
                yield [segment, *tail]
            for twice in segment.values():
                residual[twice] += 1
        end2 += STEP


def enumerate_weight(w: Weight, max_content: Union[int, None] = None) -> list[Multisegment]:
    """Every multisegment of weight `w`, each once, in canonical order."""
    _check_cap(w.total, max_content)
    found: list[Multisegment] = [
        Multisegment(tuple(segments)) for segments in _peel(w.as_dict(), None)
    ]
    return sorted(found)


def upper_set(
    alpha: Multisegment,
    max_content: Union[int, None] = None,
    cache: Union[DualCache, None] = None,
) -> list[Multisegment]:
    """All beta of alpha's weight with alpha <= beta, alpha included."""
    cache = DualCache() if cache is None else cache
    return [
        beta
        for beta in enumerate_weight(weight(alpha), max_content)
        if cache.leq(alpha, beta)
    ]


def _neighbours(alpha: Multisegment) -> Iterator[Multisegment]:
    size: int = len(alpha)
    for i1 in range(size):
        for i2 in range(i1 + 1, size):
            for action in (act_union_intersection, act_conjunction):
                moved: Union[Multisegment, None] = action(alpha, i1, i2)
                if moved is not None:
                    yield moved


def action_closure(alpha: Multisegment, max_content: Union[int, None] = None) -> list[Multisegment]:
    """Everything reachable from alpha by union-intersection and conjunction steps."""
    _check_cap(alpha.content, max_content)
    seen: set[Multisegment] = {alpha}
    queue: deque[Multisegment] = deque([alpha])
    while queue:
        for moved in _neighbours(queue.popleft()):
            if moved not in seen:
                seen.add(moved)
                queue.append(moved)
    return sorted(seen)


def rigidity_check(
    alpha: Multisegment,
    dual: Union[DualFunction, DualCache] = mw_dual,
    max_content: Union[int, None] = None,
    method: RigidityMethod = RigidityMethod.EXHAUSTIVE,
) -> RigidityReport:
    """Find every beta != alpha with alpha <= beta and dual(alpha) <= dual(beta)."""
    cache: DualCache = dual if isinstance(dual, DualCache) else DualCache(dual)
    alpha_dual: Multisegment = cache(alpha)

    members: list[Multisegment] = enumerate_weight(weight(alpha), max_content)
    match method:
        case RigidityMethod.EXHAUSTIVE:
            candidates: list[Multisegment] = [
                beta for beta in members if cache.leq(alpha, beta)
            ]
        case RigidityMethod.ACTION_CLOSURE:
            candidates = action_closure(alpha, max_content)

    witnesses: tuple[Multisegment, ...] = tuple(
        beta
        for beta in candidates
        if beta != alpha and cache.leq(alpha_dual, cache(beta))
    )
    if witnesses:
        logger.info(f"{alpha} is not rigid: {len(witnesses)} witness(es)")
    return RigidityReport(alpha, not witnesses, witnesses, len(members), method)


def simple_family(lo2: int, hi2: int, max_content: int) -> Iterator[Multisegment]:
    """Every simple multisegment inside [lo, hi] with content at most `max_content`."""
    span: int = (hi2 - lo2) // STEP + 1
    for length in range(1, span + 1):
        for count in range(1, span - length + 2):
            if length * count > max_content:
                break
            for base2 in range(lo2, hi2 - STEP * (length + count - 2) + 1, STEP):
                yield Multisegment.of(
                    Segment(base2 + STEP * k, base2 + STEP * (k + length - 1))
                    for k in range(count)
                )


def ladder_family(lo2: int, hi2: int, max_content: int) -> Iterator[Multisegment]:
    """Every ladder multisegment inside [lo, hi] with content at most `max_content`."""
    segments: list[Segment] = [
        Segment(b2, e2)
        for b2 in range(lo2, hi2 + 1, STEP)
        for e2 in range(b2, hi2 + 1, STEP)
    ]

    def extend(chosen: list[Segment], content: int) -> Iterator[Multisegment]:
        if chosen:
            yield Multisegment(tuple(chosen))
        last: Union[Segment, None] = chosen[-1] if chosen else None
        for segment in segments:
            if last is not None and not (last.b2 < segment.b2 and last.e2 < segment.e2):
                continue
            if content + segment.length > max_content:
                continue
            yield from extend([*chosen, segment], content + segment.length)

    yield from extend([], 0)


def symmetric_blocks(lo2: int, hi2: int) -> list[Multisegment]:
    """Simple blocks symmetric about zero that fit inside [lo, hi] on that coset."""
    reach2: int = min(-lo2, hi2)
    blocks: list[Multisegment] = []
    for top2 in range(reach2, -1, -STEP):
        for base2 in range(-top2, top2 + 1, STEP):
            blocks.append(simple_symmetric_block(top2, base2))
    return blocks


def arthur_family(lo2: int, hi2: int, max_content: int) -> Iterator[Multisegment]:
    """Every non-empty union of symmetric simple blocks inside [lo, hi] within the content bound."""
    blocks: list[Multisegment] = symmetric_blocks(lo2, hi2)

    def extend(start: int, chosen: Multisegment) -> Iterator[Multisegment]:
        if chosen.segments:
            yield chosen
        for index in range(start, len(blocks)):
            if chosen.content + blocks[index].content <= max_content:
                yield from extend(index, chosen.union(blocks[index]))

    yield from extend(0, Multisegment())


def all_family(lo2: int, hi2: int, max_content: int) -> Iterator[Multisegment]:
    """Every non-empty multisegment inside [lo, hi] within the content bound."""
    positions: list[int] = list(range(lo2, hi2 + 1, STEP))

    def weights(index: int, budget: int, chosen: dict[int, int]) -> Iterator[Weight]:
        if index == len(positions):
            if chosen:
                yield Weight.from_mapping(chosen)
            return
        for count in range(budget + 1):
            following: dict[int, int] = {**chosen, positions[index]: count} if count else chosen
            yield from weights(index + 1, budget - count, following)

    for w in weights(0, max_content, {}):
        yield from enumerate_weight(w, max_content)


_FAMILIES: dict[Family, Callable[[int, int, int], Iterator[Multisegment]]] = {
    Family.SIMPLE: simple_family,
    Family.LADDER: ladder_family,
    Family.ARTHUR: arthur_family,
    Family.ALL: all_family,
}


def family_members(family: Family, lo2: int, hi2: int, max_content: int) -> list[Multisegment]:
    return sorted(set(_FAMILIES[family](lo2, hi2, max_content)))


def rigidity_sweep(
    family: Family,
    lo2: int,
    hi2: int,
    max_content: int,
    dual: Union[DualFunction, DualCache] = mw_dual,
    cap: Union[int, None] = None,
    method: RigidityMethod = RigidityMethod.EXHAUSTIVE,
) -> SweepResult:
    """Run `rigidity_check` over a whole family; only failing reports are kept."""
    _check_cap(max_content, cap)
    started: float = time.perf_counter()
    cache: DualCache = dual if isinstance(dual, DualCache) else DualCache(dual)

    members: list[Multisegment] = family_members(family, lo2, hi2, max_content)
    logger.info(f"Checking {len(members)} {family.value} multisegments")

    failures: list[RigidityReport] = []
    for alpha in members:
        report: RigidityReport = rigidity_check(alpha, cache, max_content=cap, method=method)
        if not report.singleton:
            failures.append(report)

    return SweepResult(
        family, len(members), tuple(failures), time.perf_counter() - started
    )
