"""Numerical invariants and the simple / ladder / symmetric / Arthur-type families."""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Union

from multiseg.config import get_settings
from multiseg.core import STEP, Multisegment, Segment, Value, connected_components, mirror, runs, shift
from multiseg.duality_mw import mw_dual
from multiseg.errors import CapExceededError, EmptyMultisegmentError

DualFunction = Callable[[Multisegment], Multisegment]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantProfile:
    e_max: Value
    longest: int
    count: int
    components: int
    cover_size: int
    endoscopic: int


@dataclass(frozen=True)
class ArthurDecomposition:
    blocks: tuple[tuple[Multisegment, int], ...]
    offset: Value

    def reassemble(self) -> Multisegment:
        """The union of the blocks, shifted back by the offset."""
        centred: Multisegment = Multisegment.of(
            segment
            for block, multiplicity in self.blocks
            for _ in range(multiplicity)
            for segment in block.segments
        )
        return shift(centred, self.offset.twice)


@dataclass(frozen=True)
class Classification:
    simple: bool
    ladder: bool
    symmetric: bool
    arthur: bool
    center: Union[Value, None]


def _require_segments(alpha: Multisegment, what: str) -> None:
    if not alpha.segments:
        raise EmptyMultisegmentError(f"{what} needs a non-empty multisegment")


@lru_cache(maxsize=65536)
def _cached_mw_dual(alpha: Multisegment) -> Multisegment:
    return mw_dual(alpha)


def _sub_multisets(counts: list[tuple[Segment, int]]) -> Iterator[Counter[Segment]]:
    ranges = [range(count + 1) for _, count in counts]
    for choice in itertools.product(*ranges):
        yield Counter({segment: taken for (segment, _), taken in zip(counts, choice) if taken})


def _finest_split(alpha: Multisegment, dual_of: DualFunction) -> list[Multisegment]:
    """Exhaustive over multiset partitions; a block is kept only while its dual
    still fits inside what is left of the dual of alpha."""
    target: Counter[Segment] = dual_of(alpha).counter()

    Key = tuple[tuple[tuple[Segment, int], ...], tuple[tuple[Segment, int], ...]]
    memo: dict[Key, Union[list[Multisegment], None]] = {}

    def search(
        remaining: Counter[Segment], budget: Counter[Segment]
    ) -> Union[list[Multisegment], None]:
        if not remaining:
            return []

        key: Key = (tuple(sorted(remaining.items())), tuple(sorted(budget.items())))
        if key in memo:
            return memo[key]

        first: Segment = min(remaining)
        rest: Counter[Segment] = remaining.copy()
        rest[first] -= 1
        rest = +rest

        best: Union[list[Multisegment], None] = None
        for extra in _sub_multisets(sorted(rest.items())):
            block_counts: Counter[Segment] = extra.copy()
            block_counts[first] += 1
            block: Multisegment = Multisegment.from_counter(block_counts)
            block_dual: Counter[Segment] = dual_of(block).counter()
            if any(budget[segment] < count for segment, count in block_dual.items()):
                continue

            tail = search(remaining - block_counts, budget - block_dual)
            if tail is not None and (best is None or len(tail) + 1 > len(best)):
                best = [block, *tail]

        memo[key] = best
        return best

    found = search(alpha.counter(), target)
    if found is None:
        # unreachable: alpha as a single block always fits its own dual
        return [alpha]
    return found


def endoscopic_decomposition(
    alpha: Multisegment,
    partition_cap: Union[int, None] = None,
    dual: Union[DualFunction, None] = None,
) -> list[Multisegment]:
    """A partition alpha = ⊔ alpha_i with the most parts whose duals also partition the dual.

    Components on separate runs never interact, so each is split on its own.
    """
    _require_segments(alpha, "the endoscopic decomposition")
    cap: int = get_settings().partition_cap if partition_cap is None else partition_cap
    if len(alpha) > cap:
        raise CapExceededError("segment count for the partition search", cap, len(alpha))

    dual_of: DualFunction = _cached_mw_dual if dual is None else dual
    return sorted(
        part
        for component in connected_components(alpha)
        for part in _finest_split(component, dual_of)
    )


def invariant_profile(
    alpha: Multisegment, partition_cap: Union[int, None] = None
) -> InvariantProfile:
    """e_α, L_α, n_α, c_α, S_α and C_α."""
    _require_segments(alpha, "the invariant profile")
    covered: list[tuple[int, int]] = runs(alpha)
    return InvariantProfile(
        e_max=Value(alpha.max2),
        longest=max(segment.length for segment in alpha.segments),
        count=len(alpha),
        components=len(covered),
        cover_size=sum((end2 - start2) // STEP + 1 for start2, end2 in covered),
        endoscopic=len(endoscopic_decomposition(alpha, partition_cap)),
    )


def longest(alpha: Multisegment) -> int:
    return max((segment.length for segment in alpha.segments), default=0)


def is_simple(alpha: Multisegment) -> bool:
    """Consecutive unit shifts of one segment, each exactly once."""
    if not alpha.segments:
        return False
    first: Segment = alpha.segments[0]
    return all(
        segment == first.shifted(STEP * index)
        for index, segment in enumerate(alpha.segments)
    )


def is_ladder(alpha: Multisegment) -> bool:
    """Bases and ends both strictly increasing in canonical order."""
    if not alpha.segments:
        return False
    return all(
        lower.b2 < upper.b2 and lower.e2 < upper.e2
        for lower, upper in itertools.pairwise(alpha.segments)
    )


def center(alpha: Multisegment) -> Union[Value, None]:
    """The value c with [b,e] ∈ α ⇔ [2c−e, 2c−b] ∈ α, if alpha is symmetric at all."""
    _require_segments(alpha, "centering")
    center2: int = (alpha.min2 + alpha.max2) // 2
    return Value(center2) if shift(mirror(alpha), 2 * center2) == alpha else None


def simple_symmetric_block(top2: int, base2: int) -> Multisegment:
    """The block {[−e,−x], …, [x,e]} generated by the segment [x, e] of a centred multisegment."""
    return Multisegment.of(
        Segment(-top2 + step2, -base2 + step2) for step2 in range(0, top2 + base2 + 1, STEP)
    )


def _greedy_blocks(centred: Multisegment) -> Union[list[Multisegment], None]:
    remaining: Counter[Segment] = centred.counter()
    blocks: list[Multisegment] = []
    while remaining:
        top2: int = max(segment.e2 for segment in remaining)
        shortest: Segment = max(
            (segment for segment in remaining if segment.e2 == top2),
            key=lambda segment: segment.b2,
        )
        if shortest.b2 < -top2:
            return None
        block: Multisegment = simple_symmetric_block(top2, shortest.b2)
        needed: Counter[Segment] = block.counter()
        if any(remaining[segment] < count for segment, count in needed.items()):
            return None
        remaining -= needed
        blocks.append(block)
    return blocks


def _candidate_blocks(centred: Multisegment) -> list[Multisegment]:
    """Simple symmetric blocks made only of segments present in `centred`.

    Ordered by descending top value, then ascending segment length.
    """
    candidates: list[Multisegment] = [
        simple_symmetric_block(segment.e2, segment.b2)
        for segment in centred.counter()
        if segment.e2 >= -segment.b2
    ]
    candidates = [block for block in dict.fromkeys(candidates) if centred.contains(block)]
    candidates.sort(key=lambda block: (-block.max2, block.segments[0].length))
    return candidates


def _exhaustive_blocks(centred: Multisegment) -> Union[list[Multisegment], None]:
    candidates: list[Multisegment] = _candidate_blocks(centred)

    def search(remaining: Counter[Segment]) -> Union[list[Multisegment], None]:
        if not remaining:
            return []
        top2: int = max(segment.e2 for segment in remaining)
        for block in candidates:
            if block.max2 != top2:
                continue
            needed: Counter[Segment] = block.counter()
            if any(remaining[segment] < count for segment, count in needed.items()):
                continue
            tail = search(remaining - needed)
            if tail is not None:
                return [block, *tail]
        return None

    return search(centred.counter())


def arthur_decompose(alpha: Multisegment) -> Union[ArthurDecomposition, None]:
    """Split alpha, after centring, into simple symmetric blocks."""
    _require_segments(alpha, "the Arthur decomposition")
    offset: Union[Value, None] = center(alpha)
    if offset is None:
        return None

    centred: Multisegment = shift(alpha, -offset.twice)
    blocks: Union[list[Multisegment], None] = _greedy_blocks(centred)
    if blocks is None:
        logger.info(f"Greedy block extraction failed for {alpha}, searching exhaustively")
        blocks = _exhaustive_blocks(centred)
    if blocks is None:
        return None

    grouped: Counter[Multisegment] = Counter(blocks)
    return ArthurDecomposition(
        tuple(sorted(grouped.items(), key=lambda item: (-item[0].max2, item[0]))),
        offset,
    )


def is_arthur(alpha: Multisegment) -> bool:
    if not alpha.segments:
        return True
    return arthur_decompose(alpha) is not None


def top_block(alpha: Multisegment) -> Union[Multisegment, None]:
    """The block extracted first from an Arthur-type alpha, in alpha's own coordinates."""
    decomposition: Union[ArthurDecomposition, None] = arthur_decompose(alpha)
    if decomposition is None:
        return None
    block, _ = decomposition.blocks[0]
    return shift(block, decomposition.offset.twice)


def classify(alpha: Multisegment) -> Classification:
    centred_at: Union[Value, None] = center(alpha) if alpha.segments else None
    return Classification(
        simple=is_simple(alpha),
        ladder=is_ladder(alpha),
        symmetric=centred_at is not None,
        arthur=is_arthur(alpha),
        center=centred_at,
    )
