"""The invariant suites behind the `selfcheck` command."""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Union

from multiseg.config import get_settings
from multiseg.core import (
    STEP,
    Multisegment,
    RankTriangle,
    Segment,
    multisegment_from_ranks,
    ranks,
    runs,
    weight,
)
from multiseg.duality_flow import dual_ranks
from multiseg.duality_mw import mw_dual, mw_dual_traced
from multiseg.errors import CapExceededError, NegativeMultiplicityError
from multiseg.families import (
    ArthurDecomposition,
    arthur_decompose,
    endoscopic_decomposition,
    is_ladder,
    is_simple,
    longest,
    top_block,
)
from multiseg.order_space import (
    DualCache,
    Family,
    all_family,
    family_members,
    rigidity_check,
    rigidity_sweep,
)

RankFault = Callable[[RankTriangle], RankTriangle]
Check = Callable[[Multisegment], bool]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bounds:
    lo2: int = 2
    hi2: int = 8
    max_content: int = 7
    arthur_reach2: int = 4
    random_count: int = 200
    random_width: int = 8
    random_segments: int = 12
    seed: int = 0
    partition_cap: int = 10


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checked: int
    reproducer: Union[Multisegment, None] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.reproducer is None


def random_multisegment(rng: random.Random, width: int, max_segments: int) -> Multisegment:
    """Integer segments inside [1, width], between one and `max_segments` of them."""
    segments: list[Segment] = []
    for _ in range(rng.randint(1, max_segments)):
        b: int = rng.randint(1, width)
        segments.append(Segment.of(b, rng.randint(b, width)))
    return Multisegment.of(segments)


def _cover_size(alpha: Multisegment) -> int:
    return sum((end2 - start2) // STEP + 1 for start2, end2 in runs(alpha))


def _ordered(corpus: Iterable[Multisegment]) -> list[Multisegment]:
    # smallest inputs first, so the first failure is a minimal reproducer
    return sorted(set(corpus), key=lambda alpha: (alpha.content, len(alpha), alpha))


def _first_failure(name: str, corpus: list[Multisegment], check: Check) -> SuiteResult:
    for alpha in corpus:
        if not check(alpha):
            logger.error(f"Suite {name} failed on {alpha}")
            return SuiteResult(name, len(corpus), alpha)
    return SuiteResult(name, len(corpus))


class SelfCheck:
    """Runs every suite over an exhaustive corpus plus a seeded random one."""

    def __init__(self, bounds: Bounds, rank_fault: Union[RankFault, None] = None) -> None:
        cap: int = get_settings().max_content
        if bounds.max_content > cap:
            raise CapExceededError("content", cap, bounds.max_content)

        self.bounds = bounds
        self.rank_fault = rank_fault
        self.duals = DualCache(mw_dual)
        self.exhaustive: list[Multisegment] = _ordered(
            all_family(bounds.lo2, bounds.hi2, bounds.max_content)
        )
        rng: random.Random = random.Random(bounds.seed)
        self.random: list[Multisegment] = _ordered(
            random_multisegment(rng, bounds.random_width, bounds.random_segments)
            for _ in range(bounds.random_count)
        )
        self._witnesses: Union[dict[Multisegment, tuple[Multisegment, ...]], None] = None

    def _flow_dual(self, alpha: Multisegment) -> Multisegment:
        triangle: RankTriangle = dual_ranks(alpha)
        if self.rank_fault is not None:
            triangle = self.rank_fault(triangle)
        return multisegment_from_ranks(triangle)

    def involution(self) -> SuiteResult:
        return _first_failure(
            "involution", self.exhaustive, lambda alpha: self.duals(self.duals(alpha)) == alpha
        )

    def engine_agreement(self) -> SuiteResult:
        def agrees(alpha: Multisegment) -> bool:
            try:
                return self._flow_dual(alpha) == self.duals(alpha)
            except NegativeMultiplicityError:
                return False

        return _first_failure("mw-equals-flow", _ordered(self.exhaustive + self.random), agrees)

    def rank_round_trip(self) -> SuiteResult:
        return _first_failure(
            "rank-round-trip",
            self.exhaustive,
            lambda alpha: multisegment_from_ranks(ranks(alpha)) == alpha,
        )

    def increasing_length(self) -> SuiteResult:
        def chains_grow(alpha: Multisegment) -> bool:
            _, trace = mw_dual_traced(alpha)
            for iteration in trace.iterations:
                lengths: list[int] = [link.segment.length for link in iteration.chain]
                if any(shorter > longer for shorter, longer in itertools.pairwise(lengths)):
                    return False
                if not is_ladder(iteration.chosen()):
                    return False
            return True

        return _first_failure("increasing-length", self.exhaustive, chains_grow)

    def basic_bounds(self) -> SuiteResult:
        """L and n move the right way along the order; duals bound L from n."""
        classes: dict = {}
        for alpha in self.exhaustive:
            classes.setdefault(weight(alpha), []).append(alpha)

        def holds(alpha: Multisegment) -> bool:
            alpha_dual: Multisegment = self.duals(alpha)
            if len(alpha_dual) < longest(alpha) or len(alpha) < longest(alpha_dual):
                return False
            for beta in classes[weight(alpha)]:
                if self.duals.leq(alpha, beta):
                    if longest(alpha) > longest(beta) or len(alpha) < len(beta):
                        return False
            return True

        return _first_failure("basic-bounds", self.exhaustive, holds)

    def simple_facts(self) -> SuiteResult:
        simple: list[Multisegment] = [alpha for alpha in self.exhaustive if is_simple(alpha)]
        return _first_failure(
            "simple-dual-count", simple, lambda alpha: len(self.duals(alpha)) == longest(alpha)
        )

    def ladder_criterion(self) -> SuiteResult:
        corpus: list[Multisegment] = [
            alpha for alpha in self.exhaustive if len(alpha) <= self.bounds.partition_cap
        ]

        def holds(alpha: Multisegment) -> bool:
            total: int = len(alpha) + len(self.duals(alpha))
            covered: list[tuple[int, int]] = runs(alpha)
            cover_size: int = _cover_size(alpha)
            endoscopic: int = len(
                endoscopic_decomposition(alpha, self.bounds.partition_cap, self.duals)
            )
            if endoscopic < len(covered):
                return False
            if is_ladder(alpha):
                return total == cover_size + endoscopic == cover_size + len(covered)
            return total > cover_size + endoscopic

        return _first_failure("ladder-criterion", corpus, holds)

    def witnesses(self) -> dict[Multisegment, tuple[Multisegment, ...]]:
        """Every beta != alpha with alpha <= beta and dual(alpha) <= dual(beta), per exhaustive alpha."""
        if self._witnesses is None:
            self._witnesses = {
                alpha: rigidity_check(alpha, self.duals).witnesses for alpha in self.exhaustive
            }
        return self._witnesses

    def witness_length_count(self) -> SuiteResult:
        """When L of the dual reaches n, every witness keeps n and the dual's L."""
        witnesses: dict[Multisegment, tuple[Multisegment, ...]] = self.witnesses()

        def pinned(alpha: Multisegment) -> bool:
            if longest(self.duals(alpha)) != len(alpha):
                return True
            return all(
                len(beta) == len(alpha) == longest(self.duals(beta)) for beta in witnesses[alpha]
            )

        return _first_failure("witness-length-count", self.exhaustive, pinned)

    def witness_sums(self) -> SuiteResult:
        """When n + n of the dual reaches S + C, every witness keeps both counts and the equality."""
        witnesses: dict[Multisegment, tuple[Multisegment, ...]] = self.witnesses()
        corpus: list[Multisegment] = [
            alpha for alpha in self.exhaustive if len(alpha) <= self.bounds.partition_cap
        ]

        def balanced(alpha: Multisegment) -> bool:
            endoscopic: int = len(
                endoscopic_decomposition(alpha, self.bounds.partition_cap, self.duals)
            )
            return len(alpha) + len(self.duals(alpha)) == _cover_size(alpha) + endoscopic

        def kept(alpha: Multisegment) -> bool:
            if not balanced(alpha):
                return True
            return all(
                len(beta) == len(alpha)
                and len(self.duals(beta)) == len(self.duals(alpha))
                and balanced(beta)
                for beta in witnesses[alpha]
            )

        return _first_failure("witness-sums", corpus, kept)

    def _sweep(self, name: str, family: Family, lo2: int, hi2: int) -> SuiteResult:
        result = rigidity_sweep(family, lo2, hi2, self.bounds.max_content, self.duals)
        if result.failures:
            failing: Multisegment = _ordered(report.subject for report in result.failures)[0]
            return SuiteResult(name, result.checked, failing)
        return SuiteResult(name, result.checked)

    def rigidity(self) -> list[SuiteResult]:
        reach2: int = self.bounds.arthur_reach2
        half2: int = reach2 - 1 if reach2 % 2 == 0 else reach2
        whole2: int = reach2 if reach2 % 2 == 0 else reach2 - 1
        return [
            self._sweep("rigid-simple", Family.SIMPLE, self.bounds.lo2, self.bounds.hi2),
            self._sweep("rigid-ladder", Family.LADDER, self.bounds.lo2, self.bounds.hi2),
            self._sweep("rigid-arthur", Family.ARTHUR, -whole2, whole2),
            self._sweep("rigid-arthur-half", Family.ARTHUR, -half2, half2),
        ]

    def _arthur_corpus(self) -> list[Multisegment]:
        reach2: int = self.bounds.arthur_reach2
        return _ordered(
            itertools.chain(
                family_members(Family.ARTHUR, -reach2, reach2, self.bounds.max_content),
                family_members(Family.ARTHUR, -reach2 + 1, reach2 - 1, self.bounds.max_content),
            )
        )

    def block_splitting(self) -> SuiteResult:
        def splits(alpha: Multisegment) -> bool:
            block: Union[Multisegment, None] = top_block(alpha)
            if block is None:
                return False
            rest: Multisegment = alpha.difference(block)
            return self.duals(alpha) == self.duals(block).union(self.duals(rest))

        return _first_failure("top-block-splitting", self._arthur_corpus(), splits)

    def top_block_rank(self) -> SuiteResult:
        """The dual rank at the top block's shortest segment counts copies of that block."""

        def counts_copies(alpha: Multisegment) -> bool:
            decomposition: Union[ArthurDecomposition, None] = arthur_decompose(alpha)
            if decomposition is None:
                return False
            block, copies = decomposition.blocks[0]
            shortest: Segment = block.segments[-1]
            offset2: int = decomposition.offset.twice
            dual: RankTriangle = self.duals.ranks(self.duals(alpha))
            return dual.r(-shortest.b2 + offset2, shortest.e2 + offset2) == copies

        return _first_failure("top-block-rank", self._arthur_corpus(), counts_copies)

    def equal_invariants(self) -> SuiteResult:
        """Above a simple alpha equal L forces equality; between two ladders equal n does."""
        classes: dict = {}
        for alpha in self.exhaustive:
            classes.setdefault(weight(alpha), []).append(alpha)

        def fixed(alpha: Multisegment) -> bool:
            simple, ladder = is_simple(alpha), is_ladder(alpha)
            if not (simple or ladder):
                return True
            for beta in classes[weight(alpha)]:
                if beta == alpha or not self.duals.leq(alpha, beta):
                    continue
                if simple and longest(beta) == longest(alpha):
                    return False
                if ladder and is_ladder(beta) and len(beta) == len(alpha):
                    return False
            return True

        return _first_failure("equal-invariants", self.exhaustive, fixed)

    def run(self) -> list[SuiteResult]:
        results: list[SuiteResult] = []
        for suite in (
            self.involution,
            self.engine_agreement,
            self.rank_round_trip,
            self.increasing_length,
            self.basic_bounds,
            self.simple_facts,
            self.ladder_criterion,
            self.equal_invariants,
            self.witness_length_count,
            self.witness_sums,
            self.block_splitting,
            self.top_block_rank,
        ):
            results.append(suite())
            logger.info(f"Suite {results[-1].name}: {'pass' if results[-1].passed else 'FAIL'}")
        results.extend(self.rigidity())
        return results
