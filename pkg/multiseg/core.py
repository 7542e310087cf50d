"""Values, segments, multisegments and rank triangles.

Every value is stored doubled (`twice`), so integer and half-integer labels are
both exact integers. Consecutive values differ by 2 in that representation.
"""

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Final, Iterable, Iterator, Mapping, Union

from multiseg.errors import (
    CosetError,
    NegativeMultiplicityError,
    ParseError,
    SegmentBoundsError,
    SegmentIndexError,
)

STEP: Final[int] = 2

_VALUE_PATTERN: Final[re.Pattern[str]] = re.compile(r"-?\d+(?:/2|\.5)?")


def format_value(twice: int) -> str:
    """Render a doubled value as `n` or `k/2`."""
    if twice % 2 == 0:
        return str(twice // 2)
    return f"{twice}/2"


def parse_value(text: str) -> int:
    """Parse one value of the grammar and return it doubled."""
    match = _VALUE_PATTERN.fullmatch(text.strip())
    if match is None:
        raise ParseError(f"invalid value {text!r}", 0)
    return _twice_of(match.group(0))


def _twice_of(token: str) -> int:
    if token.endswith("/2"):
        return int(token[:-2])
    if token.endswith(".5"):
        whole: int = int(token[:-2])
        negative: bool = token.startswith("-")
        return 2 * whole - 1 if negative else 2 * whole + 1
    return 2 * int(token)


@dataclass(frozen=True, order=True, slots=True)
class Value:
    twice: int

    @classmethod
    def of(cls, number: int) -> "Value":
        return cls(STEP * number)

    def __str__(self) -> str:
        return format_value(self.twice)


@dataclass(frozen=True, order=True, slots=True)
class Segment:
    b2: int
    e2: int

    def __post_init__(self) -> None:
        if self.b2 > self.e2:
            raise SegmentBoundsError(
                f"segment base {format_value(self.b2)} lies above its end {format_value(self.e2)}"
            )
        if (self.e2 - self.b2) % STEP != 0:
            raise CosetError(
                f"segment [{format_value(self.b2)},{format_value(self.e2)}] mixes integer and half-integer endpoints"
            )

    @classmethod
    def of(cls, b: int, e: Union[int, None] = None) -> "Segment":
        """Build an integer segment `[b, e]` (or the singleton `[b]`)."""
        return cls(STEP * b, STEP * (b if e is None else e))

    @property
    def b(self) -> Value:
        return Value(self.b2)

    @property
    def e(self) -> Value:
        return Value(self.e2)

    @property
    def length(self) -> int:
        return (self.e2 - self.b2) // STEP + 1

    @property
    def coset(self) -> int:
        return self.b2 % 2

    def contains(self, twice: int) -> bool:
        return self.b2 <= twice <= self.e2 and (twice - self.b2) % STEP == 0

    def values(self) -> range:
        """Doubled values covered by this segment, in increasing order."""
        return range(self.b2, self.e2 + 1, STEP)

    def shifted(self, offset2: int) -> "Segment":
        return Segment(self.b2 + offset2, self.e2 + offset2)

    def __str__(self) -> str:
        if self.b2 == self.e2:
            return f"[{format_value(self.b2)}]"
        return f"[{format_value(self.b2)},{format_value(self.e2)}]"


@dataclass(frozen=True, order=True, slots=True)
class Multisegment:
    segments: tuple[Segment, ...] = ()

    def __post_init__(self) -> None:
        ordered: tuple[Segment, ...] = tuple(sorted(self.segments))
        object.__setattr__(self, "segments", ordered)

        if len({segment.coset for segment in ordered}) > 1:
            raise CosetError(
                "a multisegment must use only integer or only half-integer endpoints"
            )

    @classmethod
    def of(cls, segments: Iterable[Segment]) -> "Multisegment":
        return cls(tuple(segments))

    @classmethod
    def from_counter(cls, counter: Mapping[Segment, int]) -> "Multisegment":
        return cls(
            tuple(
                segment
                for segment, count in counter.items()
                for _ in range(count)
            )
        )

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __getitem__(self, index: int) -> Segment:
        return self.segments[index]

    def __str__(self) -> str:
        return format_multisegment(self)

    @property
    def coset(self) -> Union[int, None]:
        return self.segments[0].coset if self.segments else None

    @property
    def min2(self) -> int:
        return min(segment.b2 for segment in self.segments)

    @property
    def max2(self) -> int:
        return max(segment.e2 for segment in self.segments)

    @property
    def content(self) -> int:
        return sum(segment.length for segment in self.segments)

    def counter(self) -> Counter[Segment]:
        return Counter(self.segments)

    def union(self, other: "Multisegment") -> "Multisegment":
        """Multiset sum."""
        return Multisegment(self.segments + other.segments)

    def difference(self, other: "Multisegment") -> "Multisegment":
        """Multiset difference; every segment of `other` must be present."""
        remaining: Counter[Segment] = self.counter()
        remaining.subtract(other.counter())
        if any(count < 0 for count in remaining.values()):
            raise ValueError(f"{other} is not contained in {self}")
        return Multisegment.from_counter(+remaining)

    def contains(self, other: "Multisegment") -> bool:
        """True when `other` is a sub-multiset."""
        mine: Counter[Segment] = self.counter()
        return all(mine[segment] >= count for segment, count in other.counter().items())


@dataclass(frozen=True, slots=True)
class Weight:
    """Multiplicity of every value across the segments; only positive counts are kept."""

    counts: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "Weight":
        """Build a weight from doubled values to counts, dropping zero counts."""
        items: list[tuple[int, int]] = sorted(
            (twice, count) for twice, count in mapping.items() if count != 0
        )
        if any(count < 0 for _, count in items):
            raise ValueError("weight counts must not be negative")
        if len({twice % 2 for twice, _ in items}) > 1:
            raise CosetError("a weight must use only integer or only half-integer values")
        return cls(tuple(items))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def count(self, twice: int) -> int:
        return self.as_dict().get(twice, 0)

    @property
    def total(self) -> int:
        return sum(count for _, count in self.counts)

    @property
    def support(self) -> Union[tuple[int, int], None]:
        if not self.counts:
            return None
        return self.counts[0][0], self.counts[-1][0]

    def __str__(self) -> str:
        return format_weight(self)


@dataclass(frozen=True, slots=True)
class RankTriangle:
    """The ranks r_{i,j}, keyed by doubled values; absent entries are zero."""

    lo2: Union[int, None] = None
    hi2: Union[int, None] = None
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def from_entries(
        cls,
        entries: Mapping[tuple[int, int], int],
        lo2: Union[int, None] = None,
        hi2: Union[int, None] = None,
    ) -> "RankTriangle":
        nonzero: dict[tuple[int, int], int] = {
            key: value for key, value in entries.items() if value != 0
        }
        if lo2 is None and nonzero:
            lo2 = min(i2 for i2, _ in nonzero)
        if hi2 is None and nonzero:
            hi2 = max(j2 for _, j2 in nonzero)
        return cls(lo2, hi2, dict(sorted(nonzero.items())))

    def r(self, i2: int, j2: int) -> int:
        return self.entries.get((i2, j2), 0)

    def points(self) -> Iterator[tuple[int, int]]:
        """Every `(i, j)` with `lo <= i <= j <= hi`, doubled, row by row of the triangle."""
        if self.lo2 is None or self.hi2 is None:
            return
        for span in range(0, self.hi2 - self.lo2 + 1, STEP):
            for i2 in range(self.lo2, self.hi2 - span + 1, STEP):
                yield i2, i2 + span

    def is_empty(self) -> bool:
        return self.lo2 is None


_TOKEN: Final[re.Pattern[str]] = re.compile(r"\s*(?:(?P<value>-?\d+(?:/2|\.5)?)|(?P<punct>[{}\[\],:]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    position: int = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            offending: int = len(text) - len(text[position:].lstrip())
            raise ParseError(f"unexpected character {text[offending]!r}", offending)
        kind: str = "value" if match.group("value") is not None else "punct"
        start: int = match.start(kind)
        tokens.append((kind, match.group(kind), start))
        position = match.end()
    return tokens


class _Cursor:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.index = 0
        self.end = len(text)

    def peek(self) -> Union[tuple[str, str, int], None]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self, expected: Union[str, None] = None) -> tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise ParseError(
                f"expected {expected!r}, found end of input" if expected else "unexpected end of input",
                self.end,
            )
        kind, text, position = token
        if expected == "value" and kind != "value":
            raise ParseError(f"expected a value, found {text!r}", position)
        if expected not in (None, "value") and text != expected:
            raise ParseError(f"expected {expected!r}, found {text!r}", position)
        self.index += 1
        return token

    def finish(self) -> None:
        token = self.peek()
        if token is not None:
            raise ParseError(f"trailing input {token[1]!r}", token[2])


def parse_multisegment(text: str) -> Multisegment:
    """Parse `{[b,e],[v],...}` into a canonical multisegment."""
    cursor: _Cursor = _Cursor(text)
    cursor.take("{")
    segments: list[Segment] = []

    token = cursor.peek()
    if token is not None and token[1] == "}":
        cursor.take("}")
        cursor.finish()
        return Multisegment()

    while True:
        _, _, opened_at = cursor.take("[")
        b2: int = _twice_of(cursor.take("value")[1])
        e2: int = b2
        if (token := cursor.peek()) is not None and token[1] == ",":
            cursor.take(",")
            e2 = _twice_of(cursor.take("value")[1])
        cursor.take("]")

        try:
            segments.append(Segment(b2, e2))
        except SegmentBoundsError as error:
            raise SegmentBoundsError(f"{error} (at position {opened_at})") from None

        _, separator, _ = cursor.take()
        if separator == "}":
            break
        if separator != ",":
            raise ParseError(f"expected ',' or '}}', found {separator!r}", cursor.tokens[cursor.index - 1][2])

    cursor.finish()
    return Multisegment.of(segments)


def format_multisegment(alpha: Multisegment) -> str:
    return "{" + ",".join(str(segment) for segment in alpha.segments) + "}"


def parse_weight(text: str) -> Weight:
    """Parse `{v:count, ...}`; repeated values add up."""
    cursor: _Cursor = _Cursor(text)
    cursor.take("{")
    counts: Counter[int] = Counter()

    token = cursor.peek()
    if token is not None and token[1] == "}":
        cursor.take("}")
        cursor.finish()
        return Weight()

    while True:
        twice: int = _twice_of(cursor.take("value")[1])
        cursor.take(":")
        _, count_text, position = cursor.take("value")
        if not count_text.isdigit() and not count_text.lstrip("-").isdigit():
            raise ParseError(f"count {count_text!r} must be an integer", position)
        count: int = int(count_text)
        if count < 0:
            raise ParseError(f"count {count} must not be negative", position)
        counts[twice] += count

        _, separator, position = cursor.take()
        if separator == "}":
            break
        if separator != ",":
            raise ParseError(f"expected ',' or '}}', found {separator!r}", position)

    cursor.finish()
    return Weight.from_mapping(counts)


def format_weight(w: Weight) -> str:
    return "{" + ", ".join(f"{format_value(twice)}:{count}" for twice, count in w.counts) + "}"


def ranks(alpha: Multisegment) -> RankTriangle:
    """r_{i,j} = number of segments [k,l] with k <= i and j <= l."""
    if not alpha.segments:
        return RankTriangle()

    entries: Counter[tuple[int, int]] = Counter()
    for segment in alpha.segments:
        for i2 in segment.values():
            for j2 in range(i2, segment.e2 + 1, STEP):
                entries[(i2, j2)] += 1

    return RankTriangle.from_entries(entries, alpha.min2, alpha.max2)


def multisegment_from_ranks(triangle: RankTriangle) -> Multisegment:
    """Recover segment multiplicities by inclusion-exclusion on the ranks."""
    segments: list[Segment] = []
    r = triangle.r
    for i2, j2 in triangle.points():
        multiplicity: int = (
            r(i2, j2) - r(i2 - STEP, j2) - r(i2, j2 + STEP) + r(i2 - STEP, j2 + STEP)
        )
        if multiplicity < 0:
            raise NegativeMultiplicityError(i2, j2, multiplicity)
        segments.extend([Segment(i2, j2)] * multiplicity)

    return Multisegment.of(segments)


def weight(alpha: Multisegment) -> Weight:
    counts: Counter[int] = Counter()
    for segment in alpha.segments:
        counts.update(segment.values())
    return Weight.from_mapping(counts)


def leq(alpha: Multisegment, beta: Multisegment) -> bool:
    """alpha <= beta: equal weights and every rank of alpha bounded by beta's."""
    if weight(alpha) != weight(beta):
        return False

    beta_ranks: RankTriangle = ranks(beta)
    return all(
        count <= beta_ranks.r(i2, j2) for (i2, j2), count in ranks(alpha).entries.items()
    )


def precedes(first: Segment, second: Segment) -> bool:
    """b1 < b2, e1 < e2 and b2 <= e1 + 1."""
    if first.coset != second.coset:
        return False
    return (
        first.b2 < second.b2
        and first.e2 < second.e2
        and second.b2 <= first.e2 + STEP
    )


def _pair(alpha: Multisegment, i1: int, i2: int) -> tuple[Segment, Segment]:
    size: int = len(alpha.segments)
    for index in (i1, i2):
        if not 0 <= index < size:
            raise SegmentIndexError(f"segment index {index} is out of range for {size} segments")
    if i1 == i2:
        raise SegmentIndexError("an action needs two different segment indices")
    return alpha.segments[i1], alpha.segments[i2]


def _replace(
    alpha: Multisegment, i1: int, i2: int, replacements: Iterable[Segment]
) -> Multisegment:
    kept: list[Segment] = [
        segment for index, segment in enumerate(alpha.segments) if index not in (i1, i2)
    ]
    return Multisegment.of([*kept, *replacements])


def act_union_intersection(
    alpha: Multisegment, i1: int, i2: int
) -> Union[Multisegment, None]:
    """Replace two overlapping segments by their intersection and union.

    Returns `None` when the segments are equal, disjoint, or nested (the
    replacement would give back the same pair).
    """
    first, second = _pair(alpha, i1, i2)
    low2: int = max(first.b2, second.b2)
    high2: int = min(first.e2, second.e2)
    if low2 > high2 or first == second:
        return None

    intersection: Segment = Segment(low2, high2)
    union: Segment = Segment(min(first.b2, second.b2), max(first.e2, second.e2))
    if {intersection, union} == {first, second}:
        return None

    return _replace(alpha, i1, i2, (intersection, union))


def act_conjunction(alpha: Multisegment, i1: int, i2: int) -> Union[Multisegment, None]:
    """Join two disjoint, adjacent segments into one."""
    first, second = _pair(alpha, i1, i2)
    lower, upper = sorted((first, second))
    if lower.e2 + STEP != upper.b2:
        return None
    return _replace(alpha, i1, i2, (Segment(lower.b2, upper.e2),))


def shift(alpha: Multisegment, offset2: int) -> Multisegment:
    """Translate every segment by a doubled offset."""
    return Multisegment.of(segment.shifted(offset2) for segment in alpha.segments)


def mirror(alpha: Multisegment) -> Multisegment:
    """Reflect through zero: [b,e] -> [-e,-b]."""
    return Multisegment.of(Segment(-segment.e2, -segment.b2) for segment in alpha.segments)


def runs(alpha: Multisegment) -> list[tuple[int, int]]:
    """Maximal runs of consecutive values covered by alpha, as doubled `(start, end)`."""
    covered: list[int] = sorted({twice for segment in alpha.segments for twice in segment.values()})
    result: list[tuple[int, int]] = []
    for twice in covered:
        if result and result[-1][1] + STEP == twice:
            result[-1] = (result[-1][0], twice)
        else:
            result.append((twice, twice))
    return result


def connected_components(alpha: Multisegment) -> list[Multisegment]:
    """Split alpha into the sub-multisegments living on each maximal run."""
    return [
        Multisegment.of(
            segment for segment in alpha.segments if start2 <= segment.b2 <= end2
        )
        for start2, end2 in runs(alpha)
    ]


def render_triangle(triangle: RankTriangle) -> str:
    """Staggered text layout: r_{i,i} on the first row, r_{i,i+1} below, and so on."""
    if triangle.is_empty():
        return "(empty triangle)"

    size: int = (triangle.hi2 - triangle.lo2) // STEP + 1
    labels: list[str] = [format_value(twice) for twice in range(triangle.lo2, triangle.hi2 + 1, STEP)]
    width: int = max(
        max(len(label) for label in labels),
        max((len(str(value)) for value in triangle.entries.values()), default=1),
    )

    header: list[str] = [" " * width] * (2 * size - 1)
    for column, label in enumerate(labels):
        header[2 * column] = label.rjust(width)

    lines: list[str] = [" ".join(header).rstrip()]
    for row in range(size):
        cells: list[str] = [" " * width] * (2 * size - 1)
        for column in range(size - row):
            i2: int = triangle.lo2 + STEP * column
            cells[2 * column + row] = str(triangle.r(i2, i2 + STEP * row)).rjust(width)
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)
