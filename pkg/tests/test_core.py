import pytest
from hypothesis import given

from multiseg.core import (
    Multisegment,
    RankTriangle,
    Segment,
    Value,
    Weight,
    act_conjunction,
    act_union_intersection,
    connected_components,
    format_multisegment,
    format_weight,
    leq,
    mirror,
    multisegment_from_ranks,
    parse_multisegment,
    parse_weight,
    precedes,
    ranks,
    render_triangle,
    runs,
    shift,
    weight,
)
from multiseg.errors import (
    CosetError,
    NegativeMultiplicityError,
    ParseError,
    SegmentBoundsError,
    SegmentIndexError,
)
from multiseg.order_space import enumerate_weight
from strategies import multisegments, small_multisegments

SIMPLE: Multisegment = parse_multisegment("{[1,3],[2,4],[3,5]}")


def ms(text: str) -> Multisegment:
    return parse_multisegment(text)


class TestParsing:
    def test_simple_example(self) -> None:
        assert SIMPLE.segments == (Segment.of(1, 3), Segment.of(2, 4), Segment.of(3, 5))

    def test_empty(self) -> None:
        assert ms("{}") == Multisegment()
        assert format_multisegment(Multisegment()) == "{}"

    def test_half_integers(self) -> None:
        alpha: Multisegment = ms("{[1/2],[-1/2,3/2]}")
        assert alpha.segments == (Segment(-1, 3), Segment(1, 1))
        assert format_multisegment(alpha) == "{[-1/2,3/2],[1/2]}"

    def test_decimal_half_integers(self) -> None:
        assert ms("{[-0.5,1.5]}") == ms("{[-1/2,3/2]}")

    def test_canonical_order(self) -> None:
        assert format_multisegment(ms("{[2,4],[1,3]}")) == "{[1,3],[2,4]}"

    def test_whitespace(self) -> None:
        assert ms(" { [1, 3] , [2] } ") == ms("{[1,3],[2]}")

    def test_reversed_segment_reports_position(self) -> None:
        with pytest.raises(SegmentBoundsError, match="position 5"):
            ms("{[1],[3,2]}")

    def test_mixed_cosets(self) -> None:
        with pytest.raises(CosetError):
            ms("{[1],[1/2]}")

    @pytest.mark.parametrize("text", ["", "{", "{[1]", "{[1],}", "{[a]}", "{[1]]", "{[1]} x", "[1]"])
    def test_malformed(self, text: str) -> None:
        with pytest.raises(ParseError):
            ms(text)

    def test_parse_error_position(self) -> None:
        with pytest.raises(ParseError) as caught:
            ms("{[1];[2]}")
        assert caught.value.position == 4

    @given(multisegments(low=-3, high=3))
    def test_format_is_canonical(self, alpha: Multisegment) -> None:
        assert ms(format_multisegment(alpha)) == alpha


class TestValues:
    def test_value_text(self) -> None:
        assert str(Value(7)) == "7/2"
        assert str(Value(-3)) == "-3/2"
        assert str(Value.of(2)) == "2"

    def test_segment_length(self) -> None:
        assert Segment.of(3, 5).length == 3
        assert Segment(-1, 3).length == 3

    def test_segment_bounds(self) -> None:
        with pytest.raises(SegmentBoundsError):
            Segment.of(2, 1)
        with pytest.raises(CosetError):
            Segment(0, 1)


class TestRanks:
    def test_simple_example(self) -> None:
        triangle: RankTriangle = ranks(SIMPLE)
        expected: dict[tuple[int, int], int] = {
            (1, 1): 1, (2, 2): 2, (3, 3): 3, (4, 4): 2, (5, 5): 1,
            (1, 2): 1, (2, 3): 2, (3, 4): 2, (4, 5): 1,
            (1, 3): 1, (2, 4): 1, (3, 5): 1,
        }  # fmt: skip
        for i in range(1, 6):
            for j in range(i, 6):
                assert triangle.r(2 * i, 2 * j) == expected.get((i, j), 0), (i, j)

    def test_single_point(self) -> None:
        triangle: RankTriangle = ranks(ms("{[4]}"))
        assert triangle.entries == {(8, 8): 1}

    def test_two_points(self) -> None:
        triangle: RankTriangle = ranks(ms("{[1],[2]}"))
        assert (triangle.r(2, 2), triangle.r(4, 4), triangle.r(2, 4)) == (1, 1, 0)

    def test_outside_support_is_zero(self) -> None:
        assert ranks(SIMPLE).r(0, 2) == 0
        assert ranks(SIMPLE).r(10, 12) == 0

    def test_round_trip_example(self) -> None:
        assert multisegment_from_ranks(ranks(SIMPLE)) == SIMPLE

    def test_all_zero_triangle(self) -> None:
        assert multisegment_from_ranks(RankTriangle.from_entries({}, 2, 4)) == Multisegment()
        assert multisegment_from_ranks(RankTriangle()) == Multisegment()

    def test_negative_multiplicity(self) -> None:
        triangle: RankTriangle = RankTriangle.from_entries({(2, 2): 1, (4, 4): 1, (2, 4): 2}, 2, 4)
        with pytest.raises(NegativeMultiplicityError) as caught:
            multisegment_from_ranks(triangle)
        assert caught.value.multiplicity == -1

    @given(multisegments(low=-2, high=4))
    def test_round_trip(self, alpha: Multisegment) -> None:
        assert multisegment_from_ranks(ranks(alpha)) == alpha

    def test_render(self) -> None:
        assert render_triangle(ranks(ms("{[1],[1,2]}"))) == "1   2\n2   1\n  1"

    def test_render_empty(self) -> None:
        assert render_triangle(ranks(Multisegment())) == "(empty triangle)"


class TestWeight:
    def test_simple_example(self) -> None:
        assert weight(SIMPLE) == parse_weight("{1:1, 2:2, 3:3, 4:2, 5:1}")

    def test_point(self) -> None:
        assert weight(ms("{[3]}")).as_dict() == {6: 1}

    def test_overlapping(self) -> None:
        assert weight(ms("{[1],[1,2],[2]}")) == parse_weight("{1:2, 2:2}")

    def test_parse_adds_repeats(self) -> None:
        assert parse_weight("{1:1, 1:2, 3/2:0}") == Weight.from_mapping({2: 3})

    def test_format(self) -> None:
        assert format_weight(parse_weight("{2:1,1:2}")) == "{1:2, 2:1}"

    @pytest.mark.parametrize("text", ["{1}", "{1:-1}", "{1:x}", "{1:2,"])
    def test_malformed(self, text: str) -> None:
        with pytest.raises(ParseError):
            parse_weight(text)


class TestOrder:
    def test_below(self) -> None:
        assert leq(ms("{[1],[2]}"), ms("{[1,2]}"))

    def test_not_below(self) -> None:
        assert not leq(ms("{[1,2]}"), ms("{[1],[2]}"))

    def test_different_weights(self) -> None:
        assert not leq(ms("{[1]}"), ms("{[2]}"))

    @given(multisegments())
    def test_reflexive(self, alpha: Multisegment) -> None:
        assert leq(alpha, alpha)

    @given(small_multisegments(max_content=4))
    def test_antisymmetric_and_transitive(self, alpha: Multisegment) -> None:
        members: list[Multisegment] = enumerate_weight(weight(alpha))
        below: dict[tuple[Multisegment, Multisegment], bool] = {
            (beta, gamma): leq(beta, gamma) for beta in members for gamma in members
        }
        for beta in members:
            for gamma in members:
                if below[beta, gamma] and below[gamma, beta]:
                    assert beta == gamma
                for delta in members:
                    if below[beta, gamma] and below[gamma, delta]:
                        assert below[beta, delta]

    @given(multisegments(low=-2, high=4))
    def test_ranks_shrink_as_segments_grow(self, alpha: Multisegment) -> None:
        triangle: RankTriangle = ranks(alpha)
        for i2, j2 in triangle.points():
            assert triangle.r(i2, j2) >= triangle.r(i2 - 2, j2)
            assert triangle.r(i2, j2) >= triangle.r(i2, j2 + 2)

    @pytest.mark.parametrize(
        ("first", "second", "expected"),
        [
            (Segment.of(1), Segment.of(2), True),
            (Segment.of(1, 2), Segment.of(1, 2), False),
            (Segment.of(1), Segment.of(3), False),
            (Segment.of(1, 3), Segment.of(2, 4), True),
            (Segment.of(1, 4), Segment.of(2, 3), False),
        ],
    )
    def test_precedes(self, first: Segment, second: Segment, expected: bool) -> None:
        assert precedes(first, second) is expected


class TestActions:
    def test_union_intersection(self) -> None:
        assert act_union_intersection(ms("{[1,3],[2,4]}"), 0, 1) == ms("{[2,3],[1,4]}")

    def test_union_intersection_around_zero(self) -> None:
        assert act_union_intersection(ms("{[-1,0],[0,1]}"), 0, 1) == ms("{[0],[-1,1]}")

    def test_equal_segments(self) -> None:
        assert act_union_intersection(ms("{[1,2],[1,2]}"), 0, 1) is None

    def test_disjoint_segments(self) -> None:
        assert act_union_intersection(ms("{[1],[2]}"), 0, 1) is None

    def test_nested_segments(self) -> None:
        assert act_union_intersection(ms("{[1,4],[2,3]}"), 0, 1) is None

    def test_conjunction(self) -> None:
        assert act_conjunction(ms("{[1],[2]}"), 1, 0) == ms("{[1,2]}")

    def test_conjunction_gap(self) -> None:
        assert act_conjunction(ms("{[1],[3]}"), 0, 1) is None

    def test_conjunction_overlap(self) -> None:
        assert act_conjunction(ms("{[1,2],[2,3]}"), 0, 1) is None

    def test_bad_indices(self) -> None:
        with pytest.raises(SegmentIndexError):
            act_conjunction(ms("{[1],[2]}"), 0, 2)
        with pytest.raises(SegmentIndexError):
            act_union_intersection(ms("{[1],[2]}"), 1, 1)

    @given(multisegments(max_size=4))
    def test_actions_climb(self, alpha: Multisegment) -> None:
        for i1 in range(len(alpha)):
            for i2 in range(i1 + 1, len(alpha)):
                for action in (act_union_intersection, act_conjunction):
                    moved = action(alpha, i1, i2)
                    if moved is not None:
                        assert moved != alpha
                        assert leq(alpha, moved)
                        assert not leq(moved, alpha)


class TestGeometry:
    def test_shift(self) -> None:
        assert shift(ms("{[1,2],[2,3]}"), -4) == ms("{[-1,0],[0,1]}")
        assert shift(ms("{[0],[1]}"), -1) == ms("{[-1/2],[1/2]}")

    def test_mirror(self) -> None:
        assert mirror(ms("{[0,1],[3]}")) == ms("{[-3],[-1,0]}")

    def test_runs(self) -> None:
        assert runs(ms("{[1,2],[2,3],[5],[7,8]}")) == [(2, 6), (10, 10), (14, 16)]

    def test_components(self) -> None:
        assert connected_components(ms("{[1],[3],[3,4]}")) == [ms("{[1]}"), ms("{[3],[3,4]}")]
