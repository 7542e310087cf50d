from hypothesis import strategies as st

from multiseg.core import Multisegment, Segment


@st.composite
def segments(draw, low: int = 1, high: int = 6) -> Segment:
    b: int = draw(st.integers(low, high))
    return Segment.of(b, draw(st.integers(b, high)))


def multisegments(low: int = 1, high: int = 6, max_size: int = 6) -> st.SearchStrategy[Multisegment]:
    return st.lists(segments(low, high), min_size=0, max_size=max_size).map(Multisegment.of)


def nonempty_multisegments(low: int = 1, high: int = 6, max_size: int = 6) -> st.SearchStrategy[Multisegment]:
    return st.lists(segments(low, high), min_size=1, max_size=max_size).map(Multisegment.of)


def small_multisegments(max_content: int = 7, high: int = 4) -> st.SearchStrategy[Multisegment]:
    """Non-empty multisegments small enough to enumerate their whole weight class."""
    return nonempty_multisegments(high=high, max_size=4).filter(lambda alpha: alpha.content <= max_content)
