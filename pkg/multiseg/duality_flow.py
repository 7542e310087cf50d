"""Knight–Zelevinskii network duality.

Dual ranks are counts of vertex-disjoint paths between value levels of the
precedence graph, computed as unit-capacity max flows on the split network.
"""

import logging
from dataclasses import dataclass, field
from typing import Final, Union

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from multiseg.core import (
    STEP,
    Multisegment,
    RankTriangle,
    format_value,
    multisegment_from_ranks,
    precedes,
)

SOURCE: Final[str] = "s"
SINK: Final[str] = "t"
IN: Final[int] = 0
OUT: Final[int] = 1

Vertex = tuple[int, int]  # (canonical segment index, doubled value)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PrecedenceGraph:
    alpha: Multisegment
    graph: nx.DiGraph
    levels: dict[int, tuple[Vertex, ...]] = field(default_factory=dict)

    def level(self, twice: int) -> tuple[Vertex, ...]:
        return self.levels.get(twice, ())


@dataclass(frozen=True, eq=False)
class FlowNetwork:
    graph: nx.DiGraph
    source: str = SOURCE
    sink: str = SINK


def build_precedence_graph(alpha: Multisegment) -> PrecedenceGraph:
    """One vertex per (segment, value); edges v_{Δm,a+1} -> v_{Δn,a} when Δn precedes Δm."""
    graph: nx.DiGraph = nx.DiGraph()
    levels: dict[int, list[Vertex]] = {}

    for index, segment in enumerate(alpha.segments):
        for twice in segment.values():
            graph.add_node((index, twice), level=twice)
            levels.setdefault(twice, []).append((index, twice))

    for n, lower in enumerate(alpha.segments):
        for m, upper in enumerate(alpha.segments):
            if not precedes(lower, upper):
                continue
            for twice in lower.values():
                if upper.contains(twice + STEP):
                    graph.add_edge((m, twice + STEP), (n, twice))

    return PrecedenceGraph(
        alpha, graph, {twice: tuple(vertices) for twice, vertices in sorted(levels.items())}
    )


def split_graph(precedence: PrecedenceGraph) -> nx.DiGraph:
    """Replace every vertex v by v⁰ -> v¹ and every edge (u, v) by u¹ -> v⁰, all capacity 1."""
    split: nx.DiGraph = nx.DiGraph()
    for vertex, level in precedence.graph.nodes(data="level"):
        split.add_node((vertex, IN), level=level)
        split.add_node((vertex, OUT), level=level)
        split.add_edge((vertex, IN), (vertex, OUT), capacity=1)
    for upper, lower in precedence.graph.edges:
        split.add_edge((upper, OUT), (lower, IN), capacity=1)
    return split


def flow_network(
    precedence: PrecedenceGraph,
    i2: int,
    j2: int,
    split: Union[nx.DiGraph, None] = None,
) -> FlowNetwork:
    """Attach terminals for one (i, j) query: s -> V_j⁰ and V_i¹ -> t."""
    if split is None:
        split = split_graph(precedence)

    between: list = [
        node for node, level in split.nodes(data="level") if i2 <= level <= j2
    ]
    graph: nx.DiGraph = split.subgraph(between).copy()
    graph.add_node(SOURCE)
    graph.add_node(SINK)
    for vertex in precedence.level(j2):
        graph.add_edge(SOURCE, (vertex, IN), capacity=1)
    for vertex in precedence.level(i2):
        graph.add_edge((vertex, OUT), SINK, capacity=1)
    return FlowNetwork(graph)


def max_flow(network: FlowNetwork) -> int:
    value = nx.maximum_flow_value(
        network.graph,
        network.source,
        network.sink,
        capacity="capacity",
        flow_func=edmonds_karp,
    )
    return int(value)


def disjoint_paths(network: FlowNetwork) -> list[list[Vertex]]:
    """Decompose a maximum flow into its unit paths, as precedence-graph vertices."""
    _, flow = nx.maximum_flow(
        network.graph,
        network.source,
        network.sink,
        capacity="capacity",
        flow_func=edmonds_karp,
    )
    residual: dict = {node: dict(arcs) for node, arcs in flow.items()}

    paths: list[list[Vertex]] = []
    while True:
        start = next(
            (node for node, amount in residual[network.source].items() if amount > 0),
            None,
        )
        if start is None:
            return paths

        residual[network.source][start] -= 1
        path: list[Vertex] = []
        node = start
        while node != network.sink:
            vertex, side = node
            if side == IN:
                path.append(vertex)
            following = next(head for head, amount in residual[node].items() if amount > 0)
            residual[node][following] -= 1
            node = following
        paths.append(path)


def dual_ranks(alpha: Multisegment) -> RankTriangle:
    """r̃_{i,j} as the maximum number of vertex-disjoint paths from V_j to V_i."""
    if not alpha.segments:
        return RankTriangle()

    precedence: PrecedenceGraph = build_precedence_graph(alpha)
    split: nx.DiGraph = split_graph(precedence)
    lo2, hi2 = alpha.min2, alpha.max2

    entries: dict[tuple[int, int], int] = {}
    for twice in range(lo2, hi2 + 1, STEP):
        entries[(twice, twice)] = len(precedence.level(twice))

    for span in range(STEP, hi2 - lo2 + 1, STEP):
        for i2 in range(lo2, hi2 - span + 1, STEP):
            j2: int = i2 + span
            # every V_j -> V_i path passes through V_{j-1} and V_{i+1}
            if entries[(i2, j2 - STEP)] == 0 or entries[(i2 + STEP, j2)] == 0:
                entries[(i2, j2)] = 0
                continue
            entries[(i2, j2)] = max_flow(flow_network(precedence, i2, j2, split))

    return RankTriangle.from_entries(entries, lo2, hi2)


def flow_dual(alpha: Multisegment) -> Multisegment:
    """The dual multisegment recovered from the flow-computed dual ranks."""
    dual: Multisegment = multisegment_from_ranks(dual_ranks(alpha))
    logger.debug("flow dual of %s is %s", alpha, dual)
    return dual


def to_dot(precedence: PrecedenceGraph) -> str:
    """DOT text of the precedence graph; vertices are named `D<k>_a`."""

    def name(vertex: Vertex) -> str:
        index, twice = vertex
        return f'"D{index}_{format_value(twice)}"'

    lines: list[str] = ["digraph precedence {"]
    for vertex in sorted(precedence.graph.nodes):
        lines.append(f"  {name(vertex)};")
    for upper, lower in sorted(precedence.graph.edges):
        lines.append(f"  {name(upper)} -> {name(lower)};")
    lines.append("}")
    return "\n".join(lines)
