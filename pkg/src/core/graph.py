"""Immutable simple graphs and weighted orientations.

Vertices are dense integers ``0..n-1``. An edge is identified by its index in
the edge list, and an orientation stores, per edge index, the head of the arc
and its positive weight.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
Arc = Tuple[int, int, int]


class GraphError(ValueError):
    """Raised when a graph or orientation violates its structural invariants."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _edge_lookup: Dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError(f"Negative vertex count: {self.vertex_count}")

        edges = tuple((int(u), int(v)) for u, v in self.edges)
        neighbours: List[List[int]] = [[] for _ in range(self.vertex_count)]
        lookup: Dict[Edge, int] = {}

        for index, (u, v) in enumerate(edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"Edge {index} ({u}, {v}) has an endpoint outside 0..{self.vertex_count - 1}")
            if u == v:
                raise GraphError(f"Edge {index} is a self-loop on vertex {u}")
            key = (min(u, v), max(u, v))
            if key in lookup:
                raise GraphError(f"Edge {index} duplicates edge {lookup[key]} ({u}, {v})")
            lookup[key] = index
            neighbours[u].append(v)
            neighbours[v].append(u)

        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(nb)) for nb in neighbours))
        object.__setattr__(self, "_edge_lookup", lookup)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_lookup

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._edge_lookup[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def canonical(self) -> "Graph":
        """Same graph with every edge written (low, high) and the list sorted."""
        return Graph(self.vertex_count, tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges)))

    def subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", Tuple[int, ...], Tuple[int, ...]]:
        """Induced subgraph relabelled to ``0..k-1`` in increasing vertex order.

        Returns the subgraph, the local-to-global vertex map and the
        local-to-global edge index map.
        """
        vertex_map = tuple(sorted(set(vertices)))
        local = {v: i for i, v in enumerate(vertex_map)}
        local_edges: List[Edge] = []
        edge_map: List[int] = []
        for index, (u, v) in enumerate(self.edges):
            if u in local and v in local:
                local_edges.append((local[u], local[v]))
                edge_map.append(index)
        return Graph(len(vertex_map), tuple(local_edges)), vertex_map, tuple(edge_map)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        for index, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, index=index)
        return g


def max_degree(g: Graph) -> int:
    if g.vertex_count == 0:
        raise GraphError("Maximum degree is undefined for the empty graph")
    return max(len(nb) for nb in g.adjacency)


@dataclass(frozen=True)
class Orientation:
    """Arc directions plus positive integer weights over a graph's edges."""

    graph: Graph
    heads: Tuple[int, ...]
    weights: Tuple[int, ...]
    in_weight: Tuple[int, ...] = field(init=False, compare=False)
    mu: int = field(init=False, compare=False)

    def __post_init__(self):
        heads = tuple(int(h) for h in self.heads)
        weights = tuple(int(w) for w in self.weights)
        if len(heads) != self.graph.edge_count or len(weights) != self.graph.edge_count:
            raise GraphError(
                f"Orientation covers {len(heads)} arcs but the graph has {self.graph.edge_count} edges"
            )

        totals = [0] * self.graph.vertex_count
        for index, ((u, v), head, weight) in enumerate(zip(self.graph.edges, heads, weights)):
            if head != u and head != v:
                raise GraphError(f"Arc {index} points to {head}, which is not an endpoint of ({u}, {v})")
            if weight < 1:
                raise GraphError(f"Arc {index} has non-positive weight {weight}")
            totals[head] += weight

        assert sum(totals) == sum(weights), "in-weights must account for every arc weight"

        object.__setattr__(self, "heads", heads)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "in_weight", tuple(totals))
        object.__setattr__(self, "mu", max(totals, default=0))

    def tail(self, index: int) -> int:
        u, v = self.graph.edges[index]
        return v if self.heads[index] == u else u

    def arcs(self) -> Iterator[Arc]:
        """Yield ``(tail, head, weight)`` in edge order."""
        for index, head in enumerate(self.heads):
            yield self.tail(index), head, self.weights[index]

    def weight_two_count(self) -> int:
        return sum(1 for w in self.weights if w == 2)


class OrientationBuilder:
    """Mutable accumulator used by the constructive algorithms."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.heads: List[Optional[int]] = [None] * graph.edge_count
        self.weights: List[int] = [0] * graph.edge_count
        self.in_weight: List[int] = [0] * graph.vertex_count

    def orient(self, tail: int, head: int, weight: int) -> int:
        index = self.graph.edge_index(tail, head)
        if self.heads[index] is not None:
            raise GraphError(f"Edge {index} ({tail}, {head}) is already oriented")
        if weight < 1:
            raise GraphError(f"Arc {tail}->{head} needs a positive weight, got {weight}")
        self.heads[index] = head
        self.weights[index] = weight
        self.in_weight[head] += weight
        return index

    def missing(self) -> List[int]:
        return [i for i, h in enumerate(self.heads) if h is None]

    def build(self) -> Orientation:
        missing = self.missing()
        if missing:
            raise GraphError(f"{len(missing)} edges left unoriented, first is {missing[0]}")
        orientation = Orientation(self.graph, tuple(self.heads), tuple(self.weights))
        assert list(orientation.in_weight) == self.in_weight
        return orientation
