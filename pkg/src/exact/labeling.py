"""Semi-proper orientation number by search over in-weight labelings.

A labeling ``t`` assigns every vertex its intended in-weight with adjacent
values distinct. With weights in {1, 2}, a vertex receiving ``d`` arcs can
reach in-weight ``t`` exactly when ``d <= t <= 2d``, so a labeling is
realisable iff some orientation gives every vertex an in-degree in
``[ceil(t/2), t]``. That is decided by one max-flow per labeling.
"""

import logging
from typing import Dict, List, Optional, Sequence

import networkx as nx

from config.settings import defaults
from core.graph import Graph, Orientation, max_degree
from exact.coloring import clique_number
from exact.search import (
    BudgetExhausted,
    SearchBudget,
    SolveReport,
    completion_order,
    inconclusive,
    refuted,
    solved,
    trivial_lower_bound,
)

logger = logging.getLogger(__name__)

_SOURCE = ("source",)
_SINK = ("sink",)
_SLACK = ("slack",)


def _window_flow(g: Graph, lo: Sequence[int], hi: Sequence[int]) -> Optional[Dict]:
    """Flow assigning each edge to one endpoint with in-degrees inside ``[lo, hi]``."""
    m = g.edge_count
    floor = sum(lo)
    if floor > m or sum(hi) < m:
        return None
    if m == 0:
        return {}

    network = nx.DiGraph()
    for index, (u, v) in enumerate(g.edges):
        node = ("edge", index)
        network.add_edge(_SOURCE, node, capacity=1)
        network.add_edge(node, ("vertex", u), capacity=1)
        network.add_edge(node, ("vertex", v), capacity=1)
    for v in g.vertices():
        if lo[v]:
            network.add_edge(("vertex", v), _SINK, capacity=lo[v])
        if hi[v] > lo[v]:
            network.add_edge(("vertex", v), _SLACK, capacity=hi[v] - lo[v])
    if floor < m:
        network.add_edge(_SLACK, _SINK, capacity=m - floor)

    if _SINK not in network:
        return None
    value, flow = nx.maximum_flow(network, _SOURCE, _SINK)
    # Full flow saturates every lower-bound arc, since the sink's capacity is exactly m
    return flow if value == m else None


def labeling_realizable(g: Graph, labels: Sequence[int]) -> Optional[Orientation]:
    """Orientation with weights in {1, 2} whose in-weights equal ``labels``, or None."""
    lo = [(t + 1) // 2 for t in labels]
    flow = _window_flow(g, lo, list(labels))
    if flow is None:
        return None

    heads = []
    for index, (u, v) in enumerate(g.edges):
        heads.append(u if flow[("edge", index)].get(("vertex", u), 0) else v)

    weights = [1] * g.edge_count
    received: Dict[int, List[int]] = {v: [] for v in g.vertices()}
    for index, head in enumerate(heads):
        received[head].append(index)
    for v, arcs in received.items():
        for index in arcs[: labels[v] - len(arcs)]:
            weights[index] = 2
    return Orientation(g, tuple(heads), tuple(weights))


def labeling_realizable_backtrack(g: Graph, labels: Sequence[int]) -> Optional[Orientation]:
    """Same question as :func:`labeling_realizable`, answered by plain per-edge search."""
    need = list(labels)
    heads = [0] * g.edge_count
    weights = [0] * g.edge_count
    remaining = [g.degree(v) for v in g.vertices()]

    def extend(index: int) -> bool:
        if index == g.edge_count:
            return all(x == 0 for x in need)
        u, v = g.edges[index]
        for head in (v, u):
            for w in (1, 2):
                if need[head] < w:
                    break
                need[head] -= w
                remaining[u] -= 1
                remaining[v] -= 1
                heads[index], weights[index] = head, w
                # a vertex with no undecided edges left must be exactly met
                if not ((remaining[u] == 0 and need[u]) or (remaining[v] == 0 and need[v])):
                    if extend(index + 1):
                        return True
                need[head] += w
                remaining[u] += 1
                remaining[v] += 1
        return False

    if any(t < 0 for t in need) or not extend(0):
        return None
    return Orientation(g, tuple(heads), tuple(weights))


class LabelingSearch:
    """Backtracking over proper labelings with values in ``0..k``."""

    def __init__(self, g: Graph, k: int, budget: SearchBudget, partial_flow: bool):
        self.graph = g
        self.k = k
        self.budget = budget
        self.partial_flow = partial_flow
        self.order = completion_order(g)
        self.top = [min(k, 2 * g.degree(v)) for v in g.vertices()]
        self.labels: List[int] = [-1] * g.vertex_count
        self.zeros = [0] * g.vertex_count
        self.m = g.edge_count

    def run(self) -> Optional[Orientation]:
        return self._extend(0, 0, sum(self.top))

    def _extend(self, depth: int, total: int, headroom: int) -> Optional[Orientation]:
        if depth == len(self.order):
            return labeling_realizable(self.graph, self.labels)
        self.budget.tick()

        v = self.order[depth]
        taken = {self.labels[u] for u in self.graph.neighbors(v) if self.labels[u] >= 0}
        rest = headroom - self.top[v]
        for value in range(self.zeros[v], self.top[v] + 1):
            if value in taken:
                continue
            if total + value > 2 * self.m:
                break
            if total + value + rest < self.m:
                continue
            self._assign(v, value)
            if self._consistent(v) and self._partial_feasible():
                found = self._extend(depth + 1, total + value, rest)
                if found is not None:
                    return found
            self._unassign(v, value)
        return None

    def _assign(self, v: int, value: int):
        self.labels[v] = value
        if value == 0:
            for u in self.graph.neighbors(v):
                self.zeros[u] += 1

    def _unassign(self, v: int, value: int):
        self.labels[v] = -1
        if value == 0:
            for u in self.graph.neighbors(v):
                self.zeros[u] -= 1

    def _consistent(self, v: int) -> bool:
        # every neighbour of a 0 receives its arc, and must still have a usable value
        for u in self.graph.neighbors(v):
            if self.labels[u] >= 0:
                if self.zeros[u] > self.labels[u]:
                    return False
                continue
            taken = {self.labels[x] for x in self.graph.neighbors(u) if self.labels[x] >= 0}
            if not any(x not in taken for x in range(self.zeros[u], self.top[u] + 1)):
                return False
        return True

    def _partial_feasible(self) -> bool:
        if not self.partial_flow:
            return True
        lo, hi = [], []
        for v in self.graph.vertices():
            t = self.labels[v]
            if t >= 0:
                lo.append((t + 1) // 2)
                hi.append(t)
            else:
                lo.append(0)
                hi.append(min(self.graph.degree(v), self.k))
        return _window_flow(self.graph, lo, hi) is not None


def chi_s_labeling(
    g: Graph,
    mu_cap: Optional[int] = None,
    budget: Optional[SearchBudget] = None,
    partial_flow: Optional[bool] = None,
) -> SolveReport:
    """Semi-proper orientation number up to ``mu_cap``, or a certificate that it exceeds it."""
    budget = budget or SearchBudget()
    use_flow = defaults.search.labeling_partial_flow if partial_flow is None else partial_flow
    cap = (max_degree(g) if g.vertex_count else 0) if mu_cap is None else mu_cap
    lower = max(clique_number(g) - 1, trivial_lower_bound(g))
    domain = (1, 2)

    try:
        for k in range(lower, cap + 1):
            logger.debug(f"chi_s_labeling: trying mu <= {k}")
            witness = LabelingSearch(g, k, budget, use_flow).run()
            if witness is not None:
                return solved("chi_s_labeling", k, witness, lower, cap, domain, budget)
    except BudgetExhausted as exc:
        return inconclusive("chi_s_labeling", lower, cap, domain, budget, exc)
    logger.info(f"chi_s_labeling: no orientation with mu <= {cap} after {budget.nodes} nodes")
    return refuted("chi_s_labeling", lower, cap, domain, budget)
