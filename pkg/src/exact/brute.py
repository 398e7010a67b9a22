"""Exact semi-proper and proper orientation numbers by branch and bound over edges.

Edges are decided in the order their endpoints complete along a DFS of the
graph, so a vertex's final in-weight is compared with its finished neighbours
as early as possible. The cap ``k`` is raised from a clique lower bound until
an orientation exists.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config.settings import defaults
from core.graph import Graph, Orientation, max_degree
from exact.coloring import clique_number
from exact.search import (
    BudgetExhausted,
    SearchBudget,
    SolveReport,
    SolverInputError,
    SolverKind,
    completion_order,
    inconclusive,
    refuted,
    solved,
    trivial_lower_bound,
)

logger = logging.getLogger(__name__)

Choice = Tuple[int, int]


class OrientationSearch:
    """Depth-first search over (head, weight) per edge with in-weight cap ``k``."""

    def __init__(self, g: Graph, weight_domain: Sequence[int], budget: SearchBudget):
        self.graph = g
        self.weight_domain = tuple(sorted(weight_domain))
        self.budget = budget

        position = {v: i for i, v in enumerate(completion_order(g))}
        self.edge_order = sorted(
            range(g.edge_count),
            key=lambda i: (max(position[x] for x in g.edges[i]), min(position[x] for x in g.edges[i]), i),
        )
        last_step: Dict[int, int] = {}
        for step, index in enumerate(self.edge_order):
            for x in g.edges[index]:
                last_step[x] = step
        self.finishing: List[List[int]] = [[] for _ in self.edge_order]
        for x, step in sorted(last_step.items()):
            self.finishing[step].append(x)

        self.t = [0] * g.vertex_count
        self.heads = [0] * g.edge_count
        self.weights = [0] * g.edge_count
        self.complete = [g.degree(v) == 0 for v in g.vertices()]

    def choices(self, step: int) -> List[Choice]:
        u, v = self.graph.edges[self.edge_order[step]]
        return [(head, w) for head in (v, u) for w in self.weight_domain]

    def run(self, k: int, first: Optional[Choice] = None) -> bool:
        if not self.edge_order:
            return True
        if first is None:
            return self._extend(0, k)
        return self._try(0, first, k)

    def witness(self) -> Orientation:
        return Orientation(self.graph, tuple(self.heads), tuple(self.weights))

    def _extend(self, step: int, k: int) -> bool:
        if step == len(self.edge_order):
            return True
        self.budget.tick()
        for choice in self.choices(step):
            if self._try(step, choice, k):
                return True
        return False

    def _try(self, step: int, choice: Choice, k: int) -> bool:
        head, w = choice
        if self.t[head] + w > k:
            return False
        index = self.edge_order[step]
        self.t[head] += w
        self.heads[index], self.weights[index] = head, w
        if self._finish(step):
            if self._extend(step + 1, k):
                return True
            for x in self.finishing[step]:
                self.complete[x] = False
        self.t[head] -= w
        return False

    def _finish(self, step: int) -> bool:
        marked: List[int] = []
        for x in self.finishing[step]:
            if any(self.complete[y] and self.t[y] == self.t[x] for y in self.graph.neighbors(x)):
                for y in marked:
                    self.complete[y] = False
                return False
            self.complete[x] = True
            marked.append(x)
        return True


def _solve_partition(args) -> Dict:
    g, domain, k, first, seconds, nodes = args
    search = OrientationSearch(g, domain, SearchBudget(seconds, nodes))
    try:
        found = search.run(k, first)
    except BudgetExhausted as exc:
        return {"found": False, "exhausted": str(exc), "nodes": exc.nodes}
    return {
        "found": found,
        "heads": tuple(search.heads),
        "weights": tuple(search.weights),
        "nodes": search.budget.nodes,
    }


def _edge_guard(g: Graph, weight_domain: Sequence[int]) -> int:
    if tuple(weight_domain) == (1,):
        return defaults.search.proper_max_edges
    if max(weight_domain) <= 2:
        return defaults.search.brute_max_edges_two
    return defaults.search.brute_max_edges_three


def _deepen(
    kind: SolverKind,
    g: Graph,
    weight_domain: Sequence[int],
    mu_cap: Optional[int],
    budget: Optional[SearchBudget],
    workers: int,
) -> SolveReport:
    domain = tuple(sorted(set(weight_domain)))
    if not domain or domain[0] < 1:
        raise SolverInputError(f"weight domain must be positive integers, got {weight_domain}")
    limit = _edge_guard(g, domain)
    if g.edge_count > limit:
        raise SolverInputError(f"{kind} accepts at most {limit} edges for weights {list(domain)}, got {g.edge_count}")

    budget = budget or SearchBudget()
    cap = (max_degree(g) if g.vertex_count else 0) if mu_cap is None else mu_cap
    lower = max(clique_number(g) - 1, trivial_lower_bound(g))

    try:
        for k in range(lower, cap + 1):
            logger.debug(f"{kind}: trying mu <= {k}")
            witness = _search(g, domain, k, budget, workers)
            if witness is not None:
                return solved(kind, k, witness, lower, cap, domain, budget)
    except BudgetExhausted as exc:
        return inconclusive(kind, lower, cap, domain, budget, exc)
    return refuted(kind, lower, cap, domain, budget)


def _search(g: Graph, domain: Tuple[int, ...], k: int, budget: SearchBudget, workers: int) -> Optional[Orientation]:
    search = OrientationSearch(g, domain, budget)
    if workers <= 1 or g.edge_count == 0:
        return search.witness() if search.run(k) else None

    remaining = None if budget.seconds is None else max(budget.seconds - budget.elapsed, 0.0)
    node_share = None if budget.max_nodes is None else max(budget.max_nodes - budget.nodes, 0)
    tasks = [(g, domain, k, choice, remaining, node_share) for choice in search.choices(0)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_solve_partition, tasks))

    budget.nodes += sum(r["nodes"] for r in results)
    for result in results:
        if result["found"]:
            return Orientation(g, result["heads"], result["weights"])
    exhausted = [r for r in results if "exhausted" in r]
    if exhausted:
        raise BudgetExhausted(exhausted[0]["exhausted"], budget.nodes)
    return None


def chi_s_brute(
    g: Graph,
    weight_domain: Iterable[int] = (1, 2),
    mu_cap: Optional[int] = None,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> SolveReport:
    """Semi-proper orientation number, searched up to ``mu_cap`` (default: maximum degree)."""
    return _deepen("chi_s_brute", g, tuple(weight_domain), mu_cap, budget, workers)


def chi_proper(
    g: Graph,
    mu_cap: Optional[int] = None,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> SolveReport:
    """Proper orientation number (all weights 1)."""
    return _deepen("chi_proper", g, (1,), mu_cap, budget, workers)
