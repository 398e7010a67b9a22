import logging
from typing import List, Set, Tuple

import networkx as nx

from core.graph import Graph

logger = logging.getLogger(__name__)


def clique_number(g: Graph) -> int:
    """Size of a largest clique (0 for the graph with no vertices)."""
    if g.vertex_count == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(g.to_networkx()))


def greedy_dsatur(g: Graph) -> List[int]:
    colors = [-1] * g.vertex_count
    seen: List[Set[int]] = [set() for _ in g.vertices()]
    uncolored = set(g.vertices())
    while uncolored:
        v = max(uncolored, key=lambda u: (len(seen[u]), g.degree(u), -u))
        c = 0
        while c in seen[v]:
            c += 1
        colors[v] = c
        uncolored.remove(v)
        for u in g.neighbors(v):
            seen[u].add(c)
    return colors


def chromatic_number(g: Graph) -> Tuple[int, List[int]]:
    """Exact chromatic number with an optimal coloring, by DSATUR backtracking."""
    if g.vertex_count == 0:
        return 0, []

    best = greedy_dsatur(g)
    best_k = max(best) + 1
    floor = clique_number(g)
    if best_k == floor:
        return best_k, best

    colors = [-1] * g.vertex_count
    seen: List[Set[int]] = [set() for _ in g.vertices()]

    def pick() -> int:
        uncolored = [v for v in g.vertices() if colors[v] == -1]
        if not uncolored:
            return -1
        return max(uncolored, key=lambda u: (len(seen[u]), g.degree(u), -u))

    def backtrack(used: int):
        nonlocal best, best_k
        if best_k == floor:
            return
        v = pick()
        if v == -1:
            if used < best_k:
                best_k, best = used, colors[:]
            return
        for c in range(min(used + 1, best_k - 1)):
            if c in seen[v]:
                continue
            colors[v] = c
            added = [u for u in g.neighbors(v) if colors[u] == -1 and c not in seen[u]]
            for u in added:
                seen[u].add(c)
            backtrack(max(used, c + 1))
            colors[v] = -1
            for u in added:
                seen[u].discard(c)

    backtrack(0)
    logger.debug(f"Chromatic number {best_k} (clique number {floor})")
    return best_k, best
