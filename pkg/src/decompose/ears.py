"""Ear decompositions of 2-connected blocks by reverse peeling.

A block is peeled by repeatedly removing a maximal chain of degree-2
vertices whose two attachment vertices are adjacent. When the residual graph
is a cycle, that cycle is the base cycle and the peeled chains, read in
reverse, are the ears.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from core.graph import Graph
from config.settings import defaults

logger = logging.getLogger(__name__)


class EarPeelError(ValueError):
    """The block cannot be peeled down to a cycle (with the requested vertex kept)."""


@dataclass(frozen=True)
class Ear:
    path: Tuple[int, ...]
    active_pair: Tuple[int, int]

    @property
    def internal(self) -> Tuple[int, ...]:
        return self.path[1:-1]


@dataclass(frozen=True)
class EarDecomposition:
    base_cycle: Tuple[int, ...]
    ears: Tuple[Ear, ...]
    designated: Optional[int] = None

    def replay(self) -> Tuple[FrozenSet[int], FrozenSet[Tuple[int, int]]]:
        """Rebuild vertex and edge sets from the base cycle and ears, checking ear rules."""
        vertices: Set[int] = set(self.base_cycle)
        edges: Set[Tuple[int, int]] = set()
        cycle = self.base_cycle
        for i, v in enumerate(cycle):
            u = cycle[(i + 1) % len(cycle)]
            edges.add((min(u, v), max(u, v)))

        for ear in self.ears:
            a, b = ear.active_pair
            if a not in vertices or b not in vertices:
                raise EarPeelError(f"ear {ear.path} attaches outside the current graph")
            if (min(a, b), max(a, b)) not in edges:
                raise EarPeelError(f"ear {ear.path} attaches to a non-adjacent pair")
            if len(ear.path) < 3 or vertices.intersection(ear.internal):
                raise EarPeelError(f"ear {ear.path} has no fresh internal vertex")
            vertices.update(ear.internal)
            for u, v in zip(ear.path, ear.path[1:]):
                edges.add((min(u, v), max(u, v)))

        return frozenset(vertices), frozenset(edges)


@dataclass(frozen=True)
class _Chain:
    path: Tuple[int, ...]

    @property
    def internal(self) -> Tuple[int, ...]:
        return self.path[1:-1]


class _Residual:
    def __init__(self, block: Graph):
        self.adj: Dict[int, Set[int]] = {v: set(block.neighbors(v)) for v in block.vertices()}
        self.irregular = sum(1 for nb in self.adj.values() if len(nb) != 2)

    def is_cycle(self) -> bool:
        return self.irregular == 0

    def key(self) -> FrozenSet[int]:
        return frozenset(self.adj)

    def _degree_changed(self, v: int, before: int):
        after = len(self.adj[v])
        self.irregular += (after != 2) - (before != 2)

    def remove(self, chain: _Chain):
        x, y = chain.path[0], chain.path[-1]
        dx, dy = len(self.adj[x]), len(self.adj[y])
        for u in chain.internal:
            for nb in self.adj.pop(u):
                if nb in self.adj:
                    self.adj[nb].discard(u)
        self._degree_changed(x, dx)
        self._degree_changed(y, dy)

    def restore(self, chain: _Chain):
        x, y = chain.path[0], chain.path[-1]
        dx, dy = len(self.adj[x]), len(self.adj[y])
        path = chain.path
        for i in range(1, len(path) - 1):
            self.adj[path[i]] = {path[i - 1], path[i + 1]}
        self.adj[x].add(path[1])
        self.adj[y].add(path[-2])
        self._degree_changed(x, dx)
        self._degree_changed(y, dy)

    def chains(self, protect: Optional[int]) -> List[_Chain]:
        """Peelable chains, latest vertex first.

        Newer vertices carry higher indices, so generated graphs peel in
        reverse construction order.
        """
        found: List[_Chain] = []
        seen: Set[int] = set()
        for v in sorted((u for u, nb in self.adj.items() if len(nb) == 2), reverse=True):
            if v in seen:
                continue
            left, right = sorted(self.adj[v])
            left_run, x = self._walk(v, left)
            right_run, y = self._walk(v, right)
            internal = tuple(reversed(left_run)) + (v,) + tuple(right_run)
            seen.update(internal)
            if x == y or y not in self.adj[x]:
                continue
            if protect is not None and protect in internal:
                continue
            found.append(_Chain((x,) + internal + (y,)))
        return found

    def _walk(self, start: int, first: int) -> Tuple[List[int], int]:
        run: List[int] = []
        prev, cur = start, first
        while len(self.adj[cur]) == 2 and cur != start:
            run.append(cur)
            a, b = self.adj[cur]
            prev, cur = cur, (b if a == prev else a)
        return run, cur

    def cycle_from(self, start: int) -> Tuple[int, ...]:
        order = [start]
        prev, cur = start, min(self.adj[start])
        while cur != start:
            order.append(cur)
            a, b = self.adj[cur]
            prev, cur = cur, (b if a == prev else a)
        return tuple(order)


def peel_ears(block: Graph, s: Optional[int] = None, max_states: Optional[int] = None) -> EarDecomposition:
    """Ear decomposition of a 2-connected block, with ``s`` on the base cycle when given.

    Chains containing ``s`` are never peeled. When the greedy order gets stuck,
    other chain orders are retried with memoised dead ends, up to
    ``max_states`` peel steps.
    """
    if block.vertex_count < 3:
        raise EarPeelError(f"blocks of order {block.vertex_count} have no ear decomposition")
    if s is not None and not 0 <= s < block.vertex_count:
        raise EarPeelError(f"designated vertex {s} is not in the block")
    if not nx.is_biconnected(block.to_networkx()):
        raise EarPeelError("block is not 2-connected")

    limit = defaults.search.peel_max_states if max_states is None else max_states
    residual = _Residual(block)
    peeled: List[_Chain] = []
    failed: Set[FrozenSet[int]] = set()
    candidates: List[List[_Chain]] = [residual.chains(s)]
    cursors: List[int] = [0]
    steps = 0

    while not residual.is_cycle():
        if not candidates:
            raise EarPeelError("no peeling order reduces the block to a cycle")
        options, i = candidates[-1], cursors[-1]
        if i >= len(options):
            failed.add(residual.key())
            candidates.pop()
            cursors.pop()
            if peeled:
                residual.restore(peeled.pop())
            continue
        cursors[-1] += 1
        chain = options[i]
        residual.remove(chain)
        if failed and residual.key() in failed:
            residual.restore(chain)
            continue
        peeled.append(chain)
        steps += 1
        if steps > limit:
            raise EarPeelError(f"peeling gave up after {limit} steps")
        candidates.append(residual.chains(s))
        cursors.append(0)

    start = s if s is not None else min(residual.adj)
    base = residual.cycle_from(start)
    ears = tuple(Ear(c.path, (c.path[0], c.path[-1])) for c in reversed(peeled))
    logger.debug(f"Peeled {len(ears)} ears, base cycle of length {len(base)}")
    return EarDecomposition(base, ears, s)


def is_ear_peelable(block: Graph) -> bool:
    try:
        peel_ears(block)
    except EarPeelError:
        return False
    return True
