"""Blocks, cut vertices and the DFS ordering of the block tree."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from core.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Block:
    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]
    component: int
    root: Optional[int]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def kind(self) -> str:
        if self.order == 1:
            return "vertex"
        if self.order == 2:
            return "bridge"
        if len(self.edges) == self.order:
            return "cycle"
        return "biconnected"


@dataclass(frozen=True)
class BlockForest:
    """Blocks listed in a DFS order of the block tree, one tree per component.

    ``blocks[i].root`` is the cut vertex attaching block ``i`` to an earlier
    block of the same component, or ``None`` for the first block of a component.
    """

    graph: Graph
    blocks: Tuple[Block, ...]
    cut_vertices: frozenset

    @property
    def order(self) -> Tuple[int, ...]:
        return tuple(range(len(self.blocks)))

    def root(self, index: int) -> Optional[int]:
        return self.blocks[index].root


def block_forest(g: Graph) -> BlockForest:
    nxg = g.to_networkx()
    cut_vertices = frozenset(nx.articulation_points(nxg))

    # Raw blocks keyed by sorted edge indices for a deterministic order
    raw: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []
    for component_edges in nx.biconnected_component_edges(nxg):
        indices = tuple(sorted(g.edge_index(u, v) for u, v in component_edges))
        vertices = tuple(sorted({x for i in indices for x in g.edges[i]}))
        raw.append((vertices, indices))
    raw.sort(key=lambda item: item[1][0])

    blocks_at: Dict[int, List[int]] = {}
    for position, (vertices, _) in enumerate(raw):
        for v in vertices:
            blocks_at.setdefault(v, []).append(position)

    ordered: List[Block] = []
    visited: Set[int] = set()
    component = 0
    for start in range(g.vertex_count):
        if start in blocks_at:
            first = blocks_at[start][0]
            if first in visited:
                continue
            _visit_block_tree(first, raw, blocks_at, component, visited, ordered)
            component += 1
        elif g.degree(start) == 0:
            ordered.append(Block((start,), (), component, None))
            component += 1

    logger.debug(
        f"Block forest: {len(ordered)} blocks, {len(cut_vertices)} cut vertices, {component} components"
    )
    return BlockForest(g, tuple(ordered), cut_vertices)


def _visit_block_tree(
    first: int,
    raw: List[Tuple[Tuple[int, ...], Tuple[int, ...]]],
    blocks_at: Dict[int, List[int]],
    component: int,
    visited: Set[int],
    ordered: List[Block],
):
    # Iterative DFS over the block tree: block -> its cut vertices -> child blocks
    visited.add(first)
    ordered.append(Block(raw[first][0], raw[first][1], component, None))
    stack = [(first, iter(raw[first][0]))]
    while stack:
        position, vertex_iter = stack[-1]
        advanced = False
        for v in vertex_iter:
            children = [b for b in blocks_at[v] if b not in visited]
            if not children:
                continue
            child = children[0]
            visited.add(child)
            ordered.append(Block(raw[child][0], raw[child][1], component, v))
            # Re-enter v after the child subtree: it may carry more blocks
            stack[-1] = (position, _chain_first(v, vertex_iter))
            stack.append((child, iter([x for x in raw[child][0] if x != v])))
            advanced = True
            break
        if not advanced:
            stack.pop()


def _chain_first(v: int, rest):
    yield v
    yield from rest
