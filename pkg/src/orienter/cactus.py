"""Semi-proper orientations of cacti with maximum in-weight at most 3.

Blocks are attached in block-tree DFS order. Each block is oriented so that
its root keeps its in-weight and the root's new neighbours differ from it.
"""

import logging
from typing import Dict, List, Optional, Tuple

from core.graph import Graph, Orientation, OrientationBuilder
from decompose.blocks import Block
from decompose.classify import GraphClassTag, classify
from gadgets.synthesis import GadgetSpec, synthesize
from orienter.plan import (
    OrientationError,
    OrientPlan,
    TraceEntry,
    UnsupportedClassError,
    cactus_cycle_case,
    cycle_through,
    lay_gadget,
)

logger = logging.getLogger(__name__)

CACTUS_BOUND = 3


def block_adjacency(g: Graph, block: Block) -> Dict[int, List[int]]:
    adjacency: Dict[int, List[int]] = {v: [] for v in block.vertices}
    for index in block.edges:
        u, v = g.edges[index]
        adjacency[u].append(v)
        adjacency[v].append(u)
    return adjacency


def closed_unit_gadget(cycle_length: int):
    """All-weight-1 orientation of a cycle, read as a closed path, with the start at 0."""
    n = cycle_length + 1
    return synthesize(GadgetSpec.of(n, (1,), 2, {0: 0, n - 1: 0}))


class CactusOrienter:
    def __init__(self, g: Graph):
        self.graph = g
        self.graph_class = classify(g)
        if self.graph_class.tag is not GraphClassTag.CACTUS:
            raise UnsupportedClassError(
                f"expected a cactus, got {self.graph_class.tag.value}", self.graph_class
            )
        self.forest = self.graph_class.forest
        self.builder = OrientationBuilder(g)
        self.plan = OrientPlan(
            graph_class=self.graph_class,
            roots=tuple(b.root for b in self.forest.blocks),
            construction="cactus",
            bound=CACTUS_BOUND,
        )

    def run(self) -> Tuple[Orientation, OrientPlan]:
        for index, block in enumerate(self.forest.blocks):
            if block.kind == "vertex":
                self.plan.designated.setdefault(block.component, block.vertices[0])
                continue
            if block.root is None:
                self._orient_first_block(index, block)
            else:
                self._attach_block(index, block)

        orientation = self.builder.build()
        if orientation.mu > CACTUS_BOUND:
            raise OrientationError(
                f"cactus orientation reached in-weight {orientation.mu}", self.plan.trace
            )
        logger.info(f"Oriented cactus with {len(self.forest.blocks)} blocks, mu={orientation.mu}")
        return orientation, self.plan

    def _orient_first_block(self, index: int, block: Block):
        start = block.vertices[0]
        self.plan.designated[block.component] = start
        if block.kind == "bridge":
            u, v = block.vertices
            self.builder.orient(u, v, 1)
            self._record(index, "root:bridge", "unit-edge", 2, (u, v), None)
            return

        walk = cycle_through(block_adjacency(self.graph, block), start)
        gadget = closed_unit_gadget(len(walk) - 1)
        if gadget is None:
            raise OrientationError(f"no closed orientation of a {len(walk) - 1}-cycle", self.plan.trace)
        lay_gadget(self.builder, walk, gadget)
        self._record(index, "root:cycle", "closed-unit", len(walk), (start, start), None)

    def _attach_block(self, index: int, block: Block):
        s = block.root
        before = self.builder.in_weight[s]
        if block.kind == "bridge":
            v = block.vertices[0] if block.vertices[1] == s else block.vertices[1]
            weight = 2 if before == 1 else 1
            self.builder.orient(s, v, weight)
            label = "bridge:s1" if before == 1 else "bridge:s!1"
            self._record(index, label, f"edge-weight-{weight}", 2, (s, v), before)
        else:
            walk = cycle_through(block_adjacency(self.graph, block), s)
            case = cactus_cycle_case(len(walk) - 1, before)
            lay_gadget(self.builder, walk, case.gadget)
            self._record(index, case.label, case.gadget_name, len(walk), (s, s), before)

        after = self.builder.in_weight[s]
        if after != before:
            raise OrientationError(f"attaching block {index} moved root {s} from {before} to {after}", self.plan.trace)

    def _record(self, index: int, label: str, gadget: str, length: int, endpoints, before: Optional[int]):
        after = None if before is None else self.builder.in_weight[endpoints[0]]
        entry = TraceEntry(
            block=index,
            step=0,
            label=label,
            gadget=gadget,
            length=length,
            endpoints=tuple(endpoints),
            endpoint_weights=() if before is None else (before,),
            root_before=before,
            root_after=after,
        )
        self.plan.trace.append(entry)
        logger.debug(f"Block {index}: {label} via {gadget}")


def build_cactus_orientation(g: Graph) -> Tuple[Orientation, OrientPlan]:
    return CactusOrienter(g).run()


def orient_cactus(g: Graph) -> Orientation:
    """Semi-proper orientation of a cactus with weights in {1, 2} and in-weight at most 3."""
    orientation, _ = build_cactus_orientation(g)
    return orientation
