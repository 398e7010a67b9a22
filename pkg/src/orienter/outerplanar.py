"""Semi-proper orientations with maximum in-weight at most 4 for ear-peelable graphs.

A 2-connected block is oriented from its ear decomposition: the base cycle
first, then every ear with a path gadget whose ends get in-weight 0. The
designated vertex ``s`` of the block ends with in-weight 0 and its neighbours
avoid the ``forbidden`` values, so blocks can be glued at cut vertices.
"""

import logging
from typing import FrozenSet, Iterable, List, Optional, Tuple

from core.graph import Graph, Orientation, OrientationBuilder
from decompose.blocks import Block
from decompose.classify import GraphClassTag, classify
from decompose.ears import Ear, EarDecomposition, EarPeelError, peel_ears
from gadgets.synthesis import GadgetSpec, synthesize
from orienter.cactus import build_cactus_orientation
from orienter.plan import (
    OrientationError,
    OrientPlan,
    TraceEntry,
    UnsupportedClassError,
    avoid_sets,
    ear_case,
    lay_gadget,
)

logger = logging.getLogger(__name__)

OUTERPLANAR_BOUND = 4

# Closed gadgets for the base cycle, cheapest first
_BASE_DOMAINS = (((1,), 2), ((1, 2), 4))


class BlockOrienter:
    """Orients one 2-connected block around its designated vertex."""

    def __init__(self, block: Graph, s: int, forbidden: Iterable[int] = (), block_index: int = 0):
        self.block = block
        self.s = s
        self.forbidden: FrozenSet[int] = frozenset(forbidden)
        if len(self.forbidden) > 1:
            raise ValueError(f"at most one forbidden in-weight is supported, got {sorted(self.forbidden)}")
        self.block_index = block_index
        self.builder = OrientationBuilder(block)
        self.trace: List[TraceEntry] = []

    def run(self) -> Tuple[Orientation, EarDecomposition, List[TraceEntry]]:
        try:
            decomposition = peel_ears(self.block, self.s)
        except EarPeelError as exc:
            raise UnsupportedClassError(f"block cannot be peeled around vertex {self.s}: {exc}") from exc
        self._orient_base(decomposition.base_cycle)
        for step, ear in enumerate(decomposition.ears, 1):
            self._orient_ear(step, ear)

        orientation = self.builder.build()
        self._check_contract(orientation)
        return orientation, decomposition, self.trace

    def _orient_base(self, cycle: Tuple[int, ...]):
        walk = list(cycle) + [cycle[0]]
        n = len(walk)
        gadget = None
        for domain, cap in _BASE_DOMAINS:
            spec = GadgetSpec.of(n, domain, cap, {0: 0, n - 1: 0}, {1: self.forbidden, n - 2: self.forbidden})
            gadget = synthesize(spec)
            if gadget is not None:
                break
        if gadget is None:
            raise OrientationError(f"base cycle of length {n - 1} cannot avoid {sorted(self.forbidden)}", self.trace)

        lay_gadget(self.builder, walk, gadget)
        self._record(0, "base:cycle", f"closed-{'unit' if gadget.spec.mu_cap == 2 else 'double'}", walk, (0, 0))

    def _orient_ear(self, step: int, ear: Ear):
        path = list(ear.path)
        ta, tb = self.builder.in_weight[path[0]], self.builder.in_weight[path[-1]]
        if ta > tb:
            path.reverse()
            ta, tb = tb, ta

        case = ear_case(len(path), ta, tb)
        label, gadget_name, gadget = case.label, case.gadget_name, case.gadget
        near_s = self.forbidden if path[0] == self.s else frozenset()
        profile = gadget.in_profile
        if profile[1] == ta or profile[-2] == tb or profile[1] in near_s:
            spec = GadgetSpec.of(len(path), (1, 2), OUTERPLANAR_BOUND, {0: 0, len(path) - 1: 0},
                                 avoid_sets(len(path), ta, tb, near_s))
            gadget = synthesize(spec)
            if gadget is None:
                raise OrientationError(f"ear {ear.path} has no gadget avoiding its end weights", self.trace)
            label, gadget_name = f"{label}+avoid", "synthesized"

        lay_gadget(self.builder, path, gadget)
        self._record(step, label, gadget_name, path, (ta, tb))

    def _check_contract(self, orientation: Orientation):
        if orientation.in_weight[self.s] != 0:
            raise OrientationError(f"designated vertex {self.s} has in-weight {orientation.in_weight[self.s]}", self.trace)
        clashes = [v for v in self.block.neighbors(self.s) if orientation.in_weight[v] in self.forbidden]
        if clashes:
            raise OrientationError(f"neighbours {clashes} of {self.s} carry a forbidden in-weight", self.trace)
        if orientation.mu > OUTERPLANAR_BOUND:
            raise OrientationError(f"block orientation reached in-weight {orientation.mu}", self.trace)

    def _record(self, step: int, label: str, gadget: str, path: List[int], weights: Tuple[int, int]):
        self.trace.append(
            TraceEntry(
                block=self.block_index,
                step=step,
                label=label,
                gadget=gadget,
                length=len(path),
                endpoints=(path[0], path[-1]),
                endpoint_weights=weights,
            )
        )
        logger.debug(f"Block {self.block_index} step {step}: {label} via {gadget}")


def build_block_orientation(
    b: Graph, s: int, forbidden: Iterable[int] = ()
) -> Tuple[Orientation, EarDecomposition, List[TraceEntry]]:
    return BlockOrienter(b, s, forbidden).run()


def orient_block(b: Graph, s: int, forbidden: Iterable[int] = ()) -> Orientation:
    """Orientation of a 2-connected ear-peelable block with in-weight at most 4.

    ``s`` gets in-weight 0 and none of its neighbours takes a value in
    ``forbidden`` (at most one value).
    """
    orientation, _, _ = build_block_orientation(b, s, forbidden)
    return orientation


class GraphOrienter:
    def __init__(self, g: Graph, cactus_first: bool = True):
        self.graph = g
        self.cactus_first = cactus_first
        self.graph_class = classify(g)
        if not self.graph_class.supported:
            raise UnsupportedClassError("graph has a block that is not ear-peelable", self.graph_class)
        self.forest = self.graph_class.forest
        self.builder = OrientationBuilder(g)
        self.plan = OrientPlan(
            graph_class=self.graph_class,
            roots=tuple(b.root for b in self.forest.blocks),
            construction="ear_peelable",
            bound=OUTERPLANAR_BOUND,
        )

    def run(self) -> Tuple[Orientation, OrientPlan]:
        if self.graph_class.tag is GraphClassTag.CACTUS and self.cactus_first:
            logger.debug("Cactus input, using the cactus construction")
            return build_cactus_orientation(self.graph)

        for index, block in enumerate(self.forest.blocks):
            if block.kind == "vertex":
                self.plan.designated.setdefault(block.component, block.vertices[0])
                continue
            if block.root is None:
                s = block.vertices[0]
                self.plan.designated[block.component] = s
                if block.kind == "bridge":
                    self.builder.orient(block.vertices[0], block.vertices[1], 1)
                    self._record_bridge(index, "root:bridge", block.vertices[0], block.vertices[1], None, 1)
                else:
                    self._attach_block(index, block, s, frozenset())
                continue

            s = block.root
            before = self.builder.in_weight[s]
            if block.kind == "bridge":
                v = block.vertices[0] if block.vertices[1] == s else block.vertices[1]
                weight = 2 if before == 1 else 1
                self.builder.orient(s, v, weight)
                self._record_bridge(index, "bridge:s1" if before == 1 else "bridge:s!1", s, v, before, weight)
            else:
                self._attach_block(index, block, s, frozenset({before}))
            if self.builder.in_weight[s] != before:
                raise OrientationError(f"attaching block {index} changed the in-weight of {s}", self.plan.trace)

        orientation = self.builder.build()
        if orientation.mu > OUTERPLANAR_BOUND:
            raise OrientationError(f"orientation reached in-weight {orientation.mu}", self.plan.trace)
        logger.info(f"Oriented {self.graph_class.tag.value} graph with {len(self.forest.blocks)} blocks, mu={orientation.mu}")
        return orientation, self.plan

    def _attach_block(self, index: int, block: Block, s: int, forbidden: FrozenSet[int]):
        local, vertex_map, edge_map = self.graph.subgraph(block.vertices)
        before = self.builder.in_weight[s]
        try:
            orientation, decomposition, entries = BlockOrienter(
                local, vertex_map.index(s), forbidden, index
            ).run()
        except OrientationError as exc:
            raise OrientationError(str(exc), self.plan.trace + exc.trace) from exc

        for j, (tail, head, weight) in enumerate(orientation.arcs()):
            placed = self.builder.orient(vertex_map[tail], vertex_map[head], weight)
            assert placed == edge_map[j]

        self.plan.decompositions[index] = _to_global(decomposition, vertex_map)
        for entry in entries:
            is_root = vertex_map[entry.endpoints[0]] == s and entry.step == 0
            self.plan.trace.append(
                TraceEntry(
                    block=entry.block,
                    step=entry.step,
                    label=entry.label,
                    gadget=entry.gadget,
                    length=entry.length,
                    endpoints=tuple(vertex_map[v] for v in entry.endpoints),
                    endpoint_weights=entry.endpoint_weights,
                    root_before=before if is_root else None,
                    root_after=self.builder.in_weight[s] if is_root else None,
                )
            )

    def _record_bridge(self, index: int, label: str, tail: int, head: int, before: Optional[int], weight: int):
        self.plan.trace.append(
            TraceEntry(
                block=index,
                step=0,
                label=label,
                gadget=f"edge-weight-{weight}",
                length=2,
                endpoints=(tail, head),
                endpoint_weights=() if before is None else (before,),
                root_before=before,
                root_after=before,
            )
        )


def _to_global(decomposition: EarDecomposition, vertex_map: Tuple[int, ...]) -> EarDecomposition:
    return EarDecomposition(
        base_cycle=tuple(vertex_map[v] for v in decomposition.base_cycle),
        ears=tuple(
            Ear(tuple(vertex_map[v] for v in ear.path), tuple(vertex_map[v] for v in ear.active_pair))
            for ear in decomposition.ears
        ),
        designated=None if decomposition.designated is None else vertex_map[decomposition.designated],
    )


CONSTRUCTIONS = ("auto", "cactus", "ear_peelable")


def build_graph_orientation(g: Graph, construction: str = "auto") -> Tuple[Orientation, OrientPlan]:
    """Orientation plus its plan.

    ``auto`` sends cacti to the cactus construction; ``cactus`` and
    ``ear_peelable`` force one construction.
    """
    if construction == "cactus":
        return build_cactus_orientation(g)
    if construction not in CONSTRUCTIONS:
        raise ValueError(f"unknown construction {construction!r}, expected one of {CONSTRUCTIONS}")
    return GraphOrienter(g, cactus_first=construction == "auto").run()


def orient_graph(g: Graph) -> Orientation:
    """Semi-proper orientation with weights in {1, 2} and in-weight at most 4.

    Cacti go through the cactus construction and stay within 3.
    """
    orientation, _ = build_graph_orientation(g)
    return orientation
