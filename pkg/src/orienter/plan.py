"""Orientation plans, trace records and the case tables of the constructions."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from core.graph import OrientationBuilder
from decompose.classify import GraphClass
from decompose.ears import EarDecomposition
from gadgets.fixtures import fixture_spec
from gadgets.synthesis import Gadget, reverse, synthesize

logger = logging.getLogger(__name__)


class UnsupportedClassError(ValueError):
    """The graph is neither a cactus nor ear-peelable (or not the class a routine expects)."""

    def __init__(self, message: str, graph_class: Optional[GraphClass] = None):
        super().__init__(message)
        self.graph_class = graph_class


class OrientationError(RuntimeError):
    """A construction step could not meet its constraints; carries the trace so far."""

    def __init__(self, message: str, trace: Optional[List["TraceEntry"]] = None):
        super().__init__(message)
        self.trace = list(trace or [])


@dataclass(frozen=True)
class TraceEntry:
    block: int
    step: int
    label: str
    gadget: str
    length: int
    endpoints: Tuple[int, ...]
    endpoint_weights: Tuple[int, ...]
    root_before: Optional[int] = None
    root_after: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "block": self.block,
            "step": self.step,
            "label": self.label,
            "gadget": self.gadget,
            "length": self.length,
            "endpoints": list(self.endpoints),
            "endpoint_weights": list(self.endpoint_weights),
            "root_before": self.root_before,
            "root_after": self.root_after,
        }


@dataclass
class OrientPlan:
    graph_class: GraphClass
    roots: Tuple[Optional[int], ...]
    decompositions: Dict[int, EarDecomposition] = field(default_factory=dict)
    designated: Dict[int, int] = field(default_factory=dict)
    trace: List[TraceEntry] = field(default_factory=list)
    construction: str = "cactus"
    bound: int = 3

    def labels(self) -> List[str]:
        return [entry.label for entry in self.trace]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "class": self.graph_class.tag.value,
            "construction": self.construction,
            "bound": self.bound,
            "roots": list(self.roots),
            "designated": {str(c): v for c, v in sorted(self.designated.items())},
            "trace": [entry.to_dict() for entry in self.trace],
        }


@dataclass(frozen=True)
class CaseChoice:
    label: str
    gadget_name: str
    gadget: Gadget


def _named(name: str, n: int = 7, reversed_: bool = False) -> Tuple[str, Gadget]:
    spec = fixture_spec(name, n)
    gadget = synthesize(spec)
    if gadget is None:
        raise OrientationError(f"profile {name} has no realisation on {spec.length} vertices")
    if reversed_:
        return f"{name}:reversed", reverse(gadget)
    return name, gadget


def cactus_cycle_case(cycle_length: int, root_weight: int) -> CaseChoice:
    """Gadget for a cycle attached at a root of in-weight ``root_weight``.

    The path runs root, cycle vertices, root; both ends get in-weight 0.
    """
    n = cycle_length + 1
    if cycle_length == 3:
        if root_weight == 1:
            return CaseChoice("C3:s1", *_named("double:23"))
        if root_weight == 2:
            return CaseChoice("C3:s2", *_named("double:13"))
        return CaseChoice("C3:s03", *_named("unit:12"))
    if cycle_length == 4:
        if root_weight == 1:
            return CaseChoice("C4:s1", *_named("unit:202"))
        return CaseChoice("C4:s!1", *_named("unit:121"))
    if cycle_length == 5:
        if root_weight == 2:
            return CaseChoice("C5:s2", *_named("double:1321"))
        return CaseChoice("C5:s!2", *_named("unit:2012"))
    if root_weight == 1:
        return CaseChoice("C6+:s1", *_named("unit:2..02", n))
    return CaseChoice("C6+:s!1", *_named("unit:12..021", n))


def ear_case(path_length: int, ta: int, tb: int) -> CaseChoice:
    """Gadget for an ear of ``path_length`` vertices whose ends carry ``ta < tb``."""
    ends = {ta, tb}
    if path_length == 3:
        if ends == {2, 3}:
            return CaseChoice("P3:23", *_named("double:4"))
        if 2 not in ends:
            return CaseChoice("P3:no2", *_named("double:2"))
        return CaseChoice("P3:no3", *_named("double:3"))
    if path_length == 5:
        if ends == {1, 2}:
            return CaseChoice("P5:12", *_named("double:203"))
        if 1 not in ends:
            return CaseChoice("P5:no1", *_named("unit:121"))
        return CaseChoice("P5:no2", *_named("unit:202"))

    swap = ta == 1 or tb == 2
    if path_length == 4:
        prefix, name = "P4", "unit:12"
    elif path_length == 6:
        prefix, name = "P6", "unit:1202"
    else:
        prefix, name = "P7+", "unit:1..02"
    if swap:
        return CaseChoice(f"{prefix}:a1|b2", *_named(name, path_length, reversed_=True))
    return CaseChoice(f"{prefix}:other", *_named(name, path_length))


def avoid_sets(path_length: int, ta: int, tb: int, forbidden: FrozenSet[int]) -> Dict[int, FrozenSet[int]]:
    first, last = 1, path_length - 2
    if first == last:
        return {first: frozenset({ta, tb}) | forbidden}
    return {first: frozenset({ta}) | forbidden, last: frozenset({tb})}


def lay_gadget(builder: OrientationBuilder, path: Sequence[int], gadget: Gadget):
    """Orient the edges of ``path`` (global vertices) as ``gadget`` prescribes."""
    if len(path) != gadget.spec.length:
        raise OrientationError(f"gadget on {gadget.spec.length} vertices laid on a path of {len(path)}")
    for i, (forward, weight) in enumerate(gadget.choices):
        u, v = path[i], path[i + 1]
        if forward:
            builder.orient(u, v, weight)
        else:
            builder.orient(v, u, weight)


def cycle_through(adjacency: Dict[int, List[int]], start: int) -> List[int]:
    """Closed walk ``start, ..., start`` around a cycle, leaving via the lower neighbour."""
    walk = [start]
    prev, cur = start, min(adjacency[start])
    while cur != start:
        walk.append(cur)
        a, b = adjacency[cur]
        prev, cur = cur, (b if a == prev else a)
    walk.append(start)
    return walk
