"""Seeded graph families: universal outerplanar graphs, cacti, triangulated polygons and friends.

Every random family draws from ``numpy.random.Generator(PCG64(seed))`` so a
spec always reproduces the same edge list.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from config.settings import defaults
from core.graph import Edge, Graph

logger = logging.getLogger(__name__)

MAX_SEED = 2**64


class GeneratorError(ValueError):
    """Unknown family or parameters outside the family's range."""


class GeneratorSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    params: Dict[str, float] = Field(default_factory=dict)
    seed: int = Field(default=defaults.generators.seed, ge=0, lt=MAX_SEED)

    @field_validator("family")
    @classmethod
    def _normalise_family(cls, value: str) -> str:
        family = value.strip().lower().replace("-", "_")
        if family not in FAMILIES:
            raise ValueError(f"unknown family {value!r}; choose from {', '.join(sorted(FAMILIES))}")
        return family

    @classmethod
    def of(cls, family: str, seed: int = 0, **params: float) -> "GeneratorSpec":
        try:
            return cls(family=family, params=params, seed=seed)
        except ValidationError as exc:
            raise GeneratorError(str(exc)) from exc


@dataclass(frozen=True)
class GeneratedGraph:
    graph: Graph
    metadata: Dict[str, Any]


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _int_param(params: Dict[str, float], name: str, default: int, low: int, high: int = 1 << 20) -> int:
    value = params.get(name, default)
    if value is None or int(value) != value:
        raise GeneratorError(f"parameter {name} must be an integer, got {value}")
    value = int(value)
    if not low <= value <= high:
        raise GeneratorError(f"parameter {name}={value} outside [{low}, {high}]")
    return value


def uop(k: int) -> Tuple[Graph, Dict[str, Any]]:
    """Triangle with a 2-edge ear on every outer edge, repeated ``k - 1`` times.

    ``outervertices`` are the vertices added by the last round (the triangle
    itself for ``k = 1``).
    """
    classes = {0: "A", 1: "B", 2: "C"}
    edges: List[Edge] = [(0, 1), (1, 2), (0, 2)]
    outer: List[Edge] = [(0, 1), (1, 2), (2, 0)]
    newest: List[int] = [0, 1, 2]
    ears: List[List[int]] = []
    n = 3
    for _ in range(k - 1):
        grown: List[Edge] = []
        newest = []
        for x, y in outer:
            z = n
            n += 1
            classes[z] = ({"A", "B", "C"} - {classes[x], classes[y]}).pop()
            edges.extend([(x, z), (z, y)])
            ears.append([x, z, y])
            grown.extend([(x, z), (z, y)])
            newest.append(z)
        outer = grown

    metadata = {
        "outervertices": newest,
        "outeredges": [list(e) for e in outer],
        "classes": {c: sorted(v for v, name in classes.items() if name == c) for c in "ABC"},
        "ear_order": ears,
    }
    return Graph(n, tuple(edges)), metadata


def cactus_tight() -> Tuple[Graph, Dict[str, Any]]:
    """Two triangles joined by a bridge: a cactus that needs in-weight 3."""
    edges = ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5))
    return Graph(6, edges), {}


def random_cactus(rng: np.random.Generator, blocks: int, max_cycle: int, edge_probability: float):
    edges: List[Edge] = []
    n = 1
    kinds: List[int] = []
    for _ in range(blocks):
        root = int(rng.integers(n))
        if rng.random() < edge_probability:
            edges.append((root, n))
            n += 1
            kinds.append(2)
            continue
        length = int(rng.integers(3, max_cycle + 1))
        ring = [root] + list(range(n, n + length - 1))
        edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
        n += length - 1
        kinds.append(length)
    return Graph(n, tuple(edges)), {"block_sizes": kinds}


def random_maximal_outerplanar(rng: np.random.Generator, n: int):
    """Triangles stacked on randomly chosen outer edges, then labels shuffled."""
    edges: List[Edge] = [(0, 1), (1, 2), (0, 2)]
    outer: List[Edge] = [(0, 1), (1, 2), (2, 0)]
    for v in range(3, n):
        i = int(rng.integers(len(outer)))
        x, y = outer[i]
        edges.extend([(x, v), (v, y)])
        outer[i: i + 1] = [(x, v), (v, y)]
    relabel = [int(x) for x in rng.permutation(n)]
    graph = Graph(n, tuple((relabel[u], relabel[v]) for u, v in edges))
    return graph, {"outer_cycle": [relabel[x] for x, _ in outer]}


def random_graph(rng: np.random.Generator, n: int, m: int):
    pairs = list(itertools.combinations(range(n), 2))
    if m > len(pairs):
        raise GeneratorError(f"{n} vertices hold at most {len(pairs)} edges, asked for {m}")
    chosen = sorted(int(i) for i in rng.choice(len(pairs), size=m, replace=False))
    return Graph(n, tuple(pairs[i] for i in chosen)), {}


def random_tree(rng: np.random.Generator, n: int):
    edges = tuple((int(rng.integers(v)), v) for v in range(1, n))
    return Graph(n, edges), {}


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def book(p: int) -> Graph:
    """Triangle 0-1-2 plus ``p - 1`` more vertices joined to both 0 and 1."""
    edges: List[Edge] = [(0, 1), (1, 2), (0, 2)]
    for v in range(3, p + 2):
        edges.extend([(0, v), (v, 1)])
    return Graph(p + 2, tuple(edges))


def _build_uop(spec: GeneratorSpec, rng):
    return uop(_int_param(spec.params, "k", 1, 1, 16))


def _build_random_cactus(spec: GeneratorSpec, rng):
    g = defaults.generators
    probability = float(spec.params.get("edge_probability", g.cactus_edge_probability))
    if not 0.0 <= probability <= 1.0:
        raise GeneratorError(f"edge_probability={probability} outside [0, 1]")
    return random_cactus(
        rng,
        _int_param(spec.params, "blocks", g.cactus_blocks, 0),
        _int_param(spec.params, "max_cycle", g.cactus_max_cycle, 3),
        probability,
    )


def _build_random_graph(spec: GeneratorSpec, rng):
    n = _int_param(spec.params, "n", 8, 0)
    return random_graph(rng, n, _int_param(spec.params, "m", n, 0))


FAMILIES: Dict[str, Callable[[GeneratorSpec, np.random.Generator], Tuple[Graph, Dict[str, Any]]]] = {
    "uop": _build_uop,
    "cactus_tight": lambda spec, rng: cactus_tight(),
    "random_cactus": _build_random_cactus,
    "random_maximal_outerplanar": lambda spec, rng: random_maximal_outerplanar(
        rng, _int_param(spec.params, "n", defaults.generators.outerplanar_vertices, 3)
    ),
    "random_graph": _build_random_graph,
    "random_tree": lambda spec, rng: random_tree(
        rng, _int_param(spec.params, "n", defaults.generators.tree_vertices, 1)
    ),
    "cycle": lambda spec, rng: (cycle(_int_param(spec.params, "n", 3, 3)), {}),
    "path": lambda spec, rng: (path(_int_param(spec.params, "n", 2, 1)), {}),
    "complete": lambda spec, rng: (complete(_int_param(spec.params, "n", 3, 1)), {}),
    "star": lambda spec, rng: (star(_int_param(spec.params, "leaves", 3, 0)), {}),
    "book": lambda spec, rng: (book(_int_param(spec.params, "p", 2, 1)), {}),
}


def generate(spec: GeneratorSpec) -> GeneratedGraph:
    """Build the graph of ``spec``; the same spec always gives the same graph."""
    graph, extra = FAMILIES[spec.family](spec, _rng(spec.seed))
    metadata = {
        "family": spec.family,
        "params": {k: (int(v) if float(v).is_integer() else v) for k, v in sorted(spec.params.items())},
        "seed": spec.seed,
        "prng": defaults.generators.prng,
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
        **extra,
    }
    logger.debug(f"Generated {spec.family} with {graph.vertex_count} vertices and {graph.edge_count} edges")
    return GeneratedGraph(graph, metadata)


def generate_family(family: str, seed: int = 0, **params: float) -> GeneratedGraph:
    return generate(GeneratorSpec.of(family, seed, **params))
