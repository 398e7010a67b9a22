"""Path orientations with prescribed in-weights ("gadgets").

A gadget orients the path ``p0 - p1 - ... - p(n-1)``. Edge ``i`` joins
``p(i)`` and ``p(i+1)``; its choice is ``(forward, weight)`` where forward
means the arc points to ``p(i+1)``. Positions are 0-indexed.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from core.graph import Graph, Orientation

logger = logging.getLogger(__name__)

Choice = Tuple[bool, int]


@dataclass(frozen=True)
class GadgetSpec:
    length: int
    weight_domain: Tuple[int, ...]
    mu_cap: int
    constraints: Tuple[Tuple[int, int], ...] = ()
    avoid: Tuple[Tuple[int, FrozenSet[int]], ...] = ()
    edge_weights: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.length < 2:
            raise ValueError(f"gadgets need at least 2 vertices, got {self.length}")
        if not self.weight_domain or min(self.weight_domain) < 1:
            raise ValueError(f"weight domain must be positive integers, got {self.weight_domain}")
        for pos, value in self.constraints:
            if not 0 <= pos < self.length:
                raise ValueError(f"constrained position {pos} outside path of {self.length}")
            if value > self.mu_cap:
                raise ValueError(f"required in-weight {value} at {pos} exceeds cap {self.mu_cap}")
            if value in self.avoid_map.get(pos, frozenset()):
                raise ValueError(f"position {pos} both requires and avoids {value}")
        for pos, _ in self.avoid:
            if not 0 <= pos < self.length:
                raise ValueError(f"avoided position {pos} outside path of {self.length}")
        for edge, weight in self.edge_weights:
            if not 0 <= edge < self.length - 1:
                raise ValueError(f"edge {edge} outside path of {self.length}")
            if weight not in self.weight_domain:
                raise ValueError(f"required weight {weight} on edge {edge} is outside the domain")

    @classmethod
    def of(
        cls,
        length: int,
        weight_domain: Iterable[int] = (1, 2),
        mu_cap: int = 4,
        constraints: Optional[Mapping[int, int]] = None,
        avoid: Optional[Mapping[int, Iterable[int]]] = None,
        edge_weights: Optional[Mapping[int, int]] = None,
    ) -> "GadgetSpec":
        avoid_sets = {p: frozenset(vals) for p, vals in (avoid or {}).items() if vals}
        return cls(
            length=length,
            weight_domain=tuple(sorted(set(weight_domain))),
            mu_cap=mu_cap,
            constraints=tuple(sorted((constraints or {}).items())),
            avoid=tuple(sorted(avoid_sets.items())),
            edge_weights=tuple(sorted((edge_weights or {}).items())),
        )

    @property
    def constraint_map(self) -> Dict[int, int]:
        return dict(self.constraints)

    @property
    def avoid_map(self) -> Dict[int, FrozenSet[int]]:
        return dict(self.avoid)

    @property
    def edge_weight_map(self) -> Dict[int, int]:
        return dict(self.edge_weights)

    def allows(self, pos: int, value: int) -> bool:
        if value > self.mu_cap:
            return False
        required = self.constraint_map.get(pos)
        if required is not None and value != required:
            return False
        return value not in self.avoid_map.get(pos, frozenset())

    def reversed(self) -> "GadgetSpec":
        last = self.length - 1
        return GadgetSpec.of(
            self.length,
            self.weight_domain,
            self.mu_cap,
            {last - p: v for p, v in self.constraints},
            {last - p: vals for p, vals in self.avoid},
            {last - 1 - e: w for e, w in self.edge_weights},
        )


@dataclass(frozen=True)
class Gadget:
    spec: GadgetSpec
    choices: Tuple[Choice, ...]
    in_profile: Tuple[int, ...]

    def head(self, edge: int) -> int:
        forward, _ = self.choices[edge]
        return edge + 1 if forward else edge

    def weight(self, edge: int) -> int:
        return self.choices[edge][1]

    def to_orientation(self) -> Orientation:
        path = Graph(self.spec.length, tuple((i, i + 1) for i in range(self.spec.length - 1)))
        return Orientation(
            path,
            tuple(self.head(i) for i in range(len(self.choices))),
            tuple(w for _, w in self.choices),
        )


def profile_of(length: int, choices: Tuple[Choice, ...]) -> Tuple[int, ...]:
    profile = [0] * length
    for i, (forward, weight) in enumerate(choices):
        profile[i + 1 if forward else i] += weight
    return tuple(profile)


def _edge_choices(spec: GadgetSpec, edge: int) -> List[Choice]:
    required = spec.edge_weight_map.get(edge)
    return [
        (forward, w)
        for forward in (True, False)
        for w in spec.weight_domain
        if required is None or w == required
    ]


def synthesize(spec: GadgetSpec, method: str = "dp") -> Optional[Gadget]:
    """Lexicographically smallest gadget meeting ``spec``, or None if none exists.

    Both methods are exhaustive; ``"enumerate"`` walks every assignment and
    is only practical for short paths.
    """
    if method == "dp":
        return _synthesize_dp(spec)
    if method == "enumerate":
        return _synthesize_enumerate(spec)
    raise ValueError(f"unknown synthesis method {method!r}")


@lru_cache(maxsize=4096)
def _synthesize_dp(spec: GadgetSpec) -> Optional[Gadget]:
    n = spec.length
    carries = sorted({0, *spec.weight_domain})
    previous_values = [None, *range(spec.mu_cap + 1)]

    # good[i]: states (final in-weight of p(i-1), carry into p(i)) that can be completed
    good: List[Set[Tuple[Optional[int], int]]] = [set() for _ in range(n)]
    good[n - 1] = {
        (prev, carry)
        for prev in previous_values
        for carry in carries
        if spec.allows(n - 1, carry) and carry != prev
    }
    for i in range(n - 2, -1, -1):
        options = _edge_choices(spec, i)
        for prev in previous_values:
            for carry in carries:
                for forward, w in options:
                    t = carry + (0 if forward else w)
                    if spec.allows(i, t) and t != prev and (t, w if forward else 0) in good[i + 1]:
                        good[i].add((prev, carry))
                        break

    state: Tuple[Optional[int], int] = (None, 0)
    if state not in good[0]:
        logger.debug(f"No gadget for {spec}")
        return None

    choices: List[Choice] = []
    for i in range(n - 1):
        prev, carry = state
        for forward, w in _edge_choices(spec, i):
            t = carry + (0 if forward else w)
            nxt = (t, w if forward else 0)
            if spec.allows(i, t) and t != prev and nxt in good[i + 1]:
                choices.append((forward, w))
                state = nxt
                break

    chosen = tuple(choices)
    return Gadget(spec, chosen, profile_of(n, chosen))


def _synthesize_enumerate(spec: GadgetSpec) -> Optional[Gadget]:
    per_edge = [_edge_choices(spec, i) for i in range(spec.length - 1)]
    for choices in itertools.product(*per_edge):
        profile = profile_of(spec.length, choices)
        if all(spec.allows(p, v) for p, v in enumerate(profile)) and all(
            a != b for a, b in zip(profile, profile[1:])
        ):
            return Gadget(spec, tuple(choices), profile)
    return None


def reverse(g: Gadget) -> Gadget:
    """The same gadget read from the other end of the path."""
    choices = tuple((not forward, w) for forward, w in reversed(g.choices))
    return Gadget(g.spec.reversed(), choices, tuple(reversed(g.in_profile)))
