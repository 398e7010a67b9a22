"""Named in-weight profiles used by the orienters.

Every fixture fixes both path ends to in-weight 0. Profiles listed as
``{position: in-weight}`` are 0-indexed; ``edge_weights`` pins the weight of
path edge ``i`` (between positions ``i`` and ``i + 1``).

Names read ``<domain>:<inner in-weights>``, where ``unit`` allows weight 1
only and ``double`` allows weights 1 and 2; ``..`` stands for the free middle
of a long path.
"""

from typing import Dict, List, Tuple

from gadgets.synthesis import GadgetSpec

UNIT = {"weight_domain": (1,), "mu_cap": 2}
DOUBLE = {"weight_domain": (1, 2), "mu_cap": 4}

# Families defined for every path of at least seven vertices
_LONG_PATHS = {
    "unit:2..02": lambda n: {1: 2, n - 3: 0, n - 2: 2},
    "unit:12..021": lambda n: {1: 1, 2: 2, n - 4: 0, n - 3: 2, n - 2: 1},
    "unit:1..02": lambda n: {1: 1, n - 3: 0, n - 2: 2},
}

_FIXED: Dict[str, Tuple[int, Dict[int, int], Dict[int, int], Dict]] = {
    "unit:2012": (6, {1: 2, 2: 0, 3: 1, 4: 2}, {}, UNIT),
    "unit:1202": (6, {1: 1, 2: 2, 3: 0, 4: 2}, {}, UNIT),
    "unit:121": (5, {1: 1, 2: 2, 3: 1}, {}, UNIT),
    "unit:202": (5, {1: 2, 2: 0, 3: 2}, {}, UNIT),
    "unit:12": (4, {1: 1, 2: 2}, {}, UNIT),
    "double:2": (3, {1: 2}, {0: 1, 1: 1}, DOUBLE),
    "double:3": (3, {1: 3}, {0: 2, 1: 1}, DOUBLE),
    "double:4": (3, {1: 4}, {0: 2, 1: 2}, DOUBLE),
    "double:23": (4, {1: 2, 2: 3}, {0: 2, 1: 1, 2: 2}, DOUBLE),
    "double:13": (4, {1: 1, 2: 3}, {0: 1, 1: 2, 2: 1}, DOUBLE),
    "double:203": (5, {1: 2, 2: 0, 3: 3}, {0: 1, 1: 1, 2: 1, 3: 2}, DOUBLE),
    "double:1321": (6, {1: 1, 2: 3, 3: 2, 4: 1}, {0: 1, 1: 2, 2: 1, 3: 2, 4: 1}, DOUBLE),
}

FIXTURE_NAMES: Tuple[str, ...] = tuple(_LONG_PATHS) + tuple(_FIXED)


def _with_ends(length: int, inner: Dict[int, int]) -> Dict[int, int]:
    return {0: 0, length - 1: 0, **inner}


def long_path_spec(name: str, n: int) -> GadgetSpec:
    """Spec of a long-path profile ("unit:2..02", "unit:12..021" or "unit:1..02") on ``n`` vertices."""
    if name not in _LONG_PATHS:
        raise KeyError(f"{name!r} is not a long-path profile")
    if n < 7:
        raise ValueError(f"{name} needs at least 7 vertices, got {n}")
    return GadgetSpec.of(n, constraints=_with_ends(n, _LONG_PATHS[name](n)), **UNIT)


def fixture_spec(name: str, n: int = 7) -> GadgetSpec:
    if name in _LONG_PATHS:
        return long_path_spec(name, n)
    length, profile, edge_weights, domain = _FIXED[name]
    return GadgetSpec.of(length, constraints=_with_ends(length, profile), edge_weights=edge_weights, **domain)


def lemma_fixtures(n: int = 7) -> List[Tuple[str, GadgetSpec]]:
    """All named profiles, long-path families instantiated at ``n`` vertices."""
    return [(name, fixture_spec(name, n)) for name in FIXTURE_NAMES]
