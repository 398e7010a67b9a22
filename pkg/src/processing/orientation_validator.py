import logging
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.graph import Arc, Graph, Orientation
from processing.graph_parser import StructuralMismatchError

logger = logging.getLogger(__name__)

Violation = Dict[str, Any]


class OrientationValidator:
    """Checks a weighted orientation against the semi-proper conditions.

    The checks recompute in-weights from the raw arcs and never consult the
    derived fields of :class:`Orientation` or any orienter code.
    """

    def __init__(self):
        self.validation_rules = self._initialize_validation_rules()

    def _initialize_validation_rules(self) -> Dict[str, Callable[..., List[Violation]]]:
        return {
            "positive_weights": self._validate_positive_weights,
            "distinct_in_weights": self._validate_distinct_in_weights,
            "mu_bound": self._validate_mu_bound,
            "weight_domain": self._validate_weight_domain,
        }

    def validate_orientation(
        self,
        g: Graph,
        o: Orientation,
        mu_bound: Optional[int] = None,
        weight_domain: Optional[Iterable[int]] = None,
        claimed_in_weight: Optional[Sequence[int]] = None,
    ) -> Dict[str, Any]:
        if o.graph != g:
            raise StructuralMismatchError("orientation was built over a different graph")
        claimed = o.in_weight if claimed_in_weight is None else claimed_in_weight
        return self.validate_arcs(g, list(o.arcs()), mu_bound, weight_domain, claimed)

    def validate_arcs(
        self,
        g: Graph,
        arcs: Sequence[Arc],
        mu_bound: Optional[int] = None,
        weight_domain: Optional[Iterable[int]] = None,
        claimed_in_weight: Optional[Sequence[int]] = None,
    ) -> Dict[str, Any]:
        """Validate ``(tail, head, weight)`` arcs given in ``g``'s edge order."""
        self._check_structure(g, arcs)

        in_weight = self._recompute_in_weights(g, arcs)
        context = {
            "graph": g,
            "arcs": arcs,
            "in_weight": in_weight,
            "mu_bound": mu_bound,
            "weight_domain": None if weight_domain is None else frozenset(weight_domain),
        }

        validation_results: Dict[str, Any] = {
            "is_valid": True,
            "errors": [],
            "warnings": [],
            "violations": [],
            "mu": int(in_weight.max()) if len(in_weight) else 0,
            "in_weight": [int(x) for x in in_weight],
        }

        if claimed_in_weight is not None:
            claimed = [int(x) for x in claimed_in_weight]
            if claimed != validation_results["in_weight"]:
                bad = [v for v, (a, b) in enumerate(zip(claimed, validation_results["in_weight"])) if a != b]
                validation_results["violations"].append(
                    {"rule": "in_weight_recomputed", "vertices": bad}
                )

        for rule, check in self.validation_rules.items():
            for violation in check(**context):
                violation["rule"] = rule
                validation_results["violations"].append(violation)

        for violation in validation_results["violations"]:
            validation_results["errors"].append(self._describe(violation))

        if validation_results["violations"]:
            validation_results["is_valid"] = False
            logger.debug(f"Orientation rejected with {len(validation_results['violations'])} violations")
        if mu_bound is None:
            validation_results["warnings"].append("no mu bound requested")

        return validation_results

    def _check_structure(self, g: Graph, arcs: Sequence[Arc]):
        if len(arcs) != g.edge_count:
            raise StructuralMismatchError(f"{len(arcs)} arcs given for {g.edge_count} edges")
        for index, ((tail, head, _), (u, v)) in enumerate(zip(arcs, g.edges)):
            if {tail, head} != {u, v}:
                raise StructuralMismatchError(f"arc {index} {tail}->{head} is not on edge ({u}, {v})")

    def _recompute_in_weights(self, g: Graph, arcs: Sequence[Arc]) -> np.ndarray:
        if not arcs:
            return np.zeros(g.vertex_count, dtype=np.int64)
        heads = np.fromiter((head for _, head, _ in arcs), dtype=np.int64, count=len(arcs))
        weights = np.fromiter((w for _, _, w in arcs), dtype=np.int64, count=len(arcs))
        return np.bincount(heads, weights=weights, minlength=g.vertex_count).astype(np.int64)

    def _validate_positive_weights(self, arcs: Sequence[Arc], **_) -> List[Violation]:
        return [
            {"edge": index, "weight": int(w)}
            for index, (_, _, w) in enumerate(arcs)
            if w < 1
        ]

    def _validate_distinct_in_weights(self, graph: Graph, in_weight: np.ndarray, **_) -> List[Violation]:
        if graph.edge_count == 0:
            return []
        ends = np.asarray(graph.edges, dtype=np.int64)
        clashes = np.nonzero(in_weight[ends[:, 0]] == in_weight[ends[:, 1]])[0]
        return [
            {"edge": int(i), "endpoints": [int(ends[i, 0]), int(ends[i, 1])], "in_weight": int(in_weight[ends[i, 0]])}
            for i in clashes
        ]

    def _validate_mu_bound(self, in_weight: np.ndarray, mu_bound: Optional[int], **_) -> List[Violation]:
        if mu_bound is None:
            return []
        return [
            {"vertex": int(v), "in_weight": int(in_weight[v]), "bound": mu_bound}
            for v in np.nonzero(in_weight > mu_bound)[0]
        ]

    def _validate_weight_domain(self, arcs: Sequence[Arc], weight_domain: Optional[frozenset], **_) -> List[Violation]:
        if weight_domain is None:
            return []
        return [
            {"edge": index, "weight": int(w), "domain": sorted(weight_domain)}
            for index, (_, _, w) in enumerate(arcs)
            if w not in weight_domain
        ]

    def _describe(self, violation: Violation) -> str:
        rule = violation["rule"]
        if rule == "distinct_in_weights":
            u, v = violation["endpoints"]
            return f"edge {violation['edge']} ({u}, {v}): both endpoints have in-weight {violation['in_weight']}"
        if rule == "mu_bound":
            return f"vertex {violation['vertex']}: in-weight {violation['in_weight']} exceeds {violation['bound']}"
        if rule == "weight_domain":
            return f"edge {violation['edge']}: weight {violation['weight']} outside {violation['domain']}"
        if rule == "positive_weights":
            return f"edge {violation['edge']}: weight {violation['weight']} is not positive"
        return f"vertices {violation['vertices']}: stored in-weight differs from recomputed value"


_validator = OrientationValidator()


def validate(
    g: Graph,
    o: Orientation,
    mu_bound: Optional[int] = None,
    weight_domain: Optional[Iterable[int]] = None,
) -> Dict[str, Any]:
    return _validator.validate_orientation(g, o, mu_bound, weight_domain)


def validate_arcs(
    g: Graph,
    arcs: Sequence[Tuple[int, int, int]],
    mu_bound: Optional[int] = None,
    weight_domain: Optional[Iterable[int]] = None,
) -> Dict[str, Any]:
    return _validator.validate_arcs(g, arcs, mu_bound, weight_domain)
