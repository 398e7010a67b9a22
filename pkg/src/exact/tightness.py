import logging
from itertools import combinations
from typing import Any, Dict, List, Mapping, Optional, Sequence

from pydantic import BaseModel

from core.graph import Orientation

logger = logging.getLogger(__name__)


class TightnessReport(BaseModel):
    class_sizes: List[int]
    total_in_weight: int
    edge_count: int
    weight_two_arcs: int
    transversal_classes: Optional[bool] = None

    @property
    def sum_identity_holds(self) -> bool:
        return self.total_in_weight == self.edge_count + self.weight_two_arcs

    def to_dict(self) -> Dict[str, Any]:
        data = self.model_dump()
        data["sum_identity_holds"] = self.sum_identity_holds
        return data


def _meets_every_triangle_once(o: Orientation, classes: Mapping[str, Sequence[int]]) -> bool:
    g = o.graph
    label = {}
    for name, members in classes.items():
        for v in members:
            label[v] = name
    for u in g.vertices():
        for v, w in combinations([x for x in g.neighbors(u) if x > u], 2):
            if g.has_edge(v, w) and len({label.get(u), label.get(v), label.get(w)} - {None}) != 3:
                return False
    return True


def tightness_report(o: Orientation, classes: Optional[Mapping[str, Sequence[int]]] = None) -> TightnessReport:
    """In-weight class sizes, total in-weight and weight-2 arcs of an orientation.

    With ``classes`` (e.g. the A/B/C coloring of a universal outerplanar graph)
    also checks that each class meets every triangle exactly once.
    """
    bad = [i for i, w in enumerate(o.weights) if w not in (1, 2)]
    if bad:
        raise ValueError(f"arc {bad[0]} has weight {o.weights[bad[0]]}; only 1 and 2 are allowed")

    sizes = [0] * max(o.mu + 1, 5)
    for t in o.in_weight:
        sizes[t] += 1
    report = TightnessReport(
        class_sizes=sizes,
        total_in_weight=sum(o.in_weight),
        edge_count=o.graph.edge_count,
        weight_two_arcs=o.weight_two_count(),
        transversal_classes=None if classes is None else _meets_every_triangle_once(o, classes),
    )
    logger.debug(f"Tightness: classes {sizes}, S={report.total_in_weight}")
    return report
