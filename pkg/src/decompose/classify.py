import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from core.graph import Graph
from decompose.blocks import BlockForest, block_forest
from decompose.ears import is_ear_peelable

logger = logging.getLogger(__name__)


class GraphClassTag(str, Enum):
    CACTUS = "cactus"
    EAR_PEELABLE = "ear_peelable"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class BlockDetail:
    index: int
    order: int
    size: int
    kind: str
    peelable: bool
    root: Optional[int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "order": self.order,
            "size": self.size,
            "kind": self.kind,
            "peelable": self.peelable,
            "root": self.root,
        }


@dataclass(frozen=True)
class GraphClass:
    tag: GraphClassTag
    blocks: Tuple[BlockDetail, ...]
    forest: BlockForest

    @property
    def supported(self) -> bool:
        return self.tag is not GraphClassTag.UNSUPPORTED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "class": self.tag.value,
            "block_count": len(self.blocks),
            "cut_vertices": sorted(self.forest.cut_vertices),
            "blocks": [b.to_dict() for b in self.blocks],
        }


def classify(g: Graph) -> GraphClass:
    """Tag a graph as cactus, ear_peelable or unsupported from its blocks.

    This reports block structure only; it does not certify planarity.
    """
    forest = block_forest(g)
    details = []
    for index, block in enumerate(forest.blocks):
        kind = block.kind
        if kind == "biconnected":
            local, _, _ = g.subgraph(block.vertices)
            peelable = is_ear_peelable(local)
        else:
            peelable = True
        details.append(BlockDetail(index, block.order, len(block.edges), kind, peelable, block.root))

    if all(d.kind in ("vertex", "bridge", "cycle") for d in details):
        tag = GraphClassTag.CACTUS
    elif all(d.peelable for d in details):
        tag = GraphClassTag.EAR_PEELABLE
    else:
        tag = GraphClassTag.UNSUPPORTED

    logger.debug(f"Classified graph with {len(details)} blocks as {tag.value}")
    return GraphClass(tag, tuple(details), forest)
