"""Budgets and result reports shared by the exact solvers."""

import logging
import time
from typing import Any, Dict, List, Literal, Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from config.settings import defaults
from core.graph import Graph, Orientation

logger = logging.getLogger(__name__)


class BudgetExhausted(RuntimeError):
    """Search ran past its node or wall-clock budget."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


class SolverInputError(ValueError):
    """Instance is outside the size a solver accepts."""


class SearchBudget:
    """Node and wall-clock limits, checked by ``tick`` once per search node."""

    def __init__(self, seconds: Optional[float] = None, nodes: Optional[int] = None):
        self.seconds = defaults.search.budget_seconds if seconds is None else seconds
        self.max_nodes = defaults.search.budget_nodes if nodes is None else nodes
        self.nodes = 0
        self.started = time.monotonic()

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhausted(f"node budget of {self.max_nodes} exhausted", self.nodes)
        # Clock checked every 1024 nodes
        if self.seconds is not None and self.nodes % 1024 == 0 and self.elapsed > self.seconds:
            raise BudgetExhausted(f"time budget of {self.seconds}s exhausted", self.nodes)


SolverKind = Literal["chi_s_brute", "chi_s_labeling", "chi_proper"]


class SolveReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: SolverKind
    value: Optional[int] = None
    certificate: Optional[str] = None
    lower_bound: int = 0
    mu_cap: int
    weight_domain: List[int]
    nodes: int = 0
    elapsed: float = 0.0
    budget_exhausted: bool = False
    arcs: Optional[List[List[int]]] = None
    witness: Optional[Orientation] = Field(default=None, exclude=True)

    @property
    def conclusive(self) -> bool:
        return not self.budget_exhausted

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        data = self.model_dump(exclude=None if timing else {"elapsed"})
        return data


def witness_arcs(o: Orientation) -> List[List[int]]:
    return [[tail, head, weight] for tail, head, weight in o.arcs()]


def solved(kind: SolverKind, value: int, witness: Orientation, lower_bound: int, mu_cap: int,
           weight_domain, budget: SearchBudget) -> SolveReport:
    return SolveReport(
        kind=kind,
        value=value,
        lower_bound=lower_bound,
        mu_cap=mu_cap,
        weight_domain=sorted(weight_domain),
        nodes=budget.nodes,
        elapsed=budget.elapsed,
        arcs=witness_arcs(witness),
        witness=witness,
    )


def refuted(kind: SolverKind, lower_bound: int, mu_cap: int, weight_domain, budget: SearchBudget) -> SolveReport:
    return SolveReport(
        kind=kind,
        certificate=f"no semi-proper orientation with mu <= {mu_cap}",
        lower_bound=lower_bound,
        mu_cap=mu_cap,
        weight_domain=sorted(weight_domain),
        nodes=budget.nodes,
        elapsed=budget.elapsed,
    )


def inconclusive(kind: SolverKind, lower_bound: int, mu_cap: int, weight_domain, budget: SearchBudget,
                 reason: BudgetExhausted) -> SolveReport:
    logger.warning(f"{kind} stopped after {reason.nodes} nodes: {reason}")
    return SolveReport(
        kind=kind,
        certificate=f"inconclusive: {reason}",
        lower_bound=lower_bound,
        mu_cap=mu_cap,
        weight_domain=sorted(weight_domain),
        nodes=reason.nodes,
        elapsed=budget.elapsed,
        budget_exhausted=True,
    )


def trivial_lower_bound(g: Graph) -> int:
    return 1 if g.edge_count else 0


def completion_order(g: Graph) -> List[int]:
    """Vertices in DFS preorder, component by component from the lowest label."""
    nxg = g.to_networkx()
    order: List[int] = []
    seen = set()
    for start in g.vertices():
        if start in seen:
            continue
        component = list(nx.dfs_preorder_nodes(nxg, start))
        seen.update(component)
        order.extend(component)
    return order
