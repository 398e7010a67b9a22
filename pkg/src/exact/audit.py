import logging
from typing import Any, Dict, Optional

from pydantic import BaseModel

from config.settings import defaults
from core.graph import Graph, max_degree
from exact.brute import chi_proper, chi_s_brute
from exact.coloring import chromatic_number, clique_number
from exact.search import BudgetExhausted, SearchBudget, SolverInputError

logger = logging.getLogger(__name__)


class InequalityChainError(AssertionError):
    """clique - 1 <= chromatic - 1 <= semi-proper <= proper <= max degree failed."""


class AuditReport(BaseModel):
    clique_minus_one: int
    chromatic_minus_one: int
    chi_s: int
    chi_proper: int
    max_degree: int
    holds: bool

    def chain(self):
        return (self.clique_minus_one, self.chromatic_minus_one, self.chi_s, self.chi_proper, self.max_degree)

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump()


def inequality_audit(g: Graph, budget: Optional[SearchBudget] = None) -> AuditReport:
    """Compute the five quantities of the orientation inequality chain and check it."""
    search = defaults.search
    if g.vertex_count == 0:
        raise SolverInputError("audit needs at least one vertex")
    if g.vertex_count > search.audit_max_vertices or g.edge_count > search.audit_max_edges:
        raise SolverInputError(
            f"audit accepts n <= {search.audit_max_vertices} and m <= {search.audit_max_edges}, "
            f"got n={g.vertex_count}, m={g.edge_count}"
        )

    budget = budget or SearchBudget()
    semi = chi_s_brute(g, budget=budget)
    proper = chi_proper(g, budget=budget) if semi.conclusive else semi
    if not proper.conclusive:
        raise BudgetExhausted(f"audit search ran out of budget: {proper.certificate}", budget.nodes)

    chromatic, _ = chromatic_number(g)
    values = (clique_number(g) - 1, chromatic - 1, semi.value, proper.value, max_degree(g))
    holds = all(a <= b for a, b in zip(values, values[1:]))
    report = AuditReport(
        clique_minus_one=values[0],
        chromatic_minus_one=values[1],
        chi_s=values[2],
        chi_proper=values[3],
        max_degree=values[4],
        holds=holds,
    )
    if not holds:
        raise InequalityChainError(f"inequality chain broken: {values}")
    logger.info(f"Audit chain {values} holds")
    return report
