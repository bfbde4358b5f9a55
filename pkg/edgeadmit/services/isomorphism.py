import logging

import networkx as nx

from edgeadmit.exceptions.graph import IsomorphismBudgetError
from edgeadmit.models.multigraph import MultiGraph

logger = logging.getLogger(__name__)


class IsomorphismService:
    """Exact multigraph isomorphism for small graphs."""

    def __init__(self, vertex_limit: int):
        self.vertex_limit = vertex_limit

    def is_isomorphic_small(self, first: MultiGraph, second: MultiGraph) -> bool:
        """
        Checks for a vertex bijection preserving every edge multiplicity.

        Raises:
            IsomorphismBudgetError: If either graph has more vertices than the limit.
        """
        for graph in (first, second):
            if graph.number_of_vertices() > self.vertex_limit:
                raise IsomorphismBudgetError(vertex_count=graph.number_of_vertices(), limit=self.vertex_limit)
        if first == second:
            return True

        if (
            first.number_of_vertices() != second.number_of_vertices()
            or first.number_of_edges() != second.number_of_edges()
        ):
            return False
        degrees = sorted(first.degree(v) for v in first.vertices)
        if degrees != sorted(second.degree(v) for v in second.vertices):
            return False

        result = nx.is_isomorphic(
            self._weighted(first),
            self._weighted(second),
            edge_match=lambda a, b: a["multiplicity"] == b["multiplicity"],
        )
        logger.debug("🔍 Isomorphism check n=%s m=%s: %s", first.number_of_vertices(), first.number_of_edges(), result)
        return result

    @staticmethod
    def _weighted(graph: MultiGraph) -> nx.Graph:
        simple = nx.Graph()
        simple.add_nodes_from(graph.vertices)
        for (u, v), ids in graph.parallel_classes().items():
            simple.add_edge(u, v, multiplicity=len(ids))
        return simple
