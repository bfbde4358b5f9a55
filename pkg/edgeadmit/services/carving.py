import logging
from collections.abc import Iterable

from edgeadmit.exceptions.carving import CarvingError, ThetaImmersionError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.carving import RefutationWitness, RootedCarving
from edgeadmit.schemas.structure import ImmersionWitness
from edgeadmit.services.cuts import CutService
from edgeadmit.services.structure import StructureService

logger = logging.getLogger(__name__)


class CarvingService:
    """Carvings that separate candidate hide-out vertices with cuts of size at most k."""

    def __init__(self, cut_service: CutService, structure_service: StructureService):
        self.cut_service = cut_service
        self.structure_service = structure_service

    def build_carving(self, graph: MultiGraph, k: int, candidates: Iterable[int]) -> RootedCarving:
        """
        Splits leaves holding two or more candidates until each holds one.

        The leaf to split is the lowest such leaf and its two lowest candidates
        are separated by a minimum cut of G, intersected with the leaf's class.

        Raises:
            CarvingError: If fewer than two candidates are given.
            ThetaImmersionError: If G immerses theta_{k+1}.
        """
        candidate_set = graph.require_vertices(candidates)
        if len(candidate_set) < 2:
            raise CarvingError(f"need at least two candidate vertices, got {len(candidate_set)}")
        verdict = self.structure_service.theta_free(graph, k)
        if isinstance(verdict, ImmersionWitness):
            raise ThetaImmersionError(witness=verdict)

        children: dict[int, tuple[int, int]] = {}
        classes: dict[int, set[int]] = {0: set(graph.vertices)}
        while True:
            leaf = next(
                (node for node in sorted(classes) if node not in children and len(classes[node] & candidate_set) >= 2),
                None,
            )
            if leaf is None:
                break
            first, second = sorted(classes[leaf] & candidate_set)[:2]
            cut = self.cut_service.min_cut_partition(graph, first, second)
            side = set(cut.side)
            left, right = max(classes) + 1, max(classes) + 2
            classes[left] = classes[leaf] & side
            classes[right] = classes[leaf] - side
            children[leaf] = (left, right)
            logger.debug("🔄 Split leaf %s by a %s-edge cut between %s and %s", leaf, cut.size, first, second)

        assignment = {vertex: node for node, members in classes.items() if node not in children for vertex in members}
        carving = self._weighted(graph, children, assignment)
        logger.info("✅ Carving with %s leaves built for %s candidates", len(carving.leaves), len(candidate_set))
        return carving

    def light_leaf_path(self, carving: RootedCarving, k: int) -> tuple[int, tuple[int, ...]]:
        """
        Descends from the root keeping every tree-edge weight at most 2k - 1.

        Below the first edge, the edges leaving the current node split by the
        child they touch; the walk enters the first child receiving at most
        k - 1 of them.

        Raises:
            CarvingError: If k < 1 or some node weight exceeds k.
        """
        if k < 1:
            raise CarvingError(f"k must be at least 1, got {k}")
        heavy = sorted(node for node, weight in carving.node_weights.items() if weight > k)
        if heavy:
            raise CarvingError(f"nodes {heavy} have weight above {k}")

        graph = carving.graph
        path = [carving.root]
        node = carving.root
        if node in carving.children:
            node = carving.children[node][0]
            path.append(node)
        while node in carving.children:
            leaving = graph.edge_boundary(carving.descendant_vertices(node))
            chosen = None
            for child in carving.children[node]:
                below = carving.descendant_vertices(child)
                touching = [e for e in leaving if set(graph.endpoints(e)) & below]
                if len(touching) <= k - 1:
                    chosen = child
                    break
            if chosen is None:
                raise CarvingError(f"edge weight above node {node} exceeds {2 * k - 1}")
            node = chosen
            path.append(node)
        return node, tuple(path)

    def refute_hideout(self, graph: MultiGraph, k: int, candidates: Iterable[int]) -> RefutationWitness:
        """
        Finds a candidate cut off from the other candidates by at most 2k - 1 edges.

        Works for any candidate set of a theta_{k+1}-free graph, so no such set
        is a (2k, inf)-hide-out.
        """
        candidate_set = frozenset(candidates)
        carving = self.build_carving(graph, k, candidate_set)
        leaf, path = self.light_leaf_path(carving, k)
        members = set(carving.leaf_vertices(leaf))
        vertex = min(members & candidate_set)
        carving_edges = graph.edge_boundary(members)

        direct = self.cut_service.supp(graph, None, vertex, candidate_set - {vertex})
        edges = direct.edges if direct.size < len(carving_edges) else carving_edges
        logger.info(
            "✅ Candidate %s is cut off by %s edges (carving bound %s)", vertex, len(edges), len(carving_edges)
        )
        return RefutationWitness(
            vertex=vertex,
            candidates=tuple(sorted(candidate_set)),
            edges=tuple(sorted(edges)),
            carving_edges=tuple(sorted(carving_edges)),
            leaf=leaf,
            path=path,
            carving=carving,
        )

    def audit_weights(self, carving: RootedCarving) -> bool:
        """Recomputes node and edge weights from the assignment."""
        recomputed = self._weighted(carving.graph, carving.children, carving.assignment)
        return (
            recomputed.node_weights == carving.node_weights
            and recomputed.edge_weights == carving.edge_weights
        )

    @staticmethod
    def _weighted(graph: MultiGraph, children: dict[int, tuple[int, int]], assignment: dict[int, int]) -> RootedCarving:
        draft = RootedCarving(
            root=0, children=children, assignment=assignment, node_weights={}, edge_weights={}, graph=graph
        )
        node_weights = {}
        edge_weights = {}
        for node, (left, right) in children.items():
            node_weights[node] = len(
                graph.edges_between(draft.descendant_vertices(left), draft.descendant_vertices(right))
            )
            for child in (left, right):
                edge_weights[child] = len(graph.edge_boundary(draft.descendant_vertices(child)))
        return draft.model_copy(update={'node_weights': node_weights, 'edge_weights': edge_weights})
