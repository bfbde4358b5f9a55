import logging
from collections.abc import Iterable, Iterator, Mapping

import networkx as nx

from edgeadmit.exceptions.graph import GraphOperationError
from edgeadmit.exceptions.structure import (
    DecompositionError,
    EdgeSumError,
    PartitionError,
    RecomposeError,
)
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.graph import VertexMergeMap
from edgeadmit.schemas.structure import (
    DecompStep,
    EdgeSumResult,
    EdgeSumSpec,
    FreeCertificate,
    ImmersionWitness,
    PairCut,
    SatelliteInfo,
    Torso,
    TreePartition,
)
from edgeadmit.utils.trees import subtree_nodes
from edgeadmit.services.cuts import CutService

logger = logging.getLogger(__name__)


class DecompState:
    """
    Mutable tree-partition refined towards one high-degree vertex per bag.

    A vertex is high when its degree exceeds k. The partition stays k-tight:
    every tree edge is crossed by at most k edges and every bag keeps at
    least one high vertex. `anchor` is the overloaded node being separated
    and `side` the cut currently separating it; recorded steps report the
    status of `anchor` and the cost of `side` after the step.
    """

    def __init__(self, graph: MultiGraph, k: int):
        self.graph = graph
        self.k = k
        self.high = frozenset(v for v in graph.vertices if graph.degree(v) > k)
        self.tree = nx.Graph()
        self.tree.add_node(0)
        self.bags: dict[int, set[int]] = {0: set(graph.vertices)}
        self.anchor = 0
        self.side: set[int] = set()
        self.steps: list[DecompStep] = []

    def weight(self) -> int:
        return sum(len(bag & self.high) - 1 for bag in self.bags.values())

    def status(self, node: int) -> int:
        """Sum of the tree distances from `node` to every tree node."""
        return sum(nx.single_source_shortest_path_length(self.tree, node).values())

    def high_in(self, node: int) -> list[int]:
        return sorted(self.bags[node] & self.high)

    def overloaded_node(self) -> int | None:
        return next((node for node in sorted(self.bags) if len(self.bags[node] & self.high) >= 2), None)

    def subtree(self, node: int, parent: int) -> set[int]:
        return subtree_nodes(self.tree, node, parent)

    def union(self, nodes: Iterable[int]) -> set[int]:
        vertices: set[int] = set()
        for node in nodes:
            vertices |= self.bags[node]
        return vertices

    def post_order(self, root: int) -> list[tuple[int, int]]:
        """Tree edges (parent, child) rooted at `root`, children before parents."""
        return [
            (parent, child)
            for parent, child, kind in nx.dfs_labeled_edges(self.tree, root, sort_neighbors=sorted)
            if kind == 'reverse' and parent != child
        ]

    def crossed_edges(self, root: int, side: set[int]) -> Iterator[tuple[int, int, set[int]]]:
        """Tree edges whose far side meets both `side` and its complement, in post-order from `root`."""
        for parent, child in self.post_order(root):
            far = self.union(self.subtree(child, parent))
            if far & side and far - side:
                yield parent, child, far

    def deepest_crossed_edge(self, root: int, side: set[int]) -> tuple[int, int, set[int]] | None:
        return next(self.crossed_edges(root, side), None)

    def extr(self, root: int, side: set[int]) -> list[tuple[int, int]]:
        """Crossed tree edges (parent, child) with no other crossed edge below them."""
        crossed = [(parent, child) for parent, child, _ in self.crossed_edges(root, side)]
        extremal = []
        for parent, child in crossed:
            below = self.subtree(child, parent)
            if not any(other in below for other, _ in crossed):
                extremal.append((parent, child))
        return extremal

    def cost(self, root: int, side: set[int]) -> int:
        """Sum over the extremal edges of the tree distance from `root` to their far end."""
        return sum(nx.shortest_path_length(self.tree, root, child) for _, child in self.extr(root, side))

    def split(self, node: int, side: set[int]) -> int:
        """
        Splits `node` along `side`; no component of T minus `node` may cross it.

        The new node takes the bag part inside `side` and the components
        lying in `side`; it is attached to `node`.
        """
        new_node = max(self.tree.nodes) + 1
        moving = [n for n in sorted(self.tree[node]) if self.union(self.subtree(n, node)) <= side]
        self.bags[new_node] = self.bags[node] & side
        self.bags[node] -= side
        self.tree.add_edge(node, new_node)
        for neighbor in moving:
            self.tree.remove_edge(node, neighbor)
            self.tree.add_edge(neighbor, new_node)
        self.record('split', node, f"new node {new_node}, moved components {moving}")
        return new_node

    def reattach(self, parent: int, child: int, keep: set[int]) -> None:
        """
        Moves the part of the child's bag outside `keep` into the parent's bag
        and re-hangs the child's subtrees that lie outside `keep` on the parent.
        """
        moved = self.bags[child] - keep
        self.bags[child] -= moved
        self.bags[parent] |= moved
        rehung = [
            n for n in sorted(set(self.tree[child]) - {parent})
            if not self.union(self.subtree(n, child)) & keep
        ]
        for neighbor in rehung:
            self.tree.remove_edge(child, neighbor)
            self.tree.add_edge(neighbor, parent)
        self.record('reattach', child, f"moved {sorted(moved)} to {parent}, re-hung {rehung}")

    def to_partition(self) -> TreePartition:
        edges = sorted((min(a, b), max(a, b)) for a, b in self.tree.edges())
        return TreePartition(
            nodes=tuple(sorted(self.tree.nodes)),
            tree_edges=tuple(edges),
            bags={node: tuple(sorted(bag)) for node, bag in sorted(self.bags.items())},
            graph=self.graph,
        )

    def record(self, kind: str, node: int, detail: str) -> None:
        step = DecompStep(
            kind=kind,
            node=node,
            weight=self.weight(),
            status=self.status(self.anchor),
            cost=self.cost(self.anchor, self.side),
            detail=detail,
        )
        self.steps.append(step)
        logger.debug(
            "🔄 %s at node %s (w=%s, status=%s, cost=%s): %s", kind, node, step.weight, step.status, step.cost, detail
        )


class StructureService:
    """Tree-partitions, torsos, edge-sums and the theta_{k+1}-immersion-free decomposition."""

    def __init__(self, cut_service: CutService, step_factor: int = 1):
        self.cut_service = cut_service
        self.step_factor = step_factor

    # partitions

    def single_bag_partition(self, graph: MultiGraph) -> TreePartition:
        """One node holding every vertex."""
        return TreePartition(nodes=(0,), tree_edges=(), bags={0: graph.sorted_vertices()}, graph=graph)

    def star_partition(self, graph: MultiGraph) -> TreePartition:
        """Empty center bag 0 and one leaf bag per vertex, leaves numbered in vertex order."""
        vertices = graph.sorted_vertices()
        bags = {0: ()}
        bags.update({index: (vertex,) for index, vertex in enumerate(vertices, start=1)})
        return TreePartition(
            nodes=tuple(range(len(vertices) + 1)),
            tree_edges=tuple((0, index) for index in range(1, len(vertices) + 1)),
            bags=bags,
            graph=graph,
        )

    def check_partition(self, partition: TreePartition) -> None:
        """
        Raises:
            PartitionError: If T is not a tree or the bags do not near-partition V(G).
        """
        nodes = set(partition.nodes)
        if not nodes:
            raise PartitionError("the tree has no nodes")
        if set(partition.bags) != nodes:
            raise PartitionError("bags must be given for exactly the tree nodes")
        tree = nx.Graph()
        tree.add_nodes_from(nodes)
        for a, b in partition.tree_edges:
            if a not in nodes or b not in nodes:
                raise PartitionError(f"tree edge ({a}, {b}) uses an unknown node")
            tree.add_edge(a, b)
        if len(partition.tree_edges) != len(nodes) - 1 or not nx.is_tree(tree):
            raise PartitionError("the tree edges do not form a tree")

        seen: set[int] = set()
        for node, bag in partition.bags.items():
            overlap = seen & set(bag)
            if overlap:
                raise PartitionError(f"vertices {sorted(overlap)} appear in more than one bag")
            seen |= set(bag)
        if seen != partition.graph.vertices:
            missing = sorted(partition.graph.vertices - seen)
            unknown = sorted(seen - partition.graph.vertices)
            raise PartitionError(f"bags miss vertices {missing} or hold unknown vertices {unknown}")

    def cross(self, partition: TreePartition, edge: tuple[int, int]) -> tuple[int, ...]:
        """Graph edges between the bag unions of the two sides of a tree edge."""
        a, b = edge
        side = self._side_vertices(partition, b, a)
        return partition.graph.edge_boundary(side)

    def adhesion(self, partition: TreePartition) -> int:
        self.check_partition(partition)
        return max((len(self.cross(partition, edge)) for edge in partition.tree_edges), default=0)

    def strength(self, partition: TreePartition) -> int:
        self.check_partition(partition)
        return min(self.torso(partition, node).graph.max_degree() for node in partition.nodes)

    def torso(self, partition: TreePartition, node: int) -> Torso:
        """
        Identifies the bag union of every component of T minus `node` to one satellite.

        Satellite labels are max(V(G)) + 1 + the index of the directed tree edge
        (node, neighbor), so they never collide across torsos. A component whose
        bags are all empty becomes an isolated satellite.
        """
        self.check_partition(partition)
        if node not in partition.bags:
            raise PartitionError(f"unknown tree node {node}")

        graph = partition.graph
        base = max(graph.vertices, default=-1) + 1
        directed = {}
        for index, (a, b) in enumerate(partition.tree_edges):
            directed[(a, b)] = 2 * index
            directed[(b, a)] = 2 * index + 1

        torso_graph = graph
        mapping = {vertex: vertex for vertex in graph.vertices}
        dropped: list[int] = []
        satellites = []
        tree = partition.tree()
        for neighbor in partition.neighbors(node):
            label = base + directed[(node, neighbor)]
            subsumed = subtree_nodes(tree, neighbor, node)
            vertices = self._bag_union(partition, subsumed)
            if vertices:
                torso_graph, merge = torso_graph.identify(vertices, label)
                dropped.extend(merge.dropped_edges)
                for vertex in vertices:
                    mapping[vertex] = label
            else:
                torso_graph = torso_graph.with_vertices([label])
            satellites.append(
                SatelliteInfo(
                    label=label,
                    neighbor=neighbor,
                    subsumed=tuple(sorted(subsumed)),
                    vertices=tuple(sorted(vertices)),
                )
            )

        return Torso(
            node=node,
            bag=partition.bags[node],
            satellites=tuple(satellites),
            graph=torso_graph,
            merge_map=VertexMergeMap(mapping=mapping, dropped_edges=tuple(sorted(dropped))),
        )

    def torsos(self, partition: TreePartition) -> dict[int, Torso]:
        """Torso of every tree node, keyed by node."""
        return {node: self.torso(partition, node) for node in partition.nodes}

    # immersions

    def is_almost_bounded(self, graph: MultiGraph, k: int) -> bool:
        """At most one vertex has degree above k."""
        return sum(1 for vertex in graph.vertices if graph.degree(vertex) > k) <= 1

    def theta_free(self, graph: MultiGraph, k: int) -> FreeCertificate | ImmersionWitness:
        """
        Decides whether theta_{k+1} is immersed, i.e. whether some pair has k+1 edge-disjoint paths.

        One Gomory-Hu tree per connected component gives every pairwise minimum
        cut with n-1 flow computations.
        """
        if k < 0:
            raise GraphOperationError("theta_free", f"k must be nonnegative, got {k}")
        cuts = []
        for component in graph.connected_components():
            if len(component) < 2:
                continue
            simple = nx.Graph()
            simple.add_nodes_from(sorted(component))
            for (u, v), ids in graph.parallel_classes().items():
                if u in component:
                    simple.add_edge(u, v, capacity=len(ids))
            tree = nx.gomory_hu_tree(simple, capacity='capacity')

            for u, v in sorted((min(a, b), max(a, b)) for a, b in tree.edges()):
                weight = tree[u][v]['weight']
                if weight >= k + 1:
                    paths = self.cut_service.max_edge_disjoint_paths(graph, u, v)
                    witness = ImmersionWitness(
                        source=u,
                        target=v,
                        paths=paths.paths[: k + 1],
                        vertex_paths=paths.vertex_paths[: k + 1],
                    )
                    logger.info("⚠️ theta_%s immersed between %s and %s", k + 1, u, v)
                    return witness
                side = frozenset(subtree_nodes(tree, u, v))
                cuts.append(
                    PairCut(source=u, target=v, side=tuple(sorted(side)), edges=graph.edge_boundary(side))
                )
        logger.info("✅ Graph is theta_%s-immersion free (%s certified cuts)", k + 1, len(cuts))
        return FreeCertificate(k=k, cuts=tuple(cuts))

    def verify_witness(self, graph: MultiGraph, witness: ImmersionWitness) -> bool:
        """Paths are pairwise edge-disjoint walks of existing edges from source to target."""
        used: set[int] = set()
        for path in witness.paths:
            if used & set(path) or len(set(path)) != len(path):
                return False
            used |= set(path)
            position = witness.source
            for edge_id in path:
                if not graph.has_edge(edge_id) or position not in graph.endpoints(edge_id):
                    return False
                position = graph.other_end(edge_id, position)
            if position != witness.target:
                return False
        return witness.source != witness.target

    # edge sums

    def edge_sum(self, spec: EdgeSumSpec) -> MultiGraph:
        return self.edge_sum_detailed(spec).graph

    def edge_sum_detailed(self, spec: EdgeSumSpec) -> EdgeSumResult:
        """
        Identifies the two summed vertices and lifts every matched edge pair.

        A lifted pair keeps the id of its first-graph edge. Second-graph vertices
        and edge ids are renamed only where they collide with the first graph.

        Raises:
            EdgeSumError: On a degree mismatch or when sigma is not a bijection.
        """
        first, second = spec.first, spec.second
        v1, v2 = spec.first_vertex, spec.second_vertex
        first.require_vertices([v1])
        second.require_vertices([v2])
        first_edges = set(first.incident_edges(v1))
        second_edges = set(second.incident_edges(v2))
        if len(first_edges) != len(second_edges):
            raise EdgeSumError(f"deg({v1}) = {len(first_edges)} differs from deg({v2}) = {len(second_edges)}")
        if set(spec.sigma) != first_edges or set(spec.sigma.values()) != second_edges:
            raise EdgeSumError("sigma must map the edges at the first vertex onto the edges at the second vertex")

        kept_first = first.vertices - {v1}
        top = max(first.vertices | second.vertices) + 1
        vertex_map = {}
        for vertex in sorted(second.vertices - {v2}):
            if vertex in kept_first:
                vertex_map[vertex] = top
                top += 1

        first_ids = set(first.edge_ids)
        next_id = max(first_ids | set(second.edge_ids), default=-1) + 1
        edge_map = {}
        for edge_id in second.edge_ids:
            if edge_id not in second_edges and edge_id in first_ids:
                edge_map[edge_id] = next_id
                next_id += 1

        def rename(vertex: int) -> int:
            return vertex_map.get(vertex, vertex)

        edges = [(e, u, v) for e, u, v in first.edges() if e not in first_edges]
        for e, u, v in second.edges():
            if e not in second_edges:
                edges.append((edge_map.get(e, e), rename(u), rename(v)))

        lifted = {}
        for first_edge, second_edge in sorted(spec.sigma.items()):
            a = first.other_end(first_edge, v1)
            b = rename(second.other_end(second_edge, v2))
            edges.append((first_edge, a, b))
            lifted[first_edge] = (first_edge, second_edge)

        provenance = {e: p for e, p in first.provenance.items() if e not in first_edges}
        provenance.update(lifted)
        graph = MultiGraph(
            vertices=kept_first | {rename(v) for v in second.vertices - {v2}},
            edges=edges,
            provenance=provenance,
            next_edge_id=next_id,
        )
        return EdgeSumResult(graph=graph, lifted=lifted, second_vertex_map=vertex_map, second_edge_map=edge_map)

    # decomposition

    def decompose(self, graph: MultiGraph, k: int) -> TreePartition | ImmersionWitness:
        """
        Tree-partition of adhesion at most k whose torsos each have at most one vertex of degree above k.

        Returns the immersion witness instead when theta_{k+1} is immersed.
        """
        verdict = self.theta_free(graph, k)
        if isinstance(verdict, ImmersionWitness):
            return verdict
        if graph.max_degree() <= k:
            logger.info("✅ Max degree at most %s, returning the star partition", k)
            return self.star_partition(graph)
        partition, _ = self.refine(graph, k)
        return partition

    def refine(self, graph: MultiGraph, k: int) -> tuple[TreePartition, tuple[DecompStep, ...]]:
        """
        Refines the single-bag partition until no bag holds two high-degree vertices.

        For an overloaded node t with high vertices x, y a minimum (x, y)-cut X of
        size at most k is uncrossed against the subtrees hanging off t, deepest
        crossed subtree first. Replacing X by X minus the subtree or X plus the
        subtree removes one crossed subtree; when both exceed k the subtree root
        is itself split or its bag is trimmed towards t. Every split lowers the
        weight by one, every uncross lowers the cost of X relative to t and every
        reattach that re-hangs a subtree lowers the status of t, so the steps
        descend in (weight, status, cost); the step cap bounds the rest.

        Raises:
            DecompositionError: If a cut exceeds k or the step cap is reached.
        """
        state = DecompState(graph, k)
        cap = graph.number_of_vertices() * max(graph.number_of_edges(), graph.number_of_vertices()) * self.step_factor
        logger.info("🚀 Refining partition for k=%s, initial weight %s", k, state.weight())

        while (node := state.overloaded_node()) is not None:
            x, y = state.high_in(node)[:2]
            cut = self.cut_service.min_cut_partition(graph, x, y)
            if cut.size > k:
                raise DecompositionError(
                    f"minimum ({x}, {y})-cut has {cut.size} > {k} edges", steps=len(state.steps)
                )
            state.anchor = node
            side = set(cut.side)
            state.side = side
            self._separate(state, node, side, cap)

        partition = state.to_partition()
        logger.info("✅ Refinement finished: %s nodes after %s steps", len(partition.nodes), len(state.steps))
        return partition, tuple(state.steps)

    def _separate(self, state: DecompState, node: int, side: set[int], cap: int) -> None:
        """Uncrosses `side` until some split happens."""
        graph, k = state.graph, state.k
        while True:
            if len(state.steps) >= cap:
                raise DecompositionError(f"step cap {cap} reached", steps=len(state.steps))

            crossed = state.deepest_crossed_edge(node, side)
            if crossed is None:
                state.split(node, side)
                return

            parent, child, far = crossed
            if len(graph.edge_boundary(side - far)) <= k:
                side = side - far
                state.side = side
                state.record('uncross', child, "dropped the subtree from the cut side")
                continue
            if len(graph.edge_boundary(side | far)) <= k:
                side = side | far
                state.side = side
                state.record('uncross', child, "added the subtree to the cut side")
                continue

            inside = far & side
            high = set(state.high_in(child))
            if high & inside and high - inside:
                state.split(child, inside)
                return
            keep = inside if high & inside else far - side
            state.reattach(parent, child, keep)

    def recompose(self, partition: TreePartition) -> MultiGraph:
        """Edge-sums the torsos back together along the tree."""
        self.check_partition(partition)
        return self.recompose_from_torsos(partition.tree_edges, self.torsos(partition))

    def recompose_from_torsos(
        self,
        tree_edges: Iterable[tuple[int, int]],
        torsos: Mapping[int, Torso],
    ) -> MultiGraph:
        """
        Folds the tree leaf-upward from its lowest node.

        At each tree edge the two satellites facing each other must carry the
        same edge ids; those ids define the edge-sum bijection.

        Raises:
            RecomposeError: If satellites are missing or their edge ids disagree.
        """
        adjacency: dict[int, set[int]] = {node: set() for node in torsos}
        for a, b in tree_edges:
            if a not in adjacency or b not in adjacency:
                raise RecomposeError(f"tree edge ({a}, {b}) has no torso")
            adjacency[a].add(b)
            adjacency[b].add(a)
        if not adjacency:
            raise RecomposeError("no torsos given")

        def fold(node: int, parent: int | None) -> MultiGraph:
            aggregate = torsos[node].graph
            for child in sorted(adjacency[node] - {parent}):
                child_graph = fold(child, node)
                here = torsos[node].satellite_towards(child)
                there = torsos[child].satellite_towards(node)
                if here is None or there is None:
                    raise RecomposeError(f"tree edge ({node}, {child}) has no matching satellites")
                here_edges = aggregate.incident_edges(here.label)
                there_edges = child_graph.incident_edges(there.label)
                if set(here_edges) != set(there_edges):
                    raise RecomposeError(
                        f"satellites of tree edge ({node}, {child}) carry edges "
                        f"{sorted(here_edges)} and {sorted(there_edges)}"
                    )
                spec = EdgeSumSpec(
                    first=aggregate,
                    second=child_graph,
                    first_vertex=here.label,
                    second_vertex=there.label,
                    sigma={edge_id: edge_id for edge_id in here_edges},
                )
                aggregate = self.edge_sum(spec)
            return aggregate

        graph = fold(min(adjacency), None)
        logger.info("✅ Recomposed graph with %s vertices and %s edges", graph.number_of_vertices(), graph.number_of_edges())
        return graph

    @staticmethod
    def _bag_union(partition: TreePartition, nodes: Iterable[int]) -> set[int]:
        vertices: set[int] = set()
        for node in nodes:
            vertices |= set(partition.bags[node])
        return vertices

    def _side_vertices(self, partition: TreePartition, node: int, parent: int) -> set[int]:
        return self._bag_union(partition, subtree_nodes(partition.tree(), node, parent))
