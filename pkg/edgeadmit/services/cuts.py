import logging
from collections import deque
from collections.abc import Iterable

import networkx as nx

from edgeadmit.exceptions.cuts import CutServiceError, SearchBudgetExceededError
from edgeadmit.exceptions.graph import GraphOperationError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.graph import BlockingSet, Cut, EdgeDisjointPaths, Speed, format_speed

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


class _BlockingSearch:
    """
    Exact minimum s-path blocking set between two terminals, for finite s.

    Works on parallel classes: an inclusion-minimal blocking set never splits a
    class, so each vertex pair is cut whole at cost equal to its multiplicity.
    Branching follows the shortest surviving s-path; branch i cuts the i-th pair
    of that path and forbids cutting the pairs before it, so the branches
    partition the solution space.
    """

    def __init__(self, weights: dict[Pair, int], source: int, target: int, speed: int, budget: int):
        self.weights = weights
        self.source = source
        self.target = target
        self.speed = speed
        self.budget = budget
        self.nodes = 0
        adjacency: dict[int, list[tuple[int, Pair]]] = {}
        for pair in weights:
            u, v = pair
            adjacency.setdefault(u, []).append((v, pair))
            adjacency.setdefault(v, []).append((u, pair))
        self.adjacency = {vertex: sorted(items) for vertex, items in adjacency.items()}
        self.best_cost = sum(weights.values()) + 1
        self.best: frozenset[Pair] = frozenset()

    def shortest_path(self, cut: frozenset[Pair], residual: dict[Pair, int] | None = None) -> list[Pair] | None:
        """Pairs of the BFS-first shortest s-path avoiding `cut` (and exhausted pairs of `residual`)."""
        parent: dict[int, tuple[int, Pair] | None] = {self.source: None}
        depth = {self.source: 0}
        queue = deque([self.source])
        while queue:
            vertex = queue.popleft()
            if vertex == self.target:
                break
            if depth[vertex] >= self.speed:
                continue
            for neighbor, pair in self.adjacency.get(vertex, ()):
                if neighbor in parent or pair in cut:
                    continue
                if residual is not None and residual[pair] <= 0:
                    continue
                parent[neighbor] = (vertex, pair)
                depth[neighbor] = depth[vertex] + 1
                queue.append(neighbor)
        if self.target not in parent:
            return None

        path = []
        vertex = self.target
        while parent[vertex] is not None:
            previous, pair = parent[vertex]
            path.append(pair)
            vertex = previous
        path.reverse()
        return path

    def lower_bound(self, cut: frozenset[Pair]) -> int:
        """Greedy packing of edge-disjoint s-paths; each needs its own cut edge."""
        residual = dict(self.weights)
        bound = 0
        while True:
            path = self.shortest_path(cut, residual)
            if path is None:
                return bound
            bottleneck = min(residual[pair] for pair in path)
            for pair in path:
                residual[pair] -= bottleneck
            bound += bottleneck

    def seed(self, pairs: Iterable[Pair]) -> None:
        """Installs a known blocking set as the incumbent."""
        chosen = frozenset(pair for pair in pairs if pair in self.weights)
        if self.shortest_path(chosen) is None:
            self.best = chosen
            self.best_cost = sum(self.weights[pair] for pair in chosen)

    def run(self) -> frozenset[Pair]:
        self._branch(frozenset(), frozenset(), 0)
        return self.best

    def _branch(self, cut: frozenset[Pair], forbidden: frozenset[Pair], cost: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceededError(budget=self.budget)

        path = self.shortest_path(cut)
        if path is None:
            if cost < self.best_cost:
                self.best_cost = cost
                self.best = cut
                logger.debug("🔄 Incumbent improved to %s after %s nodes", cost, self.nodes)
            return
        if cost + self.lower_bound(cut) >= self.best_cost:
            return

        prefix: set[Pair] = set()
        for pair in path:
            if pair not in forbidden:
                self._branch(cut | {pair}, forbidden | prefix, cost + self.weights[pair])
            prefix.add(pair)


class CutService:
    """Edge cuts, length-bounded blocking sets and edge-disjoint paths."""

    def __init__(self, search_budget: int):
        self.search_budget = search_budget

    def rho(self, graph: MultiGraph, side: Iterable[int]) -> int:
        """Number of edges leaving the vertex set `side`."""
        return len(graph.edge_boundary(graph.require_vertices(side)))

    def min_s_cut(self, graph: MultiGraph, source: int, target: int, speed: Speed) -> BlockingSet:
        """
        Minimum edge set destroying every (source, target)-path of length at most `speed`.

        Args:
            graph: Input multigraph.
            source: First terminal.
            target: Second terminal.
            speed: Path-length bound, None for unbounded.

        Returns:
            A minimum BlockingSet.

        Raises:
            GraphOperationError: If the terminals coincide or the speed is not positive.
            SearchBudgetExceededError: If the finite-speed search exceeds its node budget.
        """
        self._check_terminals(graph, source, target)
        if speed is not None and speed < 1:
            raise GraphOperationError("min_s_cut", f"speed must be positive, got {speed}")

        if speed is None or speed >= graph.number_of_vertices() - 1:
            edges = self._flow_cut(graph, source, target)
        elif speed == 1:
            edges = graph.edges_between([source], [target])
        elif speed == 2:
            edges = self._two_path_cut(graph, source, target)
        else:
            edges = self._bounded_cut(graph, source, target, speed)

        logger.debug(
            "🔍 min_s_cut(%s, %s, s=%s) = %s", source, target, format_speed(speed), len(edges)
        )
        return BlockingSet(edges=tuple(sorted(edges)), speed=speed, source=source, targets=(target,))

    def supp(self, graph: MultiGraph, speed: Speed, source: int, targets: Iterable[int]) -> BlockingSet:
        """
        Minimum edge set meeting every s-path from `source` to any vertex of `targets`.

        The targets are identified to one fresh vertex. A shortest s-path from the
        source to the target set ends at its first target, so the identification
        keeps every relevant path length.
        """
        target_set = graph.require_vertices(targets)
        graph.require_vertices([source])
        if source in target_set:
            raise GraphOperationError("supp", f"source {source} belongs to the target set")
        if not target_set:
            return BlockingSet(edges=(), speed=speed, source=source, targets=())

        label = max(graph.vertices) + 1
        merged, _ = graph.identify(target_set, label)
        blocking = self.min_s_cut(merged, source, label, speed)
        return BlockingSet(
            edges=blocking.edges,
            speed=speed,
            source=source,
            targets=tuple(sorted(target_set)),
        )

    def is_blocking(
        self,
        graph: MultiGraph,
        speed: Speed,
        source: int,
        targets: Iterable[int],
        edges: Iterable[int],
    ) -> bool:
        """True iff no s-path from `source` to `targets` survives deleting `edges`."""
        reached = graph.distances(source, blocked=edges, cutoff=speed)
        return not any(target in reached for target in targets)

    def min_cut_partition(self, graph: MultiGraph, source: int, target: int) -> Cut:
        """Minimum (source, target)-cut; the returned side contains the source."""
        self._check_terminals(graph, source, target)
        _, (reachable, _) = nx.minimum_cut(graph.to_capacity_digraph(), source, target)
        side = frozenset(reachable)
        return Cut(side=tuple(sorted(side)), edges=graph.edge_boundary(side))

    def max_edge_disjoint_paths(self, graph: MultiGraph, source: int, target: int) -> EdgeDisjointPaths:
        """
        Maximum family of pairwise edge-disjoint paths with explicit edge ids.

        Raises:
            CutServiceError: If the path count disagrees with the minimum cut size.
        """
        self._check_terminals(graph, source, target)
        network = graph.to_capacity_digraph()
        flow_value, flow = nx.maximum_flow(network, source, target)

        net: dict[int, dict[int, int]] = {vertex: {} for vertex in graph.vertices}
        for u, targets in flow.items():
            for v, amount in targets.items():
                surplus = amount - flow[v].get(u, 0)
                if surplus > 0:
                    net[u][v] = surplus

        classes = graph.parallel_classes()
        used: set[int] = set()
        paths: list[tuple[int, ...]] = []
        vertex_paths: list[tuple[int, ...]] = []
        for _ in range(flow_value):
            vertex_path = self._flow_path(net, source, target)
            if vertex_path is None:
                break
            edge_path = []
            for u, v in zip(vertex_path, vertex_path[1:]):
                net[u][v] -= 1
                if net[u][v] == 0:
                    del net[u][v]
                pair = (u, v) if u < v else (v, u)
                edge_id = next(e for e in classes[pair] if e not in used)
                used.add(edge_id)
                edge_path.append(edge_id)
            paths.append(tuple(edge_path))
            vertex_paths.append(tuple(vertex_path))

        cut_size = len(self._flow_cut(graph, source, target))
        if len(paths) != cut_size:
            raise CutServiceError(
                f"found {len(paths)} edge-disjoint paths but the minimum cut has {cut_size} edges"
            )
        return EdgeDisjointPaths(
            source=source, target=target, paths=tuple(paths), vertex_paths=tuple(vertex_paths)
        )

    @staticmethod
    def _check_terminals(graph: MultiGraph, source: int, target: int) -> None:
        graph.require_vertices([source, target])
        if source == target:
            raise GraphOperationError("cut", f"terminals must be distinct, got {source} twice")

    @staticmethod
    def _flow_path(net: dict[int, dict[int, int]], source: int, target: int) -> list[int] | None:
        parent: dict[int, int | None] = {source: None}
        queue = deque([source])
        while queue:
            vertex = queue.popleft()
            if vertex == target:
                break
            for neighbor in sorted(net[vertex]):
                if neighbor not in parent:
                    parent[neighbor] = vertex
                    queue.append(neighbor)
        if target not in parent:
            return None
        path = [target]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    @staticmethod
    def _flow_cut(graph: MultiGraph, source: int, target: int) -> tuple[int, ...]:
        _, (reachable, _) = nx.minimum_cut(graph.to_capacity_digraph(), source, target)
        return graph.edge_boundary(reachable)

    @staticmethod
    def _two_path_cut(graph: MultiGraph, source: int, target: int) -> list[int]:
        """Direct edges plus, per common neighbor, the smaller of its two parallel classes."""
        pairs = graph.pair_multiplicities()
        edges = list(graph.edges_between([source], [target]))
        for middle in sorted(set(pairs[source]) & set(pairs[target])):
            if pairs[source][middle] <= pairs[middle][target]:
                edges.extend(graph.edges_between([source], [middle]))
            else:
                edges.extend(graph.edges_between([middle], [target]))
        return edges

    def _bounded_cut(self, graph: MultiGraph, source: int, target: int, speed: int) -> list[int]:
        from_source = graph.distances(source, cutoff=speed)
        from_target = graph.distances(target, cutoff=speed)
        unreachable = speed + 1

        classes = graph.parallel_classes()
        weights = {}
        for (u, v), ids in classes.items():
            forward = from_source.get(u, unreachable) + 1 + from_target.get(v, unreachable)
            backward = from_source.get(v, unreachable) + 1 + from_target.get(u, unreachable)
            if min(forward, backward) <= speed:
                weights[(u, v)] = len(ids)

        search = _BlockingSearch(weights, source, target, speed, self.search_budget)
        flow_cut = self._flow_cut(graph, source, target)
        search.seed({graph.endpoints(edge_id) for edge_id in flow_cut})
        chosen = search.run()
        logger.debug("🔍 Bounded cut search finished after %s nodes", search.nodes)
        return [edge_id for pair in sorted(chosen) for edge_id in classes[pair]]
