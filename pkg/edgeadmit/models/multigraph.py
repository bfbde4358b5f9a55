from collections import deque
from collections.abc import Iterable, Iterator, Mapping

import networkx as nx

from edgeadmit.exceptions.graph import (
    GraphOperationError,
    LoopError,
    UnknownEdgeError,
    UnknownVertexError,
)
from edgeadmit.schemas.graph import VertexMergeMap


class MultiGraph:
    """
    Loopless undirected multigraph with stable edge ids.

    Values are immutable: every edit returns a new graph. Parallel edges are
    individually addressable by their id. Edges created by `lift` get a fresh
    id and a provenance record naming the two edges they replace.
    """

    __slots__ = ("_vertices", "_endpoints", "_incidence", "_provenance", "_next_edge_id", "_pairs")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[tuple[int, int, int]] = (),
        provenance: Mapping[int, tuple[int, int]] | None = None,
        next_edge_id: int | None = None,
    ):
        self._vertices = frozenset(vertices)
        for vertex in self._vertices:
            if not isinstance(vertex, int) or vertex < 0:
                raise GraphOperationError("build", f"vertex labels are nonnegative integers, got {vertex!r}")

        endpoints: dict[int, tuple[int, int]] = {}
        incidence: dict[int, list[int]] = {vertex: [] for vertex in self._vertices}
        for edge_id, u, v in edges:
            if edge_id in endpoints:
                raise GraphOperationError("build", f"duplicate edge id {edge_id}")
            if u == v:
                raise LoopError(f"edge {edge_id} joins vertex {u} to itself")
            for endpoint in (u, v):
                if endpoint not in incidence:
                    raise UnknownVertexError(vertex=endpoint)
            endpoints[edge_id] = (u, v) if u < v else (v, u)
            incidence[u].append(edge_id)
            incidence[v].append(edge_id)

        self._endpoints = dict(sorted(endpoints.items()))
        self._incidence = {vertex: tuple(sorted(ids)) for vertex, ids in incidence.items()}
        self._provenance = {
            edge_id: source for edge_id, source in (provenance or {}).items() if edge_id in self._endpoints
        }
        highest = max(self._endpoints, default=-1) + 1
        self._next_edge_id = max(highest, next_edge_id or 0)
        self._pairs: dict[int, dict[int, int]] | None = None

    # construction helpers

    @classmethod
    def from_pairs(cls, vertices: Iterable[int] | int, pairs: Iterable[tuple[int, int]]) -> "MultiGraph":
        """Builds a graph assigning edge ids 0, 1, ... in the order of `pairs`."""
        if isinstance(vertices, int):
            vertices = range(vertices)
        return cls(vertices=vertices, edges=((i, u, v) for i, (u, v) in enumerate(pairs)))

    @classmethod
    def theta(cls, multiplicity: int) -> "MultiGraph":
        """theta_m: vertices 0 and 1 joined by `multiplicity` parallel edges."""
        return cls.from_pairs(2, [(0, 1)] * multiplicity)

    @classmethod
    def path(cls, n: int) -> "MultiGraph":
        return cls.from_pairs(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "MultiGraph":
        return cls.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> "MultiGraph":
        return cls.from_pairs(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def star(cls, leaves: int) -> "MultiGraph":
        """K_{1,leaves} with center 0."""
        return cls.from_pairs(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    # read access

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._vertices))

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(self._endpoints)

    @property
    def provenance(self) -> Mapping[int, tuple[int, int]]:
        return dict(self._provenance)

    @property
    def next_edge_id(self) -> int:
        return self._next_edge_id

    def number_of_vertices(self) -> int:
        return len(self._vertices)

    def number_of_edges(self) -> int:
        return len(self._endpoints)

    def has_vertex(self, vertex: int) -> bool:
        return vertex in self._vertices

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._endpoints

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yields (edge_id, u, v) with u < v in edge id order."""
        for edge_id, (u, v) in self._endpoints.items():
            yield edge_id, u, v

    def endpoints(self, edge_id: int) -> tuple[int, int]:
        try:
            return self._endpoints[edge_id]
        except KeyError:
            raise UnknownEdgeError(edge_id=edge_id) from None

    def _require_vertex(self, vertex: int) -> None:
        if vertex not in self._vertices:
            raise UnknownVertexError(vertex=vertex)

    def require_vertices(self, vertices: Iterable[int]) -> frozenset[int]:
        vertex_set = frozenset(vertices)
        for vertex in sorted(vertex_set - self._vertices):
            raise UnknownVertexError(vertex=vertex)
        return vertex_set

    def incident_edges(self, vertex: int) -> tuple[int, ...]:
        self._require_vertex(vertex)
        return self._incidence[vertex]

    def degree(self, vertex: int) -> int:
        self._require_vertex(vertex)
        return len(self._incidence[vertex])

    def max_degree(self) -> int:
        return max((len(ids) for ids in self._incidence.values()), default=0)

    def other_end(self, edge_id: int, vertex: int) -> int:
        u, v = self.endpoints(edge_id)
        return v if vertex == u else u

    def pair_multiplicities(self) -> dict[int, dict[int, int]]:
        """Simple-graph view: vertex -> {neighbor: number of parallel edges}."""
        if self._pairs is None:
            pairs: dict[int, dict[int, int]] = {vertex: {} for vertex in self._vertices}
            for u, v in self._endpoints.values():
                pairs[u][v] = pairs[u].get(v, 0) + 1
                pairs[v][u] = pairs[v].get(u, 0) + 1
            self._pairs = pairs
        return self._pairs

    def neighbors(self, vertex: int) -> tuple[int, ...]:
        self._require_vertex(vertex)
        return tuple(sorted(self.pair_multiplicities()[vertex]))

    def multiplicity(self, u: int, v: int) -> int:
        """Number of parallel edges joining u and v."""
        self._require_vertex(u)
        self._require_vertex(v)
        if u == v:
            raise GraphOperationError("multiplicity", "endpoints must be distinct")
        return self.pair_multiplicities()[u].get(v, 0)

    def parallel_classes(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """(u, v) with u < v -> ids of the edges joining them."""
        classes: dict[tuple[int, int], list[int]] = {}
        for edge_id, pair in self._endpoints.items():
            classes.setdefault(pair, []).append(edge_id)
        return {pair: tuple(ids) for pair, ids in classes.items()}

    def edges_between(self, first: Iterable[int], second: Iterable[int]) -> tuple[int, ...]:
        """E_G(S1, S2) for disjoint vertex sets."""
        first_set, second_set = frozenset(first), frozenset(second)
        return tuple(
            edge_id for edge_id, (u, v) in self._endpoints.items()
            if (u in first_set and v in second_set) or (v in first_set and u in second_set)
        )

    def edge_boundary(self, side: Iterable[int]) -> tuple[int, ...]:
        """E_G(X, V \\ X)."""
        side_set = frozenset(side)
        return tuple(
            edge_id for edge_id, (u, v) in self._endpoints.items()
            if (u in side_set) != (v in side_set)
        )

    def distances(
        self,
        source: int,
        blocked: Iterable[int] = (),
        cutoff: int | None = None,
    ) -> dict[int, int]:
        """Hop distances from `source` in G minus the `blocked` edges, up to `cutoff`."""
        self._require_vertex(source)
        blocked_set = frozenset(blocked)
        dist = {source: 0}
        queue = deque([source])
        while queue:
            vertex = queue.popleft()
            if cutoff is not None and dist[vertex] >= cutoff:
                continue
            for edge_id in self._incidence[vertex]:
                if edge_id in blocked_set:
                    continue
                other = self.other_end(edge_id, vertex)
                if other not in dist:
                    dist[other] = dist[vertex] + 1
                    queue.append(other)
        return dist

    def connected_components(self) -> list[frozenset[int]]:
        """Components ordered by their smallest vertex."""
        components = (frozenset(component) for component in nx.connected_components(self.to_networkx()))
        return sorted(components, key=min)

    # edits

    def identify(self, vertex_set: Iterable[int], label: int) -> tuple["MultiGraph", VertexMergeMap]:
        """
        Replaces every vertex of `vertex_set` by `label`.

        Edges with one endpoint in the set are redirected and keep their id;
        edges with both endpoints in the set would become loops and are dropped.
        """
        merged = self.require_vertices(vertex_set)
        if not merged:
            raise GraphOperationError("identify", "the identified vertex set is empty")
        if label in self._vertices and label not in merged:
            raise GraphOperationError("identify", f"label {label} collides with a vertex outside the set")

        mapping = {vertex: (label if vertex in merged else vertex) for vertex in self._vertices}
        edges = []
        dropped = []
        for edge_id, u, v in self.edges():
            new_u, new_v = mapping[u], mapping[v]
            if new_u == new_v:
                dropped.append(edge_id)
                continue
            edges.append((edge_id, new_u, new_v))

        graph = MultiGraph(
            vertices=set(mapping.values()),
            edges=edges,
            provenance=self._provenance,
            next_edge_id=self._next_edge_id,
        )
        return graph, VertexMergeMap(mapping=mapping, dropped_edges=tuple(dropped))

    def delete_edges(self, edge_ids: Iterable[int]) -> "MultiGraph":
        """G \\ F: same vertex set, exactly the edges of F removed."""
        removed = frozenset(edge_ids)
        for edge_id in sorted(removed):
            if edge_id not in self._endpoints:
                raise UnknownEdgeError(edge_id=edge_id)
        return MultiGraph(
            vertices=self._vertices,
            edges=((e, u, v) for e, u, v in self.edges() if e not in removed),
            provenance=self._provenance,
            next_edge_id=self._next_edge_id,
        )

    def lift(self, first: int, second: int) -> "MultiGraph":
        """
        Lifts two edges sharing exactly one endpoint.

        Both edges are removed and one fresh edge joins their non-shared
        endpoints; its provenance is (first, second).
        """
        if first == second:
            raise GraphOperationError("lift", "the two edges must be distinct")
        ends = set(self.endpoints(first)) ^ set(self.endpoints(second))
        if not ends:
            raise LoopError(f"lifting parallel edges {first} and {second} would create a loop")
        if len(ends) != 2 or not set(self.endpoints(first)) & set(self.endpoints(second)):
            raise GraphOperationError("lift", f"edges {first} and {second} do not share an endpoint")

        u, v = sorted(ends)
        new_id = self._next_edge_id
        provenance = dict(self._provenance)
        provenance[new_id] = (first, second)
        edges = [(e, a, b) for e, a, b in self.edges() if e not in (first, second)]
        edges.append((new_id, u, v))
        return MultiGraph(vertices=self._vertices, edges=edges, provenance=provenance, next_edge_id=new_id + 1)

    def with_vertices(self, vertices: Iterable[int]) -> "MultiGraph":
        """Adds isolated vertices (existing ones are ignored)."""
        return MultiGraph(
            vertices=self._vertices | frozenset(vertices),
            edges=self.edges(),
            provenance=self._provenance,
            next_edge_id=self._next_edge_id,
        )

    def with_edges(self, pairs: Iterable[tuple[int, int]]) -> "MultiGraph":
        """Adds edges with fresh ids, in order."""
        edges = list(self.edges())
        next_id = self._next_edge_id
        for u, v in pairs:
            edges.append((next_id, u, v))
            next_id += 1
        return MultiGraph(vertices=self._vertices, edges=edges, provenance=self._provenance, next_edge_id=next_id)

    def relabel(self, mapping: Mapping[int, int]) -> "MultiGraph":
        """Renames vertices; vertices missing from `mapping` keep their label."""
        rename = {vertex: mapping.get(vertex, vertex) for vertex in self._vertices}
        if len(set(rename.values())) != len(rename):
            raise GraphOperationError("relabel", "the relabelling is not injective")
        return MultiGraph(
            vertices=rename.values(),
            edges=((e, rename[u], rename[v]) for e, u, v in self.edges()),
            provenance=self._provenance,
            next_edge_id=self._next_edge_id,
        )

    def renumber_edges(self) -> "MultiGraph":
        """Same graph with edge ids 0..m-1 in current id order."""
        return MultiGraph(
            vertices=self._vertices,
            edges=((i, u, v) for i, (_, u, v) in enumerate(self.edges())),
        )

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.sorted_vertices())
        for edge_id, u, v in self.edges():
            graph.add_edge(u, v, key=edge_id)
        return graph

    def to_capacity_digraph(self) -> nx.DiGraph:
        """Flow network: both arcs of every vertex pair, capacity = multiplicity."""
        network = nx.DiGraph()
        network.add_nodes_from(self.sorted_vertices())
        for (u, v), ids in self.parallel_classes().items():
            network.add_edge(u, v, capacity=len(ids))
            network.add_edge(v, u, capacity=len(ids))
        return network

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._endpoints == other._endpoints

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self._endpoints.items())))

    def __repr__(self) -> str:
        return f"MultiGraph(n={len(self._vertices)}, m={len(self._endpoints)})"
