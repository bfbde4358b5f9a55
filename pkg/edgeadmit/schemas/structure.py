from typing import Literal

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, computed_field

from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.graph import VertexMergeMap


class TreePartition(BaseModel):
    """Tree T with one (possibly empty) bag of graph vertices per tree node."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    nodes: tuple[int, ...] = Field(..., description='Sorted tree nodes.')
    tree_edges: tuple[tuple[int, int], ...] = Field(..., description='Tree edges (a, b) with a < b, sorted.')
    bags: dict[int, tuple[int, ...]] = Field(..., description='Tree node -> sorted bag vertices.')
    graph: MultiGraph = Field(..., exclude=True, description='The partitioned graph.')

    def neighbors(self, node: int) -> list[int]:
        result = [b for a, b in self.tree_edges if a == node]
        result.extend(a for a, b in self.tree_edges if b == node)
        return sorted(result)

    def tree(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(self.nodes)
        tree.add_edges_from(self.tree_edges)
        return tree


class SatelliteInfo(BaseModel):
    """Vertex of a torso standing for one component of T minus the torso's node."""

    model_config = ConfigDict(frozen=True)

    label: int = Field(..., description='Vertex label of the satellite, unique across all torsos.')
    neighbor: int = Field(..., description='Tree node adjacent to the torso node that the satellite represents.')
    subsumed: tuple[int, ...] = Field(..., description='Tree nodes of the represented component.')
    vertices: tuple[int, ...] = Field(..., description='Graph vertices identified into the satellite.')


class Torso(BaseModel):
    """Bag of one tree node plus one satellite per adjacent subtree."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    node: int
    bag: tuple[int, ...]
    satellites: tuple[SatelliteInfo, ...] = ()
    graph: MultiGraph = Field(..., exclude=True)
    merge_map: VertexMergeMap | None = Field(None, description='Graph vertex -> torso vertex.')

    def satellite_towards(self, neighbor: int) -> SatelliteInfo | None:
        return next((satellite for satellite in self.satellites if satellite.neighbor == neighbor), None)


class EdgeSumSpec(BaseModel):
    """Two graphs glued at equal-degree vertices along a bijection of their incident edges."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    first: MultiGraph
    second: MultiGraph
    first_vertex: int
    second_vertex: int
    sigma: dict[int, int] = Field(..., description='Edge at first_vertex -> edge at second_vertex.')


class EdgeSumResult(BaseModel):
    """Edge-sum graph with the bookkeeping needed to trace ids back to the summands."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    graph: MultiGraph = Field(..., exclude=True)
    lifted: dict[int, tuple[int, int]] = Field(
        ..., description='New edge id -> (first-graph edge, second-graph edge) it was lifted from.'
    )
    second_vertex_map: dict[int, int] = Field(default_factory=dict, description='Renamed second-graph vertices.')
    second_edge_map: dict[int, int] = Field(default_factory=dict, description='Renumbered second-graph edges.')


class ImmersionWitness(BaseModel):
    """k+1 pairwise edge-disjoint paths between two vertices, i.e. an immersed theta_{k+1}."""

    model_config = ConfigDict(frozen=True)

    source: int
    target: int
    paths: tuple[tuple[int, ...], ...] = Field(..., description='Edge ids of every path, source to target.')
    vertex_paths: tuple[tuple[int, ...], ...] = ()

    @computed_field
    @property
    def order(self) -> int:
        return len(self.paths)


class PairCut(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: int
    target: int
    side: tuple[int, ...] = Field(..., description='Source side of the cut.')
    edges: tuple[int, ...]

    @computed_field
    @property
    def size(self) -> int:
        return len(self.edges)


class FreeCertificate(BaseModel):
    """
    Proof that no theta_{k+1} is immersed.

    Cuts follow a Gomory-Hu tree per connected component; the minimum cut of
    any other pair is the smallest cut on its tree path, and pairs in
    different components are separated by the empty cut.
    """

    model_config = ConfigDict(frozen=True)

    k: int
    cuts: tuple[PairCut, ...] = ()


class DecompStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal['split', 'uncross', 'reattach']
    node: int = Field(..., description='Tree node acted on.')
    weight: int = Field(..., ge=0, description='Sum over nodes of (high-degree vertices in the bag - 1) after the step.')
    status: int = Field(..., ge=0, description='Sum of tree distances from the node being separated, after the step.')
    cost: int = Field(..., ge=0, description='Depth sum of the extremal tree edges crossed by the current cut.')
    detail: str = ''


class PartitionDocument(BaseModel):
    """Contents of a decomposition file: tree, bags and optionally every torso."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    nodes: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]
    bags: dict[int, tuple[int, ...]]
    torsos: dict[int, Torso] = Field(default_factory=dict)
