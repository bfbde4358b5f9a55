import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from edgeadmit.models.multigraph import MultiGraph


class RootedCarving(BaseModel):
    """
    Binary rooted tree with graph vertices assigned to leaves.

    Several vertices may share a leaf. Node weights count the edges between
    the vertex sets below the two children; edge weights count the edges
    leaving the vertex set below the child end.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    root: int
    children: dict[int, tuple[int, int]] = Field(..., description='Internal node -> its two children.')
    assignment: dict[int, int] = Field(..., description='Graph vertex -> leaf.')
    node_weights: dict[int, int] = Field(..., description='Internal node -> w(t).')
    edge_weights: dict[int, int] = Field(..., description='Child node -> w of the edge to its parent.')
    graph: MultiGraph = Field(..., exclude=True)

    def tree(self) -> nx.DiGraph:
        """Carving tree with arcs from parent to child."""
        tree = nx.DiGraph()
        tree.add_node(self.root)
        tree.add_edges_from((parent, child) for parent, pair in self.children.items() for child in pair)
        return tree

    @property
    def nodes(self) -> list[int]:
        return sorted(nx.descendants(self.tree(), self.root) | {self.root})

    @property
    def leaves(self) -> list[int]:
        return [node for node in self.nodes if node not in self.children]

    def leaf_vertices(self, leaf: int) -> tuple[int, ...]:
        return tuple(sorted(v for v, assigned in self.assignment.items() if assigned == leaf))

    def descendant_vertices(self, node: int) -> set[int]:
        """Graph vertices mapped to leaves below `node`."""
        below = nx.descendants(self.tree(), node) | {node}
        leaves = {current for current in below if current not in self.children}
        return {vertex for vertex, leaf in self.assignment.items() if leaf in leaves}


class RefutationWitness(BaseModel):
    """A vertex of the candidate set together with few edges cutting it off from the rest."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vertex: int
    candidates: tuple[int, ...] = Field(..., description='The refuted candidate set.')
    edges: tuple[int, ...] = Field(..., description='Blocking edge set reported (the smaller of the two below).')
    carving_edges: tuple[int, ...] = Field(..., description='Edges leaving the light leaf.')
    leaf: int
    path: tuple[int, ...] = Field(..., description='Root-to-leaf path of the carving.')
    carving: RootedCarving = Field(..., exclude=True)
