from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from edgeadmit.models.multigraph import MultiGraph

CorpusKind = Literal['random', 'bounded', 'edge-sum', 'planted-theta']


class CorpusSpec(BaseModel):
    """Deterministic graph generator request, written `kind:key=value,...:seed`."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={'example': {'kind': 'edge-sum', 'params': {'k': 3, 'parts': 3, 'size': 2}, 'seed': 7}},
    )

    kind: CorpusKind
    params: dict[str, int] = Field(default_factory=dict)
    seed: int

    def __str__(self) -> str:
        params = ",".join(f"{key}={value}" for key, value in sorted(self.params.items()))
        return f"{self.kind}:{params}:{self.seed}"


class EdgeSumStep(BaseModel):
    """One gluing step of an edge-sum composition."""

    model_config = ConfigDict(frozen=True)

    part: int = Field(..., ge=1, description='Index of the part glued on (the first part is 0).')
    first_vertex: int
    second_vertex: int
    degree: int
    sigma: dict[int, int]


class GeneratedGraph(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    spec: CorpusSpec
    graph: MultiGraph = Field(..., exclude=True)
    steps: tuple[EdgeSumStep, ...] = ()
    planted: tuple[int, int] | None = Field(None, description='Endpoints of the planted parallel edges.')


class GadgetInstance(BaseModel):
    """
    Graph built from (G, a, b, k, s) by gluing k+n+1 copies of G at a and
    wiring n new vertices c_i to every copy of b through paths of length s.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    graph: MultiGraph = Field(..., exclude=True)
    source_order: int = Field(..., description='n = |V(G)|.')
    k: int
    speed: int
    a: int
    b_vertices: tuple[int, ...] = Field(..., description='b_1..b_{k+n+1}.')
    c_vertices: tuple[int, ...] = Field(..., description='c_1..c_n.')
    names: dict[int, str] = Field(..., description='Vertex -> role name.')
    paths: dict[str, tuple[int, ...]] = Field(
        ..., description="'i,j' -> vertices of the path from c_i to b_j (1-based indices)."
    )

    def path(self, i: int, j: int) -> tuple[int, ...]:
        return self.paths[f"{i},{j}"]

    def p_family(self, j: int) -> list[tuple[int, ...]]:
        """Paths ending at b_j."""
        return [self.path(i, j) for i in range(1, len(self.c_vertices) + 1)]

    def q_family(self, i: int) -> list[tuple[int, ...]]:
        """Paths starting at c_i."""
        return [self.path(i, j) for j in range(1, len(self.b_vertices) + 1)]


class ImmersionStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal['delete', 'lift']
    edges: tuple[int, ...]
