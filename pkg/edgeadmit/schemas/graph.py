from pydantic import BaseModel, ConfigDict, Field, computed_field

Speed = int | None
"""Robber / path-length bound. `None` is the unbounded speed, written `inf` in files."""


def format_speed(speed: Speed) -> str:
    return "inf" if speed is None else str(speed)


def parse_speed(text: str) -> Speed:
    """Parses `inf` or a positive integer."""
    value = text.strip().lower()
    if value in ("inf", "infinity", "∞"):
        return None
    speed = int(value)
    if speed < 1:
        raise ValueError(f"speed must be a positive integer or 'inf', got {text!r}")
    return speed


class VertexMergeMap(BaseModel):
    """Result bookkeeping of a vertex identification."""

    model_config = ConfigDict(frozen=True)

    mapping: dict[int, int] = Field(..., description="Original vertex -> vertex after identification.")
    dropped_edges: tuple[int, ...] = Field(
        default=(), description="Edge ids with both endpoints in the identified set (became loops)."
    )


class Cut(BaseModel):
    """Bipartition (X, V \\ X) of the vertex set together with its crossing edges."""

    model_config = ConfigDict(frozen=True)

    side: tuple[int, ...] = Field(..., description="Sorted vertices of X.")
    edges: tuple[int, ...] = Field(..., description="Sorted ids of E(X, V \\ X).")

    @computed_field
    @property
    def size(self) -> int:
        return len(self.edges)


class BlockingSet(BaseModel):
    """Edge set meeting every s-path from `source` to the `targets`."""

    model_config = ConfigDict(frozen=True)

    edges: tuple[int, ...] = Field(..., description="Sorted edge ids of the blocking set.")
    speed: Speed = Field(None, description="Path-length bound; None is unbounded.")
    source: int
    targets: tuple[int, ...] = Field(..., description="Sorted target vertices.")

    @computed_field
    @property
    def size(self) -> int:
        return len(self.edges)


class EdgeDisjointPaths(BaseModel):
    """Maximum family of pairwise edge-disjoint (source, target)-paths."""

    model_config = ConfigDict(frozen=True)

    source: int
    target: int
    paths: tuple[tuple[int, ...], ...] = Field(..., description="Each path as its edge ids, source to target.")
    vertex_paths: tuple[tuple[int, ...], ...] = Field(..., description="Each path as its vertex sequence.")

    @computed_field
    @property
    def count(self) -> int:
        return len(self.paths)
