from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from edgeadmit.schemas.graph import Speed


class Layout(BaseModel):
    """Vertex ordering with the s-edge-support of every vertex towards its predecessors."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={'example': {'order': [0, 1], 'supports': [0, 3], 'speed': None}},
    )

    order: tuple[int, ...] = Field(..., description='Vertices v_1..v_n, every vertex exactly once.')
    supports: tuple[int, ...] = Field(
        ..., description='supports[i] = supp(v_i, {v_1..v_{i-1}}); the first entry is 0.'
    )
    speed: Speed = Field(None, description='Path-length bound; None is unbounded.')

    @model_validator(mode='after')
    def _aligned(self) -> 'Layout':
        if len(self.order) != len(self.supports):
            raise ValueError('order and supports must have the same length')
        if len(set(self.order)) != len(self.order):
            raise ValueError('order repeats a vertex')
        return self

    @computed_field
    @property
    def degeneracy(self) -> int:
        return max(self.supports, default=0)


class HideOut(BaseModel):
    """Vertex set whose members each need at least `k` edges to be cut off from the rest."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...] = Field(..., description='Sorted members of the hide-out.')
    k: int = Field(..., ge=0, description='Support lower bound certified for every member.')
    speed: Speed = Field(None, description='Path-length bound; None is unbounded.')
    supports: dict[int, int] = Field(
        default_factory=dict, description='Member -> supp(member, rest of the hide-out).'
    )

    @model_validator(mode='after')
    def _consistent(self) -> 'HideOut':
        if tuple(sorted(set(self.vertices))) != self.vertices:
            raise ValueError('hide-out vertices must be sorted and distinct')
        if self.supports and set(self.supports) != set(self.vertices):
            raise ValueError('supports must cover exactly the hide-out vertices')
        return self

    @property
    def is_empty(self) -> bool:
        return not self.vertices


class DegeneracyVerdict(BaseModel):
    """Answer to `is the s-edge-degeneracy at most k`, with the matching certificate."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=0)
    speed: Speed = None
    layout: Layout | None = Field(None, description='Present when the degeneracy is at most k.')
    hideout: HideOut | None = Field(None, description='Maximal (k+1)-hide-out, present otherwise.')

    @model_validator(mode='after')
    def _one_branch(self) -> 'DegeneracyVerdict':
        if (self.layout is None) == (self.hideout is None):
            raise ValueError('exactly one of layout and hideout must be set')
        return self

    @computed_field
    @property
    def bounded(self) -> bool:
        return self.layout is not None


class DegeneracyReport(BaseModel):
    """The s-edge-degeneracy with its certificate pair."""

    model_config = ConfigDict(frozen=True)

    delta: int = Field(..., ge=0)
    speed: Speed = None
    layout: Layout = Field(..., description='Layout of degeneracy delta.')
    hideout: HideOut | None = Field(None, description='Maximal delta-hide-out; absent when delta is 0.')


class CertificateCheck(BaseModel):
    """Outcome of re-verifying a certificate against a graph."""

    model_config = ConfigDict(frozen=True)

    certificate: Literal['layout', 'hideout']
    accepted: bool
    reasons: tuple[str, ...] = Field(default=(), description='Why the certificate was rejected.')
