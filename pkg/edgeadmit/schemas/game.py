from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field

from edgeadmit.schemas.graph import Speed


class CopStrategy(BaseModel):
    """Positional cop strategy: robber position -> edges blocked next round."""

    model_config = ConfigDict(frozen=True)

    blocks: dict[int, tuple[int, ...]] = Field(..., description='Vertex -> sorted blocked edge ids.')

    @computed_field
    @property
    def cost(self) -> int:
        return max((len(edges) for edges in self.blocks.values()), default=0)


class RobberStrategy(BaseModel):
    """
    Positional robber strategy of the hide-out kind.

    The robber runs to the first hide-out vertex reached by a surviving s-path
    and stays put when none survives.
    """

    model_config = ConfigDict(frozen=True)

    start: int
    speed: Speed = None
    targets: tuple[int, ...] | None = Field(
        None, description='Vertices the robber runs to; None means any vertex.'
    )
    budget: int | None = Field(
        None, ge=0, description='Largest blocked-set size the robber is guaranteed to beat.'
    )
    concede_over_budget: bool = Field(
        False, description='Stay put whenever more than `budget` edges are blocked, even if a move survives.'
    )


class GameRound(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=1)
    blocked: tuple[int, ...]
    robber: int


class GameScenario(BaseModel):
    """Deterministic playout of a cop strategy against a robber."""

    model_config = ConfigDict(frozen=True)

    start: int
    rounds: tuple[GameRound, ...]
    outcome: Literal['captured', 'evaded', 'fault']
    outcome_round: int = Field(..., ge=0, description='Capture round, rounds played, or the faulty round.')
    fault_reason: str | None = None

    def trace_lines(self) -> list[str]:
        lines = [
            f"round {game_round.index}: blocked=[{','.join(map(str, game_round.blocked))}] robber={game_round.robber}"
            for game_round in self.rounds
        ]
        if self.outcome == 'fault':
            lines.append("outcome: fault")
        else:
            lines.append(f"outcome: {self.outcome}@{self.outcome_round}")
        return lines
