import logging
from collections import deque
from collections.abc import Iterable
from typing import Protocol

from edgeadmit.exceptions.game import GameSetupError, StrategyError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.certificates import HideOut, Layout
from edgeadmit.schemas.game import CopStrategy, GameRound, GameScenario, RobberStrategy
from edgeadmit.schemas.graph import Speed
from edgeadmit.services.cuts import CutService
from edgeadmit.services.degeneracy import DegeneracyService

logger = logging.getLogger(__name__)


def surviving_order(graph: MultiGraph, position: int, blocked: Iterable[int], speed: Speed) -> list[int]:
    """
    Vertices s-reachable from `position` in G minus `blocked`, in BFS discovery order.

    Neighbors are scanned by increasing id, so the first discovered vertex of
    any set is the endpoint of the (length, vertex sequence)-least path to it.
    """
    blocked_set = frozenset(blocked)
    depth = {position: 0}
    order = []
    queue = deque([position])
    while queue:
        vertex = queue.popleft()
        if speed is not None and depth[vertex] >= speed:
            continue
        open_neighbors = {
            graph.other_end(edge_id, vertex)
            for edge_id in graph.incident_edges(vertex)
            if edge_id not in blocked_set
        }
        for neighbor in sorted(open_neighbors):
            if neighbor not in depth:
                depth[neighbor] = depth[vertex] + 1
                order.append(neighbor)
                queue.append(neighbor)
    return order


class EscapeRule(Protocol):
    """Robber side of a playout."""

    start: int

    def move(self, blocked: tuple[int, ...], position: int) -> int: ...


class HideOutRobber:
    """Executable form of a RobberStrategy on a fixed graph."""

    def __init__(self, graph: MultiGraph, strategy: RobberStrategy):
        self.graph = graph
        self.strategy = strategy
        self.start = strategy.start
        self._targets = None if strategy.targets is None else frozenset(strategy.targets)

    def move(self, blocked: tuple[int, ...], position: int) -> int:
        budget = self.strategy.budget
        if self.strategy.concede_over_budget and budget is not None and len(blocked) > budget:
            return position
        for vertex in surviving_order(self.graph, position, blocked, self.strategy.speed):
            if self._targets is None or vertex in self._targets:
                return vertex
        return position


class GameService:
    """Edge-blocking cops and robber: strategies from certificates and playouts."""

    def __init__(self, cut_service: CutService, degeneracy_service: DegeneracyService, max_rounds_factor: int):
        self.cut_service = cut_service
        self.degeneracy_service = degeneracy_service
        self.max_rounds_factor = max_rounds_factor

    def cop_from_layout(self, graph: MultiGraph, speed: Speed, layout: Layout) -> CopStrategy:
        """
        Cops at v_i block a minimum separator between v_i and its predecessors.

        The robber can then only move forward in the layout, and the cost
        equals the layout degeneracy.
        """
        order = layout.order
        if set(order) != graph.vertices or len(order) != graph.number_of_vertices():
            raise StrategyError("the layout is not a permutation of the vertex set")
        blocks = {
            vertex: self.cut_service.supp(graph, speed, vertex, order[:position]).edges
            for position, vertex in enumerate(order)
        }
        return CopStrategy(blocks=blocks)

    def robber_from_hideout(self, graph: MultiGraph, speed: Speed, hideout: HideOut) -> RobberStrategy:
        """
        Robber that stays inside a verified (k+1)-hide-out.

        Raises:
            StrategyError: If the hide-out is empty or does not verify.
        """
        if not hideout.vertices:
            raise StrategyError("an empty hide-out gives no escape strategy")
        check = self.degeneracy_service.verify_hideout(graph, speed, hideout)
        if not check.accepted:
            raise StrategyError("hide-out does not verify: " + "; ".join(check.reasons))
        return RobberStrategy(
            start=hideout.vertices[0],
            speed=speed,
            targets=hideout.vertices,
            budget=hideout.k - 1,
        )

    def escape_rule(self, graph: MultiGraph, robber: RobberStrategy) -> HideOutRobber:
        """Executable robber playing `robber` on `graph`."""
        return HideOutRobber(graph, robber)

    def escape_targets(self, graph: MultiGraph, speed: Speed, blocked: Iterable[int], position: int) -> tuple[int, ...]:
        """Legal robber moves other than staying put."""
        return tuple(sorted(surviving_order(graph, position, blocked, speed)))

    def play(
        self,
        graph: MultiGraph,
        speed: Speed,
        cop: CopStrategy,
        robber: RobberStrategy | EscapeRule,
        max_rounds: int | None = None,
    ) -> GameScenario:
        """
        Plays rounds until capture, an illegal robber move, or `max_rounds` moves.

        Args:
            graph: Board.
            speed: Robber speed, None for unbounded.
            cop: Total positional cop strategy.
            robber: RobberStrategy or any object with `start` and `move`.
            max_rounds: Round limit, defaults to max_rounds_factor * |V|.

        Raises:
            GameSetupError: If max_rounds < 1 or the robber starts off the board.
            StrategyError: If the cop strategy is not total or blocks unknown edges.
        """
        if max_rounds is None:
            max_rounds = self.max_rounds_factor * graph.number_of_vertices()
        if max_rounds < 1:
            raise GameSetupError(f"max_rounds must be at least 1, got {max_rounds}")
        self._check_cop(graph, cop)
        rule = self.escape_rule(graph, robber) if isinstance(robber, RobberStrategy) else robber
        if not graph.has_vertex(rule.start):
            raise GameSetupError(f"robber starts at unknown vertex {rule.start}")

        position = rule.start
        rounds = []
        for index in range(1, max_rounds + 1):
            blocked = cop.blocks[position]
            target = rule.move(blocked, position)
            rounds.append(GameRound(index=index, blocked=blocked, robber=target))
            if target == position:
                logger.info("✅ Robber captured at round %s (vertex %s)", index, position)
                return GameScenario(start=rule.start, rounds=tuple(rounds), outcome='captured', outcome_round=index)
            if target not in self.escape_targets(graph, speed, blocked, position):
                reason = f"move {position} -> {target} has no surviving s-path"
                logger.warning("❌ Strategy fault at round %s: %s", index, reason)
                return GameScenario(
                    start=rule.start, rounds=tuple(rounds), outcome='fault', outcome_round=index, fault_reason=reason
                )
            position = target

        logger.info("⚠️ Robber evaded for %s rounds", max_rounds)
        return GameScenario(start=rule.start, rounds=tuple(rounds), outcome='evaded', outcome_round=max_rounds)

    def validate_scenario(self, graph: MultiGraph, speed: Speed, cop: CopStrategy, scenario: GameScenario) -> bool:
        """Replays a trace and checks every round against the cop strategy and the move rule."""
        position = scenario.start
        for offset, game_round in enumerate(scenario.rounds):
            last = offset == len(scenario.rounds) - 1
            if game_round.index != offset + 1 or game_round.blocked != cop.blocks.get(position):
                return False
            if game_round.robber == position:
                return last and scenario.outcome == 'captured' and scenario.outcome_round == game_round.index
            legal = game_round.robber in self.escape_targets(graph, speed, game_round.blocked, position)
            if not legal:
                return last and scenario.outcome == 'fault'
            position = game_round.robber
        return scenario.outcome == 'evaded' and scenario.outcome_round == len(scenario.rounds)

    def capture_cost(self, graph: MultiGraph, speed: Speed) -> int:
        """Least cop budget that captures every speed-s robber; equals the s-edge-degeneracy."""
        return self.degeneracy_service.edge_degeneracy(graph, speed).delta

    @staticmethod
    def _check_cop(graph: MultiGraph, cop: CopStrategy) -> None:
        missing = sorted(graph.vertices - set(cop.blocks))
        if missing:
            raise StrategyError(f"cop strategy is undefined on vertices {missing}")
        for vertex, edges in cop.blocks.items():
            unknown = [edge_id for edge_id in edges if not graph.has_edge(edge_id)]
            if unknown:
                raise StrategyError(f"cop strategy at {vertex} blocks unknown edges {unknown}")
