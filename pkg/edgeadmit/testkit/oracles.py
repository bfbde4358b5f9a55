"""Exhaustive reference implementations for small instances."""
import logging
from functools import lru_cache
from itertools import combinations

import networkx as nx

from edgeadmit.core.settings import get_settings
from edgeadmit.exceptions.testkit import OracleBudgetError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.game import CopStrategy
from edgeadmit.schemas.graph import Speed
from edgeadmit.services.game import GameService

logger = logging.getLogger(__name__)

settings = get_settings()


def _relevant_edges(graph: MultiGraph, x: int, y: int, speed: Speed) -> list[int]:
    """Edges lying on some (x, y)-walk of length at most `speed`."""
    from_x = graph.distances(x, cutoff=speed)
    from_y = graph.distances(y, cutoff=speed)
    limit = float("inf") if speed is None else speed
    relevant = []
    for edge_id, u, v in graph.edges():
        for near, far in ((u, v), (v, u)):
            if near in from_x and far in from_y and from_x[near] + 1 + from_y[far] <= limit:
                relevant.append(edge_id)
                break
    return relevant


def brute_cut(graph: MultiGraph, x: int, y: int, speed: Speed) -> int:
    """
    Size of a smallest edge set killing every (x, y)-path of length at most `speed`.

    Tries all subsets of the relevant edges in order of increasing size.

    Raises:
        OracleBudgetError: If the graph or its relevant part is too large.
    """
    limits = settings.solver
    if graph.number_of_edges() > limits.brute_force_total_edge_limit:
        raise OracleBudgetError("brute_cut", graph.number_of_edges(), limits.brute_force_total_edge_limit)
    relevant = _relevant_edges(graph, x, y, speed)
    if len(relevant) > limits.brute_force_edge_limit:
        raise OracleBudgetError("brute_cut", len(relevant), limits.brute_force_edge_limit)

    for size in range(len(relevant) + 1):
        for blocked in combinations(relevant, size):
            if y not in graph.distances(x, blocked=blocked, cutoff=speed):
                return size
    return len(relevant)


def brute_supp(graph: MultiGraph, speed: Speed, x: int, targets: frozenset[int]) -> int:
    if not targets:
        return 0
    label = max(graph.vertices) + 1
    merged, _ = graph.identify(targets, label)
    return brute_cut(merged, x, label, speed)


def brute_degeneracy(graph: MultiGraph, speed: Speed) -> int:
    """
    Minimum over all layouts of the maximum support, with supports from `brute_cut`.

    Layouts sharing a prefix set share their best value, so the minimum is
    taken over subsets instead of listing every permutation.

    Raises:
        OracleBudgetError: If the graph has too many vertices.
    """
    limit = settings.solver.brute_force_vertex_limit
    if graph.number_of_vertices() > limit:
        raise OracleBudgetError("brute_degeneracy", graph.number_of_vertices(), limit)

    @lru_cache(maxsize=None)
    def support(vertex: int, before: frozenset[int]) -> int:
        return brute_supp(graph, speed, vertex, before)

    @lru_cache(maxsize=None)
    def best(placed: frozenset[int]) -> int:
        if len(placed) <= 1:
            return 0
        return min(max(best(placed - {last}), support(last, placed - {last})) for last in sorted(placed))

    return best(frozenset(graph.vertices))


def _move_digraph(game: GameService, graph: MultiGraph, speed: Speed, cop: CopStrategy, start: int) -> nx.DiGraph:
    moves = nx.DiGraph()
    moves.add_node(start)
    stack = [start]
    while stack:
        vertex = stack.pop()
        for target in game.escape_targets(graph, speed, cop.blocks[vertex], vertex):
            if target not in moves:
                stack.append(target)
            moves.add_edge(vertex, target)
    return moves


def escape_lengths(
    game: GameService, graph: MultiGraph, speed: Speed, cop: CopStrategy, start: int
) -> dict[int, int | None]:
    """Most moves a robber can still make from each reachable vertex; None when unbounded."""
    moves = _move_digraph(game, graph, speed, cop, start)
    cyclic = set()
    for component in nx.strongly_connected_components(moves):
        if len(component) > 1:
            cyclic |= component
    unbounded = set(cyclic)
    for vertex in cyclic:
        unbounded |= nx.ancestors(moves, vertex)

    bounded = moves.subgraph(set(moves) - unbounded)
    lengths: dict[int, int | None] = {vertex: None for vertex in unbounded}
    for vertex in reversed(list(nx.topological_sort(bounded))):
        lengths[vertex] = max((lengths[target] + 1 for target in moves.successors(vertex)), default=0)
    return lengths


def longest_escape(game: GameService, graph: MultiGraph, speed: Speed, cop: CopStrategy, start: int) -> int | None:
    """
    Longest run of legal moves against a positional cop, from `start`.

    The robber is captured in the round after its last move. None means the
    robber can move forever.
    """
    return escape_lengths(game, graph, speed, cop, start)[start]


class AdversarialRobber:
    """Robber that always moves to the vertex with the longest remaining escape."""

    def __init__(self, game: GameService, graph: MultiGraph, speed: Speed, cop: CopStrategy, start: int):
        self.game = game
        self.graph = graph
        self.speed = speed
        self.start = start
        self.lengths = escape_lengths(game, graph, speed, cop, start)

    def move(self, blocked: tuple[int, ...], position: int) -> int:
        options = self.game.escape_targets(self.graph, self.speed, blocked, position)
        if not options:
            return position

        def rank(vertex: int) -> tuple[int, int]:
            length = self.lengths.get(vertex)
            return (-(10 ** 9) if length is None else -length, vertex)

        return min(options, key=rank)
