import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgeadmit.exceptions.game import GameSetupError, StrategyError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.certificates import HideOut
from edgeadmit.schemas.game import CopStrategy, GameRound, RobberStrategy
from edgeadmit.testkit.corpus import random_cop_strategy
from edgeadmit.testkit.oracles import AdversarialRobber, longest_escape
from strategies import multigraphs, speeds


class JumpingRobber:
    """Ignores the blocked edges and always jumps to a fixed vertex."""

    def __init__(self, start: int, target: int):
        self.start = start
        self.target = target

    def move(self, blocked: tuple[int, ...], position: int) -> int:
        return self.target


def test_layout_cop_captures_theta_robber_in_first_round(degeneracy_service, game_service):
    theta = MultiGraph.theta(3)
    cop = game_service.cop_from_layout(theta, None, degeneracy_service.build_layout(theta, None, [0, 1]))

    scenario = game_service.play(theta, None, cop, RobberStrategy(start=1))

    assert cop.cost == 3
    assert scenario.outcome == 'captured'
    assert scenario.outcome_round == 1
    assert scenario.trace_lines() == ["round 1: blocked=[0,1,2] robber=1", "outcome: captured@1"]


def test_hideout_robber_evades_cheap_cop_on_theta(degeneracy_service, game_service):
    theta = MultiGraph.theta(3)
    robber = game_service.robber_from_hideout(theta, None, degeneracy_service.maximal_hideout(theta, None, 3))
    cop = CopStrategy(blocks={0: (0, 1), 1: (1, 2)})

    scenario = game_service.play(theta, None, cop, robber, max_rounds=20)

    assert scenario.outcome == 'evaded'
    assert scenario.outcome_round == 20
    assert [game_round.robber for game_round in scenario.rounds[:4]] == [1, 0, 1, 0]


def test_hideout_robber_is_trapped_when_everything_is_blocked(degeneracy_service, game_service):
    theta = MultiGraph.theta(3)
    robber = game_service.robber_from_hideout(theta, None, degeneracy_service.maximal_hideout(theta, None, 3))
    cop = CopStrategy(blocks={0: (0, 1, 2), 1: (0, 1, 2)})

    scenario = game_service.play(theta, None, cop, robber)

    assert scenario.outcome == 'captured'
    assert scenario.outcome_round == 1


def test_single_vertex_robber_is_captured_at_once(game_service):
    lonely = MultiGraph.from_pairs(1, [])

    scenario = game_service.play(lonely, None, CopStrategy(blocks={0: ()}), RobberStrategy(start=0))

    assert scenario.outcome == 'captured'
    assert scenario.outcome_round == 1


def test_robber_moves_over_budget_unless_told_to_concede(game_service):
    theta = MultiGraph.theta(3)
    cop = CopStrategy(blocks={0: (0, 1), 1: (0, 1)})

    moving = game_service.play(theta, None, cop, RobberStrategy(start=0, budget=1), max_rounds=5)
    conceding = game_service.play(
        theta, None, cop, RobberStrategy(start=0, budget=1, concede_over_budget=True), max_rounds=5
    )

    assert moving.outcome == 'evaded'
    assert conceding.outcome == 'captured'


def test_illegal_move_is_reported_as_fault(game_service):
    path = MultiGraph.path(3)
    cop = CopStrategy(blocks={0: (0,), 1: (), 2: ()})

    scenario = game_service.play(path, None, cop, JumpingRobber(start=0, target=2))

    assert scenario.outcome == 'fault'
    assert scenario.fault_reason
    assert scenario.trace_lines()[-1] == "outcome: fault"
    assert game_service.validate_scenario(path, None, cop, scenario)


def test_speed_limits_robber_moves(game_service):
    path = MultiGraph.path(4)
    cop = CopStrategy(blocks={0: (), 1: (), 2: (), 3: ()})

    assert game_service.escape_targets(path, 1, (), 0) == (1,)
    assert game_service.escape_targets(path, None, (), 0) == (1, 2, 3)
    assert game_service.escape_targets(path, None, (1,), 0) == (1,)
    assert game_service.play(path, 1, cop, JumpingRobber(start=0, target=2)).outcome == 'fault'


def test_play_rejects_bad_setup(game_service):
    path = MultiGraph.path(3)
    cop = CopStrategy(blocks={0: (), 1: (), 2: ()})

    with pytest.raises(GameSetupError):
        game_service.play(path, None, cop, RobberStrategy(start=0), max_rounds=0)
    with pytest.raises(GameSetupError):
        game_service.play(path, None, cop, RobberStrategy(start=7))
    with pytest.raises(StrategyError):
        game_service.play(path, None, CopStrategy(blocks={0: ()}), RobberStrategy(start=0))
    with pytest.raises(StrategyError):
        game_service.play(path, None, CopStrategy(blocks={0: (9,), 1: (), 2: ()}), RobberStrategy(start=0))


def test_robber_from_hideout_needs_a_valid_hideout(game_service):
    with pytest.raises(StrategyError):
        game_service.robber_from_hideout(MultiGraph.cycle(4), None, HideOut(vertices=(), k=2))
    with pytest.raises(StrategyError):
        game_service.robber_from_hideout(MultiGraph.path(3), None, HideOut(vertices=(0, 1, 2), k=2))


def test_cop_from_layout_rejects_partial_layout(degeneracy_service, game_service):
    layout = degeneracy_service.build_layout(MultiGraph.path(2), None, [0, 1])

    with pytest.raises(StrategyError):
        game_service.cop_from_layout(MultiGraph.path(3), None, layout)


def test_validate_scenario_rejects_tampered_trace(degeneracy_service, game_service):
    cycle = MultiGraph.cycle(4)
    robber = game_service.robber_from_hideout(cycle, None, degeneracy_service.maximal_hideout(cycle, None, 2))
    cop = CopStrategy(blocks={vertex: cycle.incident_edges(vertex)[:1] for vertex in cycle.vertices})
    scenario = game_service.play(cycle, None, cop, robber, max_rounds=8)
    first = scenario.rounds[0]
    tampered = scenario.model_copy(
        update={'rounds': (GameRound(index=1, blocked=(), robber=first.robber), *scenario.rounds[1:])}
    )

    assert game_service.validate_scenario(cycle, None, cop, scenario)
    assert not game_service.validate_scenario(cycle, None, cop, tampered)
    assert not game_service.validate_scenario(cycle, None, cop, scenario.model_copy(update={'outcome': 'captured'}))


@pytest.mark.parametrize(
    ("graph", "expected"),
    [(MultiGraph.theta(3), 3), (MultiGraph.cycle(4), 2), (MultiGraph.path(4), 1)],
)
def test_capture_cost_examples(game_service, graph, expected):
    assert game_service.capture_cost(graph, None) == expected


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_vertices=6, max_edges=9), speeds)
def test_layout_cop_captures_every_robber_before_round_n(degeneracy_service, game_service, graph, speed):
    report = degeneracy_service.edge_degeneracy(graph, speed)
    cop = game_service.cop_from_layout(graph, speed, report.layout)
    n = graph.number_of_vertices()

    assert cop.cost == report.delta
    for start in graph.sorted_vertices():
        escape = longest_escape(game_service, graph, speed, cop, start)
        assert escape is not None and escape <= n - 1

        robber = AdversarialRobber(game_service, graph, speed, cop, start)
        scenario = game_service.play(graph, speed, cop, robber)
        assert scenario.outcome == 'captured'
        assert scenario.outcome_round == escape + 1
        assert game_service.validate_scenario(graph, speed, cop, scenario)


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_vertices=6, max_edges=10, min_vertices=2), speeds, st.integers(0, 2**32 - 1))
def test_hideout_robber_outlasts_every_cheaper_cop(degeneracy_service, game_service, graph, speed, seed):
    report = degeneracy_service.edge_degeneracy(graph, speed)
    if report.hideout is None:
        return
    k = report.delta - 1
    robber = game_service.robber_from_hideout(graph, speed, report.hideout)
    cop = random_cop_strategy(graph, k, random.Random(seed))
    max_rounds = 10 * graph.number_of_vertices()

    scenario = game_service.play(graph, speed, cop, robber, max_rounds=max_rounds)

    assert cop.cost <= k
    assert scenario.outcome == 'evaded'
    assert scenario.outcome_round == max_rounds
    assert all(game_round.robber in report.hideout.vertices for game_round in scenario.rounds)
