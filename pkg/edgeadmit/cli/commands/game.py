import logging
import random
from typing import Annotated, Optional

import typer

from edgeadmit.cli.common import (
    FormatOption,
    GraphArgument,
    KOption,
    OutputFormat,
    SpeedOption,
    domain_errors,
    emit,
    load_graph,
    record,
)
from edgeadmit.dependencies.services import get_degeneracy_service, get_game_service
from edgeadmit.exceptions.game import GameSetupError
from edgeadmit.testkit.corpus import random_cop_strategy
from edgeadmit.testkit.oracles import AdversarialRobber

router = typer.Typer()
logger = logging.getLogger(__name__)


@router.command("play")
def play(
    graph_path: GraphArgument,
    k: KOption,
    speed: SpeedOption = "inf",
    start: Annotated[Optional[int], typer.Option("--start", help="Robber start vertex.")] = None,
    rounds: Annotated[Optional[int], typer.Option("--rounds", min=1, help="Round limit.")] = None,
    seed: Annotated[int, typer.Option("--seed", help="Seed of the random cop used against a hide-out.")] = 0,
    output_format: FormatOption = OutputFormat.text,
) -> None:
    """
    Plays the certificate-driven game for cop budget k.

    With degeneracy at most k the layout cop faces the longest-surviving
    robber and should capture it. Otherwise the hide-out robber faces a
    random cop of cost k and should evade. Exits 0 when the playout matches
    the certificate's prediction, 1 otherwise.
    """
    logger.info("🚀 play %s (k=%s, s=%s)", graph_path, k, speed)
    with domain_errors("play"):
        graph = load_graph(graph_path)
        if graph.number_of_vertices() == 0:
            raise GameSetupError("the board has no vertices")
        game = get_game_service()
        verdict = get_degeneracy_service().check_degeneracy(graph, speed, k)
        if verdict.layout is not None:
            prediction = 'captured'
            cop = game.cop_from_layout(graph, speed, verdict.layout)
            robber_start = graph.sorted_vertices()[0] if start is None else start
            if not graph.has_vertex(robber_start):
                raise GameSetupError(f"robber starts at unknown vertex {robber_start}")
            robber = AdversarialRobber(game, graph, speed, cop, robber_start)
        else:
            prediction = 'evaded'
            cop = random_cop_strategy(graph, k, random.Random(seed))
            robber = game.robber_from_hideout(graph, speed, verdict.hideout)
            if start is not None:
                robber = robber.model_copy(update={'start': start})
        scenario = game.play(graph, speed, cop, robber, max_rounds=rounds)

    lines = [f"cost={cop.cost} prediction={prediction}", *scenario.trace_lines()]
    emit(output_format, lines, [record('scenario', scenario, cost=cop.cost, prediction=prediction)])
    if scenario.outcome != prediction:
        raise typer.Exit(code=1)
