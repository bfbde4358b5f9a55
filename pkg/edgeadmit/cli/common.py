"""Options, output helpers and the error boundary shared by all commands."""
import json
import logging
from collections.abc import Iterable, Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Annotated, Any, Optional

import typer
from pydantic import BaseModel

from edgeadmit.dependencies.services import get_file_repository
from edgeadmit.exceptions.carving import CarvingError, ThetaImmersionError
from edgeadmit.exceptions.cuts import CutServiceError, SearchBudgetExceededError
from edgeadmit.exceptions.degeneracy import CertificateError, CertificateFormatError, LayoutError
from edgeadmit.exceptions.game import GameSetupError, StrategyError
from edgeadmit.exceptions.graph import (
    GraphFormatError,
    GraphOperationError,
    IsomorphismBudgetError,
    LoopError,
    UnknownEdgeError,
    UnknownVertexError,
)
from edgeadmit.exceptions.repositories import FileRepositoryError
from edgeadmit.exceptions.structure import DecompositionError, EdgeSumError, PartitionError, RecomposeError
from edgeadmit.exceptions.testkit import CorpusSpecError, GadgetError, OracleBudgetError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.graph import Speed, parse_speed
from edgeadmit.schemas.structure import ImmersionWitness

logger = logging.getLogger(__name__)

DOMAIN_ERRORS = (
    CarvingError,
    CertificateError,
    CertificateFormatError,
    CorpusSpecError,
    CutServiceError,
    DecompositionError,
    EdgeSumError,
    FileRepositoryError,
    GadgetError,
    GameSetupError,
    GraphFormatError,
    GraphOperationError,
    IsomorphismBudgetError,
    LayoutError,
    LoopError,
    OracleBudgetError,
    PartitionError,
    RecomposeError,
    SearchBudgetExceededError,
    StrategyError,
    ThetaImmersionError,
    UnknownEdgeError,
    UnknownVertexError,
)


class OutputFormat(str, Enum):
    text = 'text'
    json_lines = 'json-lines'


def parse_speed_option(value: str | None) -> Speed:
    if value is None:
        return None
    try:
        return parse_speed(value)
    except ValueError as error:
        raise typer.BadParameter(f"expected a positive integer or 'inf', got {value!r}") from error


GraphArgument = Annotated[
    Path, typer.Argument(help="Graph file: `n m` header, then one `u v` line per edge.", show_default=False)
]
SpeedOption = Annotated[
    str, typer.Option("--speed", callback=parse_speed_option, help="Path-length bound: positive integer or inf.")
]
KOption = Annotated[int, typer.Option("--k", min=0, help="Support / cut threshold.")]
FormatOption = Annotated[
    OutputFormat, typer.Option("--format", case_sensitive=False, help="text or json-lines.")
]
OutputOption = Annotated[Optional[Path], typer.Option("--output", help="Also write the main artifact to this file.")]


def load_graph(path: Path) -> MultiGraph:
    """Reads and validates a graph file before any work is done."""
    graph = get_file_repository().read_graph(path)
    logger.info("📦 Loaded %s: n=%s m=%s", path, graph.number_of_vertices(), graph.number_of_edges())
    return graph


def write_artifact(path: Optional[Path], text: str) -> None:
    if path is not None:
        get_file_repository().write_text(path, text)


def record(kind: str, model: BaseModel, **extra: Any) -> dict[str, Any]:
    """One json-lines record: the model's fields tagged with its kind."""
    return {'record': kind, **model.model_dump(mode='json'), **extra}


def emit(output_format: OutputFormat, lines: Iterable[str], records: Iterable[dict[str, Any]]) -> None:
    if output_format is OutputFormat.json_lines:
        for item in records:
            typer.echo(json.dumps(item, sort_keys=True))
    else:
        for line in lines:
            typer.echo(line)


def witness_lines(witness: ImmersionWitness, k: int) -> list[str]:
    lines = [f"immersion k={k} source={witness.source} target={witness.target} order={witness.order}"]
    lines.extend(
        f"path {index}: {' '.join(map(str, edges))}" for index, edges in enumerate(witness.paths, start=1)
    )
    return lines


@contextmanager
def domain_errors(command: str) -> Iterator[None]:
    """Turns library exceptions into their exit codes, with the user-facing detail on stderr."""
    try:
        yield
    except DOMAIN_ERRORS as error:
        if error.exit_code == 3:
            logger.warning("⚠️ %s: budget exceeded. Details: %s", command, error)
        else:
            logger.error("❌ %s failed. Details: %s", command, error)
        typer.echo(error.detail, err=True)
        raise typer.Exit(code=error.exit_code) from error
