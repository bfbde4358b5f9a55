import logging
from typing import Annotated

import typer

from edgeadmit.cli.common import (
    FormatOption,
    GraphArgument,
    KOption,
    OutputFormat,
    OutputOption,
    domain_errors,
    emit,
    load_graph,
    record,
    write_artifact,
)
from edgeadmit.dependencies.services import get_structure_service
from edgeadmit.testkit.corpus import generate, parse_corpus_spec
from edgeadmit.testkit.gadget import gadget as build_gadget
from edgeadmit.utils.graph_format import serialize_graph

router = typer.Typer()
logger = logging.getLogger(__name__)


@router.command("gadget")
def gadget(
    graph_path: GraphArgument,
    a: Annotated[int, typer.Option("--a", help="Source terminal.")],
    b: Annotated[int, typer.Option("--b", help="Target terminal.")],
    k: KOption,
    speed: Annotated[int, typer.Option("--speed", min=2, help="Finite path-length bound, at least 2.")],
    output: OutputOption = None,
    output_format: FormatOption = OutputFormat.text,
) -> None:
    """Builds the graph whose (k+n)-bounded degeneracy encodes cut(a, b) <= k."""
    logger.info("🚀 gadget %s (a=%s, b=%s, k=%s, s=%s)", graph_path, a, b, k, speed)
    with domain_errors("gadget"):
        instance = build_gadget(load_graph(graph_path), a, b, k, speed)
        text = serialize_graph(instance.graph)
        write_artifact(output, text)

    header = f"# gadget n={instance.source_order} k={k} s={speed} threshold={k + instance.source_order}"
    emit(
        output_format,
        [header, *text.rstrip().splitlines()],
        [record('gadget', instance, order=instance.graph.number_of_vertices(), size=instance.graph.number_of_edges())],
    )


@router.command("gen")
def gen(
    spec: Annotated[str, typer.Argument(help="`kind:key=value,...:seed`, e.g. `edge-sum:k=3,parts=3:7`.")],
    output: OutputOption = None,
    output_format: FormatOption = OutputFormat.text,
) -> None:
    """Generates a corpus graph; the seed is part of the spec and is mandatory."""
    logger.info("🚀 gen %s", spec)
    with domain_errors("gen"):
        generated = generate(parse_corpus_spec(spec), get_structure_service())
        text = serialize_graph(generated.graph)
        write_artifact(output, text)

    lines = [f"# {generated.spec}", *text.rstrip().splitlines()]
    emit(
        output_format,
        lines,
        [record('generated', generated, edges=[[u, v] for _, u, v in generated.graph.edges()])],
    )
