import logging
from pathlib import Path
from typing import Annotated, Optional

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
    witness_lines,
    write_artifact,
)
from edgeadmit.dependencies.services import (
    get_carving_service,
    get_file_repository,
    get_isomorphism_service,
    get_structure_service,
)
from edgeadmit.exceptions.structure import RecomposeError
from edgeadmit.schemas.structure import ImmersionWitness, TreePartition
from edgeadmit.utils.carving_format import render_carving
from edgeadmit.utils.graph_format import compact_labels, serialize_graph
from edgeadmit.utils.partition_format import parse_partition, serialize_partition

router = typer.Typer()
logger = logging.getLogger(__name__)


@router.command("immersion")
def immersion(
    graph_path: GraphArgument,
    k: KOption,
    output_format: FormatOption = OutputFormat.text,
) -> None:
    """Tests for a theta_{k+1} immersion: exit 0 with cut certificates when free, 1 with a witness."""
    logger.info("🚀 immersion %s (k=%s)", graph_path, k)
    with domain_errors("immersion"):
        graph = load_graph(graph_path)
        verdict = get_structure_service().theta_free(graph, k)

    if isinstance(verdict, ImmersionWitness):
        emit(output_format, witness_lines(verdict, k), [record('witness', verdict, k=k)])
        raise typer.Exit(code=1)
    lines = [f"free k={k}"]
    lines.extend(
        f"cut {cut.source} {cut.target} size={cut.size}: {' '.join(map(str, cut.edges))}".rstrip()
        for cut in verdict.cuts
    )
    emit(output_format, lines, [record('free', verdict)])


@router.command("decompose")
def decompose(
    graph_path: GraphArgument,
    k: KOption,
    output: OutputOption = None,
    output_format: FormatOption = OutputFormat.text,
) -> None:
    """
    Tree-partition of adhesion at most k with every torso in A_k.

    Writes the tree, the bags and every torso. Exits 1 with an immersion
    witness when theta_{k+1} is immersed.
    """
    logger.info("🚀 decompose %s (k=%s)", graph_path, k)
    with domain_errors("decompose"):
        graph = load_graph(graph_path)
        service = get_structure_service()
        result = service.decompose(graph, k)
        if isinstance(result, ImmersionWitness):
            partition = torsos = None
        else:
            partition, torsos = result, service.torsos(result)
            text = serialize_partition(partition, torsos)
            write_artifact(output, text)

    if partition is None:
        emit(output_format, witness_lines(result, k), [record('witness', result, k=k)])
        raise typer.Exit(code=1)

    records = [record('partition', partition, adhesion=service.adhesion(partition))]
    records.extend(
        record('torso', torso, edges=[list(edge) for edge in torso.graph.edges()])
        for _, torso in sorted(torsos.items())
    )
    emit(output_format, text.rstrip().splitlines(), records)


@router.command("compose")
def compose(
    partition_path: Annotated[Path, typer.Argument(help="Decomposition file written by `decompose`.")],
    graph_path: Annotated[
        Optional[Path], typer.Option("--graph", help="Graph the bags refer to, for files without torsos.")
    ] = None,
    check_path: Annotated[
        Optional[Path], typer.Option("--check", help="Exit 1 unless the result is isomorphic to this graph.")
    ] = None,
    output: OutputOption = None,
    output_format: FormatOption = OutputFormat.text,
) -> None:
    """Edge-sums the torsos of a decomposition back into one graph."""
    logger.info("🚀 compose %s", partition_path)
    with domain_errors("compose"):
        document = parse_partition(get_file_repository().read_text(partition_path))
        service = get_structure_service()
        if document.torsos:
            graph = service.recompose_from_torsos(document.tree_edges, document.torsos)
        elif graph_path is not None:
            partition = TreePartition(
                nodes=document.nodes,
                tree_edges=document.tree_edges,
                bags=document.bags,
                graph=load_graph(graph_path),
            )
            graph = service.recompose(partition)
        else:
            raise RecomposeError("the file has no torsos section; pass --graph")

        isomorphic = None
        if check_path is not None:
            isomorphic = get_isomorphism_service().is_isomorphic_small(graph, load_graph(check_path))
        graph, _ = compact_labels(graph)
        text = serialize_graph(graph)
        write_artifact(output, text)

    lines = text.rstrip().splitlines()
    extra = {}
    if isomorphic is not None:
        lines.append(f"isomorphic={str(isomorphic).lower()}")
        extra['isomorphic'] = isomorphic
    emit(
        output_format,
        lines,
        [{'record': 'graph', 'n': graph.number_of_vertices(), 'edges': [[u, v] for _, u, v in graph.edges()], **extra}],
    )
    if isomorphic is False:
        raise typer.Exit(code=1)


def _parse_candidates(text: Optional[str]) -> Optional[set[int]]:
    if text is None:
        return None
    try:
        return {int(item) for item in text.split(",") if item.strip()}
    except ValueError as error:
        raise typer.BadParameter(f"expected comma-separated vertex ids, got {text!r}") from error


@router.command("refute")
def refute(
    graph_path: GraphArgument,
    k: KOption,
    candidates_text: Annotated[
        Optional[str], typer.Option("--candidates", help="Comma-separated candidate vertices; default all.")
    ] = None,
    output_format: FormatOption = OutputFormat.text,
) -> None:
    """
    Cuts one candidate off from the others with at most 2k-1 edges.

    Needs a theta_{k+1}-immersion free graph; exits 1 with the theta witness
    otherwise. Prints the carving and the light leaf path behind the bound.
    """
    candidates = _parse_candidates(candidates_text)
    logger.info("🚀 refute %s (k=%s)", graph_path, k)
    with domain_errors("refute"):
        graph = load_graph(graph_path)
        chosen = graph.vertices if candidates is None else candidates
        witness = get_carving_service().refute_hideout(graph, k, chosen)

    lines = [
        f"vertex={witness.vertex} edges={len(witness.edges)} bound={2 * k - 1}",
        f"blocking: {' '.join(map(str, witness.edges))}".rstrip(),
        f"carving: {render_carving(witness.carving)}",
        f"path: {' '.join(map(str, witness.path))}",
    ]
    emit(output_format, lines, [record('refutation', witness, bound=2 * k - 1)])
