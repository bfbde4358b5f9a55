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
    SpeedOption,
    domain_errors,
    emit,
    load_graph,
    parse_speed_option,
    record,
    write_artifact,
)
from edgeadmit.dependencies.services import get_degeneracy_service, get_file_repository
from edgeadmit.exceptions.degeneracy import CertificateFormatError
from edgeadmit.schemas.certificates import HideOut, Layout
from edgeadmit.utils.certificate_format import parse_certificate, serialize_hideout, serialize_layout

router = typer.Typer()
logger = logging.getLogger(__name__)


@router.command("degeneracy")
def degeneracy(
    graph_path: GraphArgument,
    speed: SpeedOption = "inf",
    output_format: FormatOption = OutputFormat.text,
) -> None:
    """Computes the s-edge-degeneracy with a layout and a hide-out certificate."""
    logger.info("🚀 degeneracy %s (s=%s)", graph_path, speed)
    with domain_errors("degeneracy"):
        graph = load_graph(graph_path)
        report = get_degeneracy_service().edge_degeneracy(graph, speed)

    lines = [f"delta={report.delta}", serialize_layout(report.layout).rstrip()]
    records = [
        {'record': 'degeneracy', 'delta': report.delta, 'speed': report.speed},
        record('layout', report.layout),
    ]
    if report.hideout is not None:
        lines.append(serialize_hideout(report.hideout).rstrip())
        records.append(record('hideout', report.hideout))
    emit(output_format, lines, records)


@router.command("layout")
def layout(
    graph_path: GraphArgument,
    k: KOption,
    speed: SpeedOption = "inf",
    output: OutputOption = None,
    output_format: FormatOption = OutputFormat.text,
) -> None:
    """
    Decides whether the s-edge-degeneracy is at most k.

    Prints a layout (exit 0) or the maximal (k+1)-hide-out refuting it (exit 1).
    """
    logger.info("🚀 layout %s (k=%s, s=%s)", graph_path, k, speed)
    with domain_errors("layout"):
        graph = load_graph(graph_path)
        verdict = get_degeneracy_service().check_degeneracy(graph, speed, k)
        certificate = verdict.layout if verdict.layout is not None else verdict.hideout
        text = serialize_layout(certificate) if verdict.bounded else serialize_hideout(certificate)
        write_artifact(output, text)

    emit(output_format, [text.rstrip()], [record('layout' if verdict.bounded else 'hideout', certificate)])
    if not verdict.bounded:
        raise typer.Exit(code=1)


@router.command("hideout")
def hideout(
    graph_path: GraphArgument,
    k: KOption,
    speed: SpeedOption = "inf",
    output: OutputOption = None,
    output_format: FormatOption = OutputFormat.text,
) -> None:
    """Prints the unique maximal (k, s)-hide-out; exits 1 when it is empty."""
    logger.info("🚀 hideout %s (k=%s, s=%s)", graph_path, k, speed)
    with domain_errors("hideout"):
        graph = load_graph(graph_path)
        found = get_degeneracy_service().maximal_hideout(graph, speed, k)
        text = serialize_hideout(found)
        write_artifact(output, text)

    emit(output_format, [text.rstrip()], [record('hideout', found)])
    if found.is_empty:
        raise typer.Exit(code=1)


@router.command("verify")
def verify(
    graph_path: GraphArgument,
    layout_path: Annotated[Optional[Path], typer.Option("--layout", help="Layout certificate file.")] = None,
    hideout_path: Annotated[Optional[Path], typer.Option("--hideout", help="Hide-out certificate file.")] = None,
    speed_text: Annotated[
        Optional[str], typer.Option("--speed", help="Defaults to the speed stored in the certificate.")
    ] = None,
    k: Annotated[Optional[int], typer.Option("--k", min=0, help="Degeneracy bound to certify or refute.")] = None,
    output_format: FormatOption = OutputFormat.text,
) -> None:
    """
    Re-checks a certificate against a graph: exit 0 when accepted, 1 when rejected.

    A layout certifies degeneracy at most k; a hide-out certifies degeneracy above k.
    """
    if (layout_path is None) == (hideout_path is None):
        raise typer.BadParameter("pass exactly one of --layout and --hideout")
    certificate_path = layout_path if layout_path is not None else hideout_path
    logger.info("🔍 verify %s against %s", certificate_path, graph_path)

    with domain_errors("verify"):
        graph = load_graph(graph_path)
        certificate = parse_certificate(get_file_repository().read_text(certificate_path))
        service = get_degeneracy_service()
        if layout_path is not None:
            if not isinstance(certificate, Layout):
                raise CertificateFormatError(f"{certificate_path} holds a hide-out, not a layout")
            check_speed = certificate.speed if speed_text is None else parse_speed_option(speed_text)
            check = service.verify_layout(graph, check_speed, certificate, k)
        else:
            if not isinstance(certificate, HideOut):
                raise CertificateFormatError(f"{certificate_path} holds a layout, not a hide-out")
            check_speed = certificate.speed if speed_text is None else parse_speed_option(speed_text)
            check = service.verify_hideout(graph, check_speed, certificate, k)

    lines = [f"{check.certificate}: {'accepted' if check.accepted else 'rejected'}"]
    lines.extend(f"  {reason}" for reason in check.reasons)
    emit(output_format, lines, [record('check', check)])
    if not check.accepted:
        raise typer.Exit(code=1)
