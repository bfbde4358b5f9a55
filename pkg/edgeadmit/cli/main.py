import sys
from collections.abc import Sequence

import click
import typer

from edgeadmit.cli.commands import degeneracy, game, structure, testkit
from edgeadmit.cli.common import DOMAIN_ERRORS
from edgeadmit.core.config_logger import logger

app = typer.Typer(
    name="edgeadmit",
    help="s-edge-degeneracy certificates, the edge-blocking game and theta-free decompositions.",
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)


def include_router(target: typer.Typer, router: typer.Typer) -> None:
    """Mounts the commands of `router` at the top level of `target`."""
    target.registered_commands.extend(router.registered_commands)


include_router(app, degeneracy.router)
include_router(app, game.router)
include_router(app, structure.router)
include_router(app, testkit.router)


def run(argv: Sequence[str] | None = None) -> int:
    """
    Runs one command and returns its exit code.

    0 success, 1 property rejected, 2 usage or format error, 3 budget exceeded.
    """
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        result = app(args=args, prog_name="edgeadmit", standalone_mode=False)
    except click.exceptions.ClickException as error:
        logger.warning("⚠️ Usage error: %s", error.format_message())
        error.show()
        return 2
    except click.exceptions.Abort:
        logger.warning("⚠️ Aborted")
        return 1
    except DOMAIN_ERRORS as error:
        logger.exception("❌ Unhandled domain error: %s", error)
        typer.echo(error.detail, err=True)
        return error.exit_code
    return result if isinstance(result, int) else 0


def main() -> None:
    logger.debug("🚀 edgeadmit %s", " ".join(sys.argv[1:]))
    sys.exit(run())
