import logging
from pathlib import Path

from edgeadmit.exceptions.repositories import FileRepositoryError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.utils.graph_format import parse_graph, serialize_graph

logger = logging.getLogger(__name__)


class FileRepository:
    """Reads and writes the UTF-8 text files the command line works with."""

    ENCODING = "utf-8"

    def read_text(self, path: Path) -> str:
        try:
            text = Path(path).read_text(encoding=self.ENCODING)
        except (OSError, UnicodeDecodeError) as error:
            raise FileRepositoryError(path=str(path), error_details=str(error)) from error
        logger.debug("📦 Read %s characters from %s", len(text), path)
        return text

    def write_text(self, path: Path, text: str) -> None:
        try:
            Path(path).write_text(text, encoding=self.ENCODING)
        except OSError as error:
            raise FileRepositoryError(path=str(path), error_details=str(error)) from error
        logger.debug("💾 Wrote %s characters to %s", len(text), path)

    def read_graph(self, path: Path) -> MultiGraph:
        return parse_graph(self.read_text(path))

    def write_graph(self, path: Path, graph: MultiGraph) -> None:
        self.write_text(path, serialize_graph(graph))
