import pytest

from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.services.carving import CarvingService
from edgeadmit.services.cuts import CutService
from edgeadmit.services.degeneracy import DegeneracyService
from edgeadmit.services.game import GameService
from edgeadmit.services.isomorphism import IsomorphismService
from edgeadmit.services.structure import StructureService


@pytest.fixture(scope="session")
def cut_service() -> CutService:
    return CutService(search_budget=1_000_000)


@pytest.fixture(scope="session")
def degeneracy_service(cut_service: CutService) -> DegeneracyService:
    return DegeneracyService(cut_service=cut_service)


@pytest.fixture(scope="session")
def game_service(cut_service: CutService, degeneracy_service: DegeneracyService) -> GameService:
    return GameService(cut_service=cut_service, degeneracy_service=degeneracy_service, max_rounds_factor=10)


@pytest.fixture(scope="session")
def structure_service(cut_service: CutService) -> StructureService:
    return StructureService(cut_service=cut_service)


@pytest.fixture(scope="session")
def carving_service(cut_service: CutService, structure_service: StructureService) -> CarvingService:
    return CarvingService(cut_service=cut_service, structure_service=structure_service)


@pytest.fixture(scope="session")
def isomorphism_service() -> IsomorphismService:
    return IsomorphismService(vertex_limit=12)


@pytest.fixture(scope="session")
def double_star() -> MultiGraph:
    """Two K_{1,5} with centers 0 and 6, leaves 5 and 11 joined by an edge."""
    pairs = [(0, leaf) for leaf in range(1, 6)] + [(6, leaf) for leaf in range(7, 12)] + [(5, 11)]
    return MultiGraph.from_pairs(12, pairs)

