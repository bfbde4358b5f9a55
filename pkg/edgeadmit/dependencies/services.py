from functools import lru_cache

from edgeadmit.core.settings import get_settings
from edgeadmit.repositories.files import FileRepository
from edgeadmit.services.carving import CarvingService
from edgeadmit.services.cuts import CutService
from edgeadmit.services.degeneracy import DegeneracyService
from edgeadmit.services.game import GameService
from edgeadmit.services.isomorphism import IsomorphismService
from edgeadmit.services.structure import StructureService

settings = get_settings()


@lru_cache
def get_file_repository() -> FileRepository:
    """Shared reader and writer for graph, certificate and partition files."""
    return FileRepository()


@lru_cache
def get_cut_service() -> CutService:
    """Factory for the cut service, budget taken from the solver settings."""
    return CutService(search_budget=settings.solver.search_budget)


@lru_cache
def get_isomorphism_service() -> IsomorphismService:
    return IsomorphismService(vertex_limit=settings.solver.isomorphism_vertex_limit)


@lru_cache
def get_degeneracy_service() -> DegeneracyService:
    return DegeneracyService(cut_service=get_cut_service())


@lru_cache
def get_game_service() -> GameService:
    return GameService(
        cut_service=get_cut_service(),
        degeneracy_service=get_degeneracy_service(),
        max_rounds_factor=settings.game.max_rounds_factor,
    )


@lru_cache
def get_structure_service() -> StructureService:
    return StructureService(
        cut_service=get_cut_service(),
        step_factor=settings.solver.decomposition_step_factor,
    )


@lru_cache
def get_carving_service() -> CarvingService:
    return CarvingService(
        cut_service=get_cut_service(),
        structure_service=get_structure_service(),
    )
