"""Seeded graph generators for property tests and the `gen` command."""
import logging
import random

from pydantic import ValidationError

from edgeadmit.dependencies.services import get_structure_service
from edgeadmit.exceptions.testkit import CorpusSpecError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.game import CopStrategy
from edgeadmit.schemas.structure import EdgeSumSpec
from edgeadmit.schemas.testkit import CorpusSpec, EdgeSumStep, GeneratedGraph, ImmersionStep
from edgeadmit.services.structure import StructureService
from edgeadmit.utils.graph_format import compact_labels

logger = logging.getLogger(__name__)

DEFAULTS = {
    'random': {'n': 6, 'm': 9},
    'bounded': {'n': 8, 'k': 3, 'm': 12},
    'edge-sum': {'k': 3, 'parts': 3, 'size': 2},
    'planted-theta': {'k': 3, 'parts': 3, 'size': 2},
}


def parse_corpus_spec(text: str) -> CorpusSpec:
    """
    Parses `kind:key=value,...:seed`; the parameter list may be empty.

    Raises:
        CorpusSpecError: On unknown kinds or parameters, or non-integer values.
    """
    parts = text.strip().split(":")
    if len(parts) != 3:
        raise CorpusSpecError(text, "expected `kind:key=value,...:seed`")
    kind, params_text, seed_text = parts
    if kind not in DEFAULTS:
        raise CorpusSpecError(text, f"unknown kind {kind!r}, expected one of {sorted(DEFAULTS)}")
    params = {}
    try:
        for item in filter(None, params_text.split(",")):
            key, separator, value = item.partition("=")
            if not separator:
                raise CorpusSpecError(text, f"parameter {item!r} is not key=value")
            if key not in DEFAULTS[kind]:
                raise CorpusSpecError(text, f"unknown parameter {key!r} for {kind}")
            params[key.strip()] = int(value)
        return CorpusSpec(kind=kind, params=params, seed=int(seed_text))
    except (ValueError, ValidationError) as error:
        raise CorpusSpecError(text, str(error)) from error


def _params(spec: CorpusSpec) -> dict[str, int]:
    values = dict(DEFAULTS[spec.kind])
    values.update(spec.params)
    for key, value in values.items():
        if value < 0 or (key in ('n', 'k', 'parts') and value < 1):
            raise CorpusSpecError(str(spec), f"parameter {key}={value} is out of range")
    return values


def generate(spec: CorpusSpec, structure_service: StructureService | None = None) -> GeneratedGraph:
    """Same spec, same graph. Vertices of the result are 0..n-1."""
    params = _params(spec)
    rng = random.Random(spec.seed)
    if spec.kind == 'random':
        result = GeneratedGraph(spec=spec, graph=_random_multigraph(rng, params['n'], params['m']))
    elif spec.kind == 'bounded':
        result = GeneratedGraph(spec=spec, graph=_bounded_degree(rng, params['n'], params['k'], params['m']))
    else:
        service = structure_service or get_structure_service()
        graph, steps = _edge_sum_composition(rng, service, params['k'], params['parts'], params['size'])
        planted = None
        if spec.kind == 'planted-theta':
            u, v = rng.sample(graph.sorted_vertices(), 2)
            graph = graph.with_edges([(u, v)] * (params['k'] + 1))
            planted = (min(u, v), max(u, v))
        graph, mapping = compact_labels(graph)
        if planted is not None:
            planted = tuple(sorted((mapping[planted[0]], mapping[planted[1]])))
        result = GeneratedGraph(spec=spec, graph=graph.renumber_edges(), steps=tuple(steps), planted=planted)
    logger.debug(
        "📦 Generated %s: n=%s m=%s", spec, result.graph.number_of_vertices(), result.graph.number_of_edges()
    )
    return result


def _random_multigraph(rng: random.Random, n: int, m: int) -> MultiGraph:
    """m endpoint pairs drawn uniformly with replacement; loops are redrawn."""
    pairs = []
    while n >= 2 and len(pairs) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            pairs.append((u, v))
    return MultiGraph.from_pairs(n, pairs)


def _bounded_degree(rng: random.Random, n: int, k: int, m: int) -> MultiGraph:
    """Up to m random edges, skipping any that would push a degree above k."""
    degree = [0] * n
    pairs = []
    for _ in range(m * 4):
        if len(pairs) >= m or n < 2:
            break
        u, v = rng.sample(range(n), 2)
        if degree[u] < k and degree[v] < k:
            pairs.append((u, v))
            degree[u] += 1
            degree[v] += 1
    return MultiGraph.from_pairs(n, pairs)


def _almost_bounded_part(
    rng: random.Random, k: int, size: int, ports: list[int], offset: int
) -> tuple[MultiGraph, list[int]]:
    """
    Part with a center of unbounded degree and every other vertex of degree at most k.

    Vertex `offset` is the center, the next `size` are inner vertices and then
    one vertex per entry of `ports`, joined to the center by that many edges.
    """
    center = offset
    inner = list(range(offset + 1, offset + 1 + size))
    port_vertices = list(range(offset + 1 + size, offset + 1 + size + len(ports)))
    degree = {vertex: 0 for vertex in inner}
    pairs = []
    for vertex in inner:
        for _ in range(rng.randint(1, k)):
            if degree[vertex] >= k:
                break
            partners = [u for u in inner if u != vertex and degree[u] < k]
            if partners and rng.random() < 0.4:
                partner = rng.choice(partners)
                degree[partner] += 1
            else:
                partner = center
            pairs.append((vertex, partner))
            degree[vertex] += 1
    for port, port_degree in zip(port_vertices, ports):
        pairs.extend([(port, center)] * port_degree)

    vertices = [center, *inner, *port_vertices]
    graph = MultiGraph(vertices=vertices, edges=((i, u, v) for i, (u, v) in enumerate(pairs)))
    return graph, port_vertices


def _edge_sum_composition(
    rng: random.Random, service: StructureService, k: int, parts: int, size: int
) -> tuple[MultiGraph, list[EdgeSumStep]]:
    """
    Chains `parts` almost-bounded parts by edge-sums of degree at most k.

    Every part but the last carries an outgoing port; every part but the
    first carries an incoming port of the same degree as the previous
    outgoing one.
    """
    degrees = [rng.randint(1, k) for _ in range(parts - 1)]
    offset = 0
    first_ports = degrees[:1]
    graph, ports = _almost_bounded_part(rng, k, size, first_ports, offset)
    open_port = ports[0] if ports else None
    offset = max(graph.vertices) + 1
    steps = []
    for index in range(1, parts):
        wanted = [degrees[index - 1]]
        if index < parts - 1:
            wanted.append(degrees[index])
        part, part_ports = _almost_bounded_part(rng, k, size, wanted, offset)
        offset = max(part.vertices) + 1

        incoming = part_ports[0]
        first_edges = list(graph.incident_edges(open_port))
        second_edges = list(part.incident_edges(incoming))
        rng.shuffle(second_edges)
        sigma = dict(zip(first_edges, second_edges))
        graph = service.edge_sum(
            EdgeSumSpec(first=graph, second=part, first_vertex=open_port, second_vertex=incoming, sigma=sigma)
        )
        steps.append(
            EdgeSumStep(part=index, first_vertex=open_port, second_vertex=incoming, degree=len(sigma), sigma=sigma)
        )
        open_port = part_ports[1] if len(part_ports) > 1 else None
    return graph, steps


def random_cop_strategy(graph: MultiGraph, k: int, rng: random.Random) -> CopStrategy:
    """Blocks k edges drawn uniformly at every vertex (all edges when fewer exist)."""
    edge_ids = list(graph.edge_ids)
    count = min(k, len(edge_ids))
    return CopStrategy(
        blocks={vertex: tuple(sorted(rng.sample(edge_ids, count))) for vertex in graph.sorted_vertices()}
    )


def random_immersion_steps(
    graph: MultiGraph, rng: random.Random, count: int
) -> tuple[MultiGraph, list[ImmersionStep]]:
    """Applies up to `count` random edge deletions and lifts; the result is immersed in the input."""
    steps = []
    current = graph
    for _ in range(count):
        lifts = [
            (e, f)
            for vertex in current.sorted_vertices()
            for position, e in enumerate(current.incident_edges(vertex))
            for f in current.incident_edges(vertex)[position + 1:]
            if current.endpoints(e) != current.endpoints(f)
        ]
        if lifts and rng.random() < 0.5:
            e, f = rng.choice(lifts)
            current = current.lift(e, f)
            steps.append(ImmersionStep(kind='lift', edges=(e, f)))
        elif current.number_of_edges():
            edge_id = rng.choice(current.edge_ids)
            current = current.delete_edges([edge_id])
            steps.append(ImmersionStep(kind='delete', edges=(edge_id,)))
    return current, steps
