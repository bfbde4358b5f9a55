import logging

from edgeadmit.exceptions.testkit import GadgetError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.testkit import GadgetInstance

logger = logging.getLogger(__name__)


def gadget(graph: MultiGraph, a: int, b: int, k: int, speed: int) -> GadgetInstance:
    """
    Reduces `cut_{G,s}(a, b) <= k` to `s-edge-degeneracy <= k + n`.

    Vertex ids: a = 0, then the copies of the other vertices copy by copy
    (original vertices in increasing order), then c_1..c_n, then the
    internal vertices of the subdivision paths.

    Raises:
        GadgetError: If a == b, a terminal is missing, k < 0 or s is not a finite integer >= 2.
    """
    if a == b or not graph.has_vertex(a) or not graph.has_vertex(b):
        raise GadgetError(f"terminals must be two distinct vertices of G, got {a} and {b}")
    if k < 0:
        raise GadgetError(f"k must be nonnegative, got {k}")
    if speed is None or speed < 2:
        raise GadgetError(f"speed must be a finite integer >= 2, got {speed}")

    n = graph.number_of_vertices()
    copies = k + n + 1
    others = [vertex for vertex in graph.sorted_vertices() if vertex != a]
    names = {0: "a"}
    copy_of: dict[tuple[int, int], int] = {}
    next_vertex = 1
    for j in range(1, copies + 1):
        copy_of[(j, a)] = 0
        for vertex in others:
            copy_of[(j, vertex)] = next_vertex
            names[next_vertex] = f"copy_{j}/orig_{vertex}"
            next_vertex += 1

    c_vertices = []
    for i in range(1, n + 1):
        names[next_vertex] = f"c_{i}"
        c_vertices.append(next_vertex)
        next_vertex += 1

    pairs = []
    for j in range(1, copies + 1):
        for _, u, v in graph.edges():
            pairs.append((copy_of[(j, u)], copy_of[(j, v)]))

    b_vertices = [copy_of[(j, b)] for j in range(1, copies + 1)]
    paths = {}
    for i, c_vertex in enumerate(c_vertices, start=1):
        for j, b_vertex in enumerate(b_vertices, start=1):
            route = [c_vertex]
            for h in range(1, speed):
                names[next_vertex] = f"p_{i}_{j}_{h}"
                route.append(next_vertex)
                next_vertex += 1
            route.append(b_vertex)
            pairs.extend(zip(route, route[1:]))
            paths[f"{i},{j}"] = tuple(route)

    result = MultiGraph.from_pairs(next_vertex, pairs)
    logger.info(
        "✅ Gadget built: n=%s k=%s s=%s -> %s vertices, %s edges",
        n, k, speed, result.number_of_vertices(), result.number_of_edges(),
    )
    return GadgetInstance(
        graph=result,
        source_order=n,
        k=k,
        speed=speed,
        a=0,
        b_vertices=tuple(b_vertices),
        c_vertices=tuple(c_vertices),
        names=names,
        paths=paths,
    )


def expected_order(n: int, k: int, speed: int) -> int:
    """Vertex count of the gadget: (n-1)(k+n+1) + 1 + n + n(k+n+1)(s-1)."""
    copies = k + n + 1
    return (n - 1) * copies + 1 + n + n * copies * (speed - 1)
