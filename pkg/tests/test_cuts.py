import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgeadmit.exceptions.cuts import SearchBudgetExceededError
from edgeadmit.exceptions.graph import GraphOperationError
from edgeadmit.exceptions.testkit import OracleBudgetError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.services.cuts import CutService
from edgeadmit.testkit.oracles import brute_cut, brute_supp
from strategies import graphs_with_terminals, multigraphs, speeds


def test_rho_examples(cut_service):
    cycle = MultiGraph.cycle(4)

    assert cut_service.rho(MultiGraph.theta(3), {0}) == 3
    assert cut_service.rho(cycle, cycle.vertices) == 0
    assert cut_service.rho(cycle, {0, 1}) == 2


@pytest.mark.parametrize(
    ("graph", "x", "y", "speed", "expected"),
    [
        (MultiGraph.theta(3), 0, 1, None, 3),
        (MultiGraph.path(3), 0, 2, 1, 0),
        (MultiGraph.cycle(4), 0, 2, None, 2),
        (MultiGraph.path(3), 0, 2, 2, 1),
        (MultiGraph.cycle(6), 0, 3, 3, 2),
        (MultiGraph.cycle(6), 0, 3, 2, 0),
    ],
)
def test_min_s_cut_examples(cut_service, graph, x, y, speed, expected):
    blocking = cut_service.min_s_cut(graph, x, y, speed)

    assert blocking.size == expected
    assert cut_service.is_blocking(graph, speed, x, [y], blocking.edges)


def test_min_s_cut_bounded_speed_ignores_long_detours(cut_service):
    # Direct edge plus a detour of length 5; only the direct edge matters for s = 3.
    graph = MultiGraph.from_pairs(6, [(0, 1), (0, 2), (2, 3), (3, 4), (4, 5), (5, 1)])

    assert cut_service.min_s_cut(graph, 0, 1, 3).edges == (0,)
    assert cut_service.min_s_cut(graph, 0, 1, None).size == 2


def test_min_s_cut_rejects_equal_terminals(cut_service):
    with pytest.raises(GraphOperationError):
        cut_service.min_s_cut(MultiGraph.path(3), 1, 1, None)


def test_min_s_cut_rejects_nonpositive_speed(cut_service):
    with pytest.raises(GraphOperationError):
        cut_service.min_s_cut(MultiGraph.path(3), 0, 2, 0)


def test_bounded_search_respects_budget():
    exhausted = CutService(search_budget=0)

    with pytest.raises(SearchBudgetExceededError) as error:
        exhausted.min_s_cut(MultiGraph.cycle(6), 0, 3, 3)
    assert error.value.exit_code == 3


def test_supp_examples(cut_service):
    star = MultiGraph.star(3)

    assert cut_service.supp(MultiGraph.theta(3), None, 0, {1}).size == 3
    assert cut_service.supp(star, None, 0, set()).size == 0
    assert cut_service.supp(star, None, 0, {1, 2, 3}).size == 3
    assert cut_service.supp(star, None, 1, {2, 3}).targets == (2, 3)


def test_supp_rejects_source_in_targets(cut_service):
    with pytest.raises(GraphOperationError):
        cut_service.supp(MultiGraph.path(3), None, 1, {1, 2})


@pytest.mark.parametrize(
    ("graph", "x", "y", "expected"),
    [
        (MultiGraph.theta(3), 0, 1, 3),
        (MultiGraph.path(3), 0, 2, 1),
        (MultiGraph.complete(4), 1, 3, 3),
    ],
)
def test_max_edge_disjoint_paths_examples(cut_service, graph, x, y, expected):
    paths = cut_service.max_edge_disjoint_paths(graph, x, y)

    assert paths.count == expected
    used = [edge_id for path in paths.paths for edge_id in path]
    assert len(used) == len(set(used))
    for vertex_path in paths.vertex_paths:
        assert vertex_path[0] == x and vertex_path[-1] == y


def test_min_cut_partition_side_holds_source(cut_service):
    cut = cut_service.min_cut_partition(MultiGraph.cycle(4), 0, 2)

    assert 0 in cut.side and 2 not in cut.side
    assert cut.size == 2


def test_brute_cut_refuses_large_graphs():
    with pytest.raises(OracleBudgetError):
        brute_cut(MultiGraph.theta(31), 0, 1, None)


def assert_submodular(graph, first, second):
    x = {v for v in first if graph.has_vertex(v)}
    y = {v for v in second if graph.has_vertex(v)}
    service = CutService(search_budget=1000)

    assert service.rho(graph, x & y) + service.rho(graph, x | y) <= service.rho(graph, x) + service.rho(graph, y)


@settings(max_examples=200, deadline=None)
@given(
    multigraphs(max_vertices=7, max_edges=12, min_vertices=1),
    st.lists(st.integers(0, 6), max_size=7),
    st.lists(st.integers(0, 6), max_size=7),
)
def test_rho_is_submodular(graph, first, second):
    assert_submodular(graph, first, second)


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(
    multigraphs(max_vertices=8, max_edges=14, min_vertices=1),
    st.lists(st.integers(0, 7), max_size=8),
    st.lists(st.integers(0, 7), max_size=8),
)
def test_rho_is_submodular_on_larger_graphs(graph, first, second):
    assert_submodular(graph, first, second)


@settings(max_examples=80, deadline=None)
@given(graphs_with_terminals(max_vertices=6, max_edges=10), speeds)
def test_min_s_cut_matches_brute_force(cut_service, case, speed):
    graph, x, y = case

    blocking = cut_service.min_s_cut(graph, x, y, speed)

    assert blocking.size == brute_cut(graph, x, y, speed)
    assert cut_service.is_blocking(graph, speed, x, [y], blocking.edges)


@settings(max_examples=80, deadline=None)
@given(graphs_with_terminals(max_vertices=6, max_edges=12))
def test_two_path_closed_form_matches_brute_force(cut_service, case):
    graph, x, y = case

    assert cut_service.min_s_cut(graph, x, y, 2).size == brute_cut(graph, x, y, 2)


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_vertices=6, max_edges=10, min_vertices=2), speeds, st.data())
def test_supp_matches_brute_force(cut_service, graph, speed, data):
    x = data.draw(st.sampled_from(graph.sorted_vertices()))
    others = [v for v in graph.sorted_vertices() if v != x]
    targets = frozenset(data.draw(st.lists(st.sampled_from(others), max_size=len(others))))

    assert cut_service.supp(graph, speed, x, targets).size == brute_supp(graph, speed, x, targets)


@settings(max_examples=60, deadline=None)
@given(graphs_with_terminals(max_vertices=6, max_edges=10))
def test_menger(cut_service, case):
    graph, x, y = case

    assert cut_service.max_edge_disjoint_paths(graph, x, y).count == cut_service.min_s_cut(graph, x, y, None).size


@pytest.mark.slow
@settings(max_examples=200, deadline=None)
@given(graphs_with_terminals(max_vertices=8, max_edges=14), speeds)
def test_min_s_cut_matches_brute_force_on_larger_graphs(cut_service, case, speed):
    graph, x, y = case

    blocking = cut_service.min_s_cut(graph, x, y, speed)

    assert blocking.size == brute_cut(graph, x, y, speed)
    assert cut_service.is_blocking(graph, speed, x, [y], blocking.edges)


@pytest.mark.slow
@settings(max_examples=500, deadline=None)
@given(graphs_with_terminals(max_vertices=8, max_edges=14))
def test_two_path_closed_form_on_larger_graphs(cut_service, case):
    graph, x, y = case

    assert cut_service.min_s_cut(graph, x, y, 2).size == brute_cut(graph, x, y, 2)
